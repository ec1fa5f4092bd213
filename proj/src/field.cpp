#include "field.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace innskit {

// ---------------------------------------------------------------- primality

static std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

static std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// deterministic Miller-Rabin for 64-bit integers
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

// ---------------------------------------------------------------- FieldSpec

struct FieldSpec::data {
  field_kind kind;
  std::uint64_t p = 0;
  std::string parameter;
  std::shared_ptr<const data> base;
};

static std::shared_ptr<const FieldSpec::data> qq_singleton() {
  static auto d = [] {
    auto r = std::make_shared<FieldSpec::data>();
    r->kind = field_kind::rationals;
    return r;
  }();
  return d;
}

FieldSpec::FieldSpec(std::shared_ptr<const data> d) : d_(std::move(d)) {}
FieldSpec::FieldSpec() : d_(qq_singleton()) {}
FieldSpec FieldSpec::rationals() { return FieldSpec(qq_singleton()); }

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p >= (1ULL << 62) || !is_prime_u64(p))
    fail(errc::usage_error, "prime field characteristic must be a word-sized prime, got " + std::to_string(p));
  auto d = std::make_shared<data>();
  d->kind = field_kind::prime_field;
  d->p = p;
  return FieldSpec(std::move(d));
}

FieldSpec FieldSpec::rational_functions(const FieldSpec& base, const std::string& parameter) {
  if (base.kind() == field_kind::rational_functions)
    fail(errc::usage_error, "nested rational function fields are not supported");
  if (parameter.empty())
    fail(errc::usage_error, "rational function field needs a parameter name");
  auto d = std::make_shared<data>();
  d->kind = field_kind::rational_functions;
  d->p = base.prime();
  d->parameter = parameter;
  d->base = base.d_;
  return FieldSpec(std::move(d));
}

field_kind FieldSpec::kind() const { return d_->kind; }
std::uint64_t FieldSpec::prime() const { return d_->p; }
std::uint64_t FieldSpec::characteristic() const { return d_->p; }

const FieldSpec& FieldSpec::base() const {
  if (d_->kind != field_kind::rational_functions)
    fail(errc::internal, "base() on a non-function field");
  static thread_local FieldSpec holder;
  holder = FieldSpec(d_->base);
  return holder;
}

const std::string& FieldSpec::parameter() const { return d_->parameter; }

bool FieldSpec::operator==(const FieldSpec& o) const {
  if (d_ == o.d_) return true;
  return d_->kind == o.d_->kind && d_->p == o.d_->p && d_->parameter == o.d_->parameter;
}

std::string FieldSpec::str() const {
  switch (d_->kind) {
    case field_kind::rationals: return "QQ";
    case field_kind::prime_field: return "F" + std::to_string(d_->p);
    case field_kind::rational_functions:
      return (d_->p ? "F" + std::to_string(d_->p) : std::string("QQ")) + "(" + d_->parameter + ")";
  }
  return "?";
}

// ---------------------------------------------------------------- upoly / ufrac

namespace detail {

fp_ctx::elt fp_ctx::inv(elt a) const {
  if (a == 0) fail(errc::division_by_zero, "inverse of 0 in F_p");
  // extended Euclid on signed 128-bit intermediates
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt; t = newt; newt = tmp;
    tmp = r - q * newr; r = newr; newr = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<elt>(t);
}

template <class Ctx> static void trim(upoly<Ctx>& f, const Ctx& k) {
  while (!f.c.empty() && Ctx::is_zero(f.c.back())) f.c.pop_back();
  (void)k;
}

template <class Ctx> static upoly<Ctx> u_const(const typename Ctx::elt& a, const Ctx& k) {
  upoly<Ctx> r;
  if (!Ctx::is_zero(a)) r.c.push_back(a);
  (void)k;
  return r;
}

template <class Ctx> static upoly<Ctx> u_add(const upoly<Ctx>& a, const upoly<Ctx>& b, const Ctx& k) {
  upoly<Ctx> r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Ctx::zero());
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = k.add(r.c[i], b.c[i]);
  trim(r, k);
  return r;
}

template <class Ctx> static upoly<Ctx> u_neg(const upoly<Ctx>& a, const Ctx& k) {
  upoly<Ctx> r = a;
  for (auto& x : r.c) x = k.neg(x);
  return r;
}

template <class Ctx> static upoly<Ctx> u_sub(const upoly<Ctx>& a, const upoly<Ctx>& b, const Ctx& k) {
  return u_add(a, u_neg(b, k), k);
}

template <class Ctx> static upoly<Ctx> u_mul(const upoly<Ctx>& a, const upoly<Ctx>& b, const Ctx& k) {
  upoly<Ctx> r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, Ctx::zero());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (Ctx::is_zero(a.c[i])) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = k.add(r.c[i + j], k.mul(a.c[i], b.c[j]));
  }
  trim(r, k);
  return r;
}

// division with remainder; b nonzero
template <class Ctx>
static void u_divrem(const upoly<Ctx>& a, const upoly<Ctx>& b, upoly<Ctx>& q, upoly<Ctx>& rem, const Ctx& k) {
  q.c.clear();
  rem = a;
  if (b.is_zero()) fail(errc::division_by_zero, "univariate division by zero");
  if (a.deg() >= b.deg()) q.c.assign(a.deg() - b.deg() + 1, Ctx::zero());
  const auto& lead = b.c.back();
  while (!rem.is_zero() && rem.deg() >= b.deg()) {
    auto coef = k.div(rem.c.back(), lead);
    int shift = rem.deg() - b.deg();
    q.c[shift] = k.add(q.c[shift], coef);
    for (size_t i = 0; i < b.c.size(); ++i)
      rem.c[i + shift] = k.sub(rem.c[i + shift], k.mul(coef, b.c[i]));
    trim(rem, k);
  }
  trim(q, k);
}

template <class Ctx> static upoly<Ctx> u_monic(const upoly<Ctx>& a, const Ctx& k) {
  if (a.is_zero()) return a;
  upoly<Ctx> r = a;
  auto lead = r.c.back();
  for (auto& x : r.c) x = k.div(x, lead);
  return r;
}

template <class Ctx> static upoly<Ctx> u_gcd(upoly<Ctx> a, upoly<Ctx> b, const Ctx& k) {
  while (!b.is_zero()) {
    upoly<Ctx> q, r;
    u_divrem(a, b, q, r, k);
    a = std::move(b);
    b = std::move(r);
  }
  return u_monic(a, k);
}

template <class Ctx> static void f_canonicalize(ufrac<Ctx>& f, const Ctx& k) {
  if (f.den.is_zero()) fail(errc::division_by_zero, "zero denominator in k(t)");
  if (f.num.is_zero()) {
    f.den = u_const<Ctx>(Ctx::one(), k);
    return;
  }
  upoly<Ctx> g = u_gcd(f.num, f.den, k);
  if (g.deg() > 0) {
    upoly<Ctx> q, r;
    u_divrem(f.num, g, q, r, k);
    f.num = q;
    u_divrem(f.den, g, q, r, k);
    f.den = q;
  }
  // monic denominator
  auto lead = f.den.c.back();
  if (!(lead == Ctx::one())) {
    for (auto& x : f.den.c) x = k.div(x, lead);
    for (auto& x : f.num.c) x = k.div(x, lead);
  }
}

template <class Ctx>
static ufrac<Ctx> f_add(const ufrac<Ctx>& a, const ufrac<Ctx>& b, const Ctx& k, bool sub) {
  ufrac<Ctx> r;
  upoly<Ctx> bn = sub ? u_neg(b.num, k) : b.num;
  r.num = u_add(u_mul(a.num, b.den, k), u_mul(bn, a.den, k), k);
  r.den = u_mul(a.den, b.den, k);
  f_canonicalize(r, k);
  return r;
}

template <class Ctx>
static ufrac<Ctx> f_mul(const ufrac<Ctx>& a, const ufrac<Ctx>& b, const Ctx& k) {
  ufrac<Ctx> r;
  r.num = u_mul(a.num, b.num, k);
  r.den = u_mul(a.den, b.den, k);
  f_canonicalize(r, k);
  return r;
}

template <class Ctx>
static ufrac<Ctx> f_div(const ufrac<Ctx>& a, const ufrac<Ctx>& b, const Ctx& k) {
  if (b.num.is_zero()) fail(errc::division_by_zero, "division by zero in k(t)");
  ufrac<Ctx> r;
  r.num = u_mul(a.num, b.den, k);
  r.den = u_mul(a.den, b.num, k);
  f_canonicalize(r, k);
  return r;
}

} // namespace detail

using detail::qq_ctx;
using detail::fp_ctx;
using detail::qfrac;
using detail::pfrac;

// ---------------------------------------------------------------- Scalar

Scalar::Scalar() : spec_(FieldSpec::rationals()), rep_(mpq_class(0)) {}

Scalar Scalar::zero(const FieldSpec& f) { return from_int(f, 0); }
Scalar Scalar::one(const FieldSpec& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldSpec& f, long v) {
  return from_mpz(f, mpz_class(v));
}

Scalar Scalar::from_mpz(const FieldSpec& f, const mpz_class& v) {
  Scalar s;
  s.spec_ = f;
  switch (f.kind()) {
    case field_kind::rationals:
      s.rep_ = mpq_class(v);
      break;
    case field_kind::prime_field: {
      mpz_class m = v % static_cast<unsigned long>(f.prime());
      if (m < 0) m += static_cast<unsigned long>(f.prime());
      s.rep_ = static_cast<std::uint64_t>(m.get_ui());
      break;
    }
    case field_kind::rational_functions: {
      Scalar b = from_mpz(f.base(), v);
      if (f.prime() == 0) {
        qfrac fr;
        qq_ctx k;
        fr.num = detail::u_const<qq_ctx>(b.rational(), k);
        fr.den = detail::u_const<qq_ctx>(mpq_class(1), k);
        s.rep_ = std::move(fr);
      } else {
        pfrac fr;
        fp_ctx k{f.prime()};
        fr.num = detail::u_const<fp_ctx>(b.residue(), k);
        fr.den = detail::u_const<fp_ctx>(1, k);
        s.rep_ = std::move(fr);
      }
      break;
    }
  }
  return s;
}

Scalar Scalar::from_mpq(const FieldSpec& f, const mpq_class& v) {
  if (f.kind() == field_kind::rationals) {
    Scalar s;
    s.spec_ = f;
    mpq_class c = v;
    c.canonicalize();
    s.rep_ = std::move(c);
    return s;
  }
  Scalar num = from_mpz(f, mpz_class(v.get_num()));
  Scalar den = from_mpz(f, mpz_class(v.get_den()));
  return num / den;
}

Scalar Scalar::parameter(const FieldSpec& f) {
  if (f.kind() != field_kind::rational_functions)
    fail(errc::internal, "parameter() needs a rational function field");
  Scalar s;
  s.spec_ = f;
  if (f.prime() == 0) {
    qfrac fr;
    fr.num.c = {mpq_class(0), mpq_class(1)};
    fr.den.c = {mpq_class(1)};
    s.rep_ = std::move(fr);
  } else {
    pfrac fr;
    fr.num.c = {0, 1};
    fr.den.c = {1};
    s.rep_ = std::move(fr);
  }
  return s;
}

void Scalar::check_same(const Scalar& o) const {
  if (spec_ != o.spec_)
    fail(errc::field_mismatch, spec_.str() + " vs " + o.spec_.str());
}

bool Scalar::is_zero() const {
  switch (rep_.index()) {
    case 0: return sgn(std::get<0>(rep_)) == 0;
    case 1: return std::get<1>(rep_) == 0;
    case 2: return std::get<2>(rep_).num.is_zero();
    default: return std::get<3>(rep_).num.is_zero();
  }
}

bool Scalar::is_one() const {
  switch (rep_.index()) {
    case 0: return std::get<0>(rep_) == 1;
    case 1: return std::get<1>(rep_) == 1;
    case 2: {
      const auto& f = std::get<2>(rep_);
      return f.num.deg() == 0 && f.den.deg() == 0 && f.num.c[0] == 1;
    }
    default: {
      const auto& f = std::get<3>(rep_);
      return f.num.deg() == 0 && f.den.deg() == 0 && f.num.c[0] == 1;
    }
  }
}

bool Scalar::operator==(const Scalar& o) const {
  if (spec_ != o.spec_) return false;
  if (rep_.index() != o.rep_.index()) return false;
  switch (rep_.index()) {
    case 0: return std::get<0>(rep_) == std::get<0>(o.rep_);
    case 1: return std::get<1>(rep_) == std::get<1>(o.rep_);
    case 2: {
      const auto& a = std::get<2>(rep_);
      const auto& b = std::get<2>(o.rep_);
      return a.num.c == b.num.c && a.den.c == b.den.c;
    }
    default: {
      const auto& a = std::get<3>(rep_);
      const auto& b = std::get<3>(o.rep_);
      return a.num.c == b.num.c && a.den.c == b.den.c;
    }
  }
}

Scalar field_arith(const Scalar& a, const Scalar& b, field_op op) {
  switch (op) {
    case field_op::add: return a + b;
    case field_op::sub: return a - b;
    case field_op::mul: return a * b;
    case field_op::div: return a / b;
  }
  fail(errc::internal, "bad field_op");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar r;
  r.spec_ = spec_;
  switch (rep_.index()) {
    case 0: r.rep_ = mpq_class(std::get<0>(rep_) + std::get<0>(o.rep_)); break;
    case 1: {
      fp_ctx k{spec_.prime()};
      r.rep_ = k.add(std::get<1>(rep_), std::get<1>(o.rep_));
      break;
    }
    case 2: r.rep_ = detail::f_add(std::get<2>(rep_), std::get<2>(o.rep_), qq_ctx{}, false); break;
    default: r.rep_ = detail::f_add(std::get<3>(rep_), std::get<3>(o.rep_), fp_ctx{spec_.prime()}, false); break;
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar r;
  r.spec_ = spec_;
  switch (rep_.index()) {
    case 0: r.rep_ = mpq_class(std::get<0>(rep_) - std::get<0>(o.rep_)); break;
    case 1: {
      fp_ctx k{spec_.prime()};
      r.rep_ = k.sub(std::get<1>(rep_), std::get<1>(o.rep_));
      break;
    }
    case 2: r.rep_ = detail::f_add(std::get<2>(rep_), std::get<2>(o.rep_), qq_ctx{}, true); break;
    default: r.rep_ = detail::f_add(std::get<3>(rep_), std::get<3>(o.rep_), fp_ctx{spec_.prime()}, true); break;
  }
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar r;
  r.spec_ = spec_;
  switch (rep_.index()) {
    case 0: r.rep_ = mpq_class(std::get<0>(rep_) * std::get<0>(o.rep_)); break;
    case 1: {
      fp_ctx k{spec_.prime()};
      r.rep_ = k.mul(std::get<1>(rep_), std::get<1>(o.rep_));
      break;
    }
    case 2: r.rep_ = detail::f_mul(std::get<2>(rep_), std::get<2>(o.rep_), qq_ctx{}); break;
    default: r.rep_ = detail::f_mul(std::get<3>(rep_), std::get<3>(o.rep_), fp_ctx{spec_.prime()}); break;
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  if (o.is_zero()) fail(errc::division_by_zero, "scalar division by zero");
  Scalar r;
  r.spec_ = spec_;
  switch (rep_.index()) {
    case 0: r.rep_ = mpq_class(std::get<0>(rep_) / std::get<0>(o.rep_)); break;
    case 1: {
      fp_ctx k{spec_.prime()};
      r.rep_ = k.div(std::get<1>(rep_), std::get<1>(o.rep_));
      break;
    }
    case 2: r.rep_ = detail::f_div(std::get<2>(rep_), std::get<2>(o.rep_), qq_ctx{}); break;
    default: r.rep_ = detail::f_div(std::get<3>(rep_), std::get<3>(o.rep_), fp_ctx{spec_.prime()}); break;
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.spec_ = spec_;
  switch (rep_.index()) {
    case 0: r.rep_ = mpq_class(-std::get<0>(rep_)); break;
    case 1: {
      fp_ctx k{spec_.prime()};
      r.rep_ = k.neg(std::get<1>(rep_));
      break;
    }
    case 2: {
      qfrac f = std::get<2>(rep_);
      f.num = detail::u_neg(f.num, qq_ctx{});
      r.rep_ = std::move(f);
      break;
    }
    default: {
      pfrac f = std::get<3>(rep_);
      f.num = detail::u_neg(f.num, fp_ctx{spec_.prime()});
      r.rep_ = std::move(f);
      break;
    }
  }
  return r;
}

Scalar Scalar::inv() const { return one(spec_) / *this; }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar r = one(spec_);
  Scalar b = *this;
  unsigned long n = static_cast<unsigned long>(e);
  while (n) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

bool Scalar::has_pth_root() const {
  std::uint64_t p = spec_.characteristic();
  if (p == 0) return false;
  if (spec_.kind() == field_kind::prime_field) return true;
  auto rootable = [p](const std::vector<std::uint64_t>& c) {
    for (size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0 && i % p != 0) return false;
    return true;
  };
  const auto& f = std::get<3>(rep_);
  return rootable(f.num.c) && rootable(f.den.c);
}

Scalar Scalar::pth_root() const {
  std::uint64_t p = spec_.characteristic();
  if (p == 0) fail(errc::usage_error, "p-th root requested in characteristic 0");
  if (spec_.kind() == field_kind::prime_field) return *this; // a^p = a
  if (!has_pth_root())
    fail(errc::inseparable_unsupported,
         "element of " + spec_.str() + " has no p-th root: " + str());
  auto deflate = [p](const detail::upoly<fp_ctx>& f) {
    detail::upoly<fp_ctx> r;
    if (f.is_zero()) return r;
    r.c.assign(f.c.size() / p + 1, 0);
    for (size_t i = 0; i < f.c.size(); ++i)
      if (f.c[i] != 0) r.c[i / p] = f.c[i]; // coefficients are their own p-th roots in F_p
    while (!r.c.empty() && r.c.back() == 0) r.c.pop_back();
    return r;
  };
  Scalar r;
  r.spec_ = spec_;
  pfrac f = std::get<3>(rep_);
  f.num = deflate(f.num);
  f.den = deflate(f.den);
  detail::f_canonicalize(f, fp_ctx{p});
  r.rep_ = std::move(f);
  return r;
}

const mpq_class& Scalar::rational() const {
  if (spec_.kind() != field_kind::rationals) fail(errc::internal, "rational() on " + spec_.str());
  return std::get<0>(rep_);
}

std::uint64_t Scalar::residue() const {
  if (spec_.kind() != field_kind::prime_field) fail(errc::internal, "residue() on " + spec_.str());
  return std::get<1>(rep_);
}

std::vector<Scalar> Scalar::numerator_coeffs() const {
  if (spec_.kind() != field_kind::rational_functions) fail(errc::internal, "not a k(t) element");
  std::vector<Scalar> out;
  const FieldSpec& b = spec_.base();
  if (spec_.prime() == 0) {
    for (const auto& c : std::get<2>(rep_).num.c) out.push_back(from_mpq(b, c));
  } else {
    for (auto c : std::get<3>(rep_).num.c) out.push_back(from_mpz(b, mpz_class(static_cast<unsigned long>(c))));
  }
  return out;
}

std::vector<Scalar> Scalar::denominator_coeffs() const {
  if (spec_.kind() != field_kind::rational_functions) fail(errc::internal, "not a k(t) element");
  std::vector<Scalar> out;
  const FieldSpec& b = spec_.base();
  if (spec_.prime() == 0) {
    for (const auto& c : std::get<2>(rep_).den.c) out.push_back(from_mpq(b, c));
  } else {
    for (auto c : std::get<3>(rep_).den.c) out.push_back(from_mpz(b, mpz_class(static_cast<unsigned long>(c))));
  }
  return out;
}

Scalar Scalar::from_fraction(const FieldSpec& f, const std::vector<Scalar>& num,
                             const std::vector<Scalar>& den) {
  if (f.kind() != field_kind::rational_functions) fail(errc::internal, "from_fraction needs k(t)");
  Scalar s;
  s.spec_ = f;
  if (f.prime() == 0) {
    qfrac fr;
    for (const auto& c : num) fr.num.c.push_back(c.rational());
    for (const auto& c : den) fr.den.c.push_back(c.rational());
    detail::trim(fr.num, qq_ctx{});
    detail::trim(fr.den, qq_ctx{});
    detail::f_canonicalize(fr, qq_ctx{});
    s.rep_ = std::move(fr);
  } else {
    pfrac fr;
    for (const auto& c : num) fr.num.c.push_back(c.residue());
    for (const auto& c : den) fr.den.c.push_back(c.residue());
    fp_ctx k{f.prime()};
    detail::trim(fr.num, k);
    detail::trim(fr.den, k);
    detail::f_canonicalize(fr, k);
    s.rep_ = std::move(fr);
  }
  return s;
}

Scalar Scalar::evaluate_parameter(const Scalar& value) const {
  if (spec_.kind() != field_kind::rational_functions) fail(errc::internal, "not a k(t) element");
  const FieldSpec& b = spec_.base();
  if (value.spec() != b) fail(errc::field_mismatch, "evaluation point must lie in the base field");
  auto horner = [&](const std::vector<Scalar>& coeffs) {
    Scalar acc = Scalar::zero(b);
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * value + coeffs[i];
    return acc;
  };
  Scalar n = horner(numerator_coeffs());
  Scalar d = horner(denominator_coeffs());
  if (d.is_zero()) fail(errc::division_by_zero, "denominator vanishes at the evaluation point");
  return n / d;
}

static std::string upoly_str_q(const detail::upoly<qq_ctx>& f, const std::string& t) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = f.c.size(); i-- > 0;) {
    if (sgn(f.c[i]) == 0) continue;
    mpq_class c = f.c[i];
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    } else if (sgn(c) < 0) {
      os << "-";
      c = -c;
    }
    first = false;
    bool unit = (c == 1);
    if (i == 0 || !unit) os << c.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << t;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

static std::string upoly_str_p(const detail::upoly<fp_ctx>& f, const std::string& t) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = f.c.size(); i-- > 0;) {
    if (f.c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = (f.c[i] == 1);
    if (i == 0 || !unit) os << f.c[i];
    if (i > 0) {
      if (!unit) os << "*";
      os << t;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::string Scalar::str() const {
  switch (rep_.index()) {
    case 0: return std::get<0>(rep_).get_str();
    case 1: return std::to_string(std::get<1>(rep_));
    case 2: {
      const auto& f = std::get<2>(rep_);
      std::string n = upoly_str_q(f.num, spec_.parameter());
      if (f.den.deg() == 0) return n;
      return "(" + n + ")/(" + upoly_str_q(f.den, spec_.parameter()) + ")";
    }
    default: {
      const auto& f = std::get<3>(rep_);
      std::string n = upoly_str_p(f.num, spec_.parameter());
      if (f.den.deg() == 0) return n;
      return "(" + n + ")/(" + upoly_str_p(f.den, spec_.parameter()) + ")";
    }
  }
}

size_t Scalar::hash() const {
  std::hash<std::string> h;
  return h(str()) ^ (static_cast<size_t>(rep_.index()) << 1);
}

} // namespace innskit
