#ifndef INNSKIT_FIELD_HPP
#define INNSKIT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"

namespace innskit {

enum class field_kind { rationals, prime_field, rational_functions };

// Coefficient domain descriptor: QQ, F_p (word-sized prime p), or the
// rational function field base(parameter). Immutable, cheap to copy.
class FieldSpec {
public:
  FieldSpec(); // QQ
  static FieldSpec rationals();
  static FieldSpec prime_field(std::uint64_t p);
  static FieldSpec rational_functions(const FieldSpec& base, const std::string& parameter);

  field_kind kind() const;
  std::uint64_t prime() const;          // p of the underlying prime field (0 for char 0)
  std::uint64_t characteristic() const; // 0 or p
  const FieldSpec& base() const;        // rational_functions only
  const std::string& parameter() const; // rational_functions only
  bool is_rational_functions() const { return kind() == field_kind::rational_functions; }

  bool operator==(const FieldSpec& o) const;
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }
  std::string str() const;

private:
  struct data;
  std::shared_ptr<const data> d_;
  explicit FieldSpec(std::shared_ptr<const data> d);
};

namespace detail {

// Dense univariate polynomials over QQ / F_p, used to represent elements of
// k(t). Coefficient vector has no trailing zeros; zero polynomial is empty.
struct qq_ctx {
  using elt = mpq_class;
  static elt zero() { return mpq_class(0); }
  static elt one() { return mpq_class(1); }
  static bool is_zero(const elt& a) { return sgn(a) == 0; }
  static elt add(const elt& a, const elt& b) { return a + b; }
  static elt sub(const elt& a, const elt& b) { return a - b; }
  static elt mul(const elt& a, const elt& b) { return a * b; }
  static elt div(const elt& a, const elt& b) { return a / b; }
  static elt neg(const elt& a) { return -a; }
};

struct fp_ctx {
  std::uint64_t p;
  using elt = std::uint64_t;
  static elt zero() { return 0; }
  static elt one() { return 1; }
  static bool is_zero(const elt& a) { return a == 0; }
  elt add(elt a, elt b) const { elt s = a + b; return s >= p ? s - p : s; }
  elt sub(elt a, elt b) const { return a >= b ? a - b : a + p - b; }
  elt mul(elt a, elt b) const {
    return static_cast<elt>((static_cast<unsigned __int128>(a) * b) % p);
  }
  elt inv(elt a) const;
  elt div(elt a, elt b) const { return mul(a, inv(b)); }
  elt neg(elt a) const { return a == 0 ? 0 : p - a; }
};

template <class Ctx> struct upoly {
  std::vector<typename Ctx::elt> c;
  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
};

template <class Ctx> struct ufrac {
  upoly<Ctx> num;
  upoly<Ctx> den; // monic, nonzero, coprime to num
};

using qfrac = ufrac<qq_ctx>;
using pfrac = ufrac<fp_ctx>;

} // namespace detail

// Exact element of a FieldSpec domain, always in canonical form: reduced
// fraction with monic denominator for k(t), representative in [0,p) for F_p.
class Scalar {
public:
  Scalar(); // 0 over QQ

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_int(const FieldSpec& f, long v);
  static Scalar from_mpz(const FieldSpec& f, const mpz_class& v);
  static Scalar from_mpq(const FieldSpec& f, const mpq_class& v); // char p: reduce num/den mod p
  // the parameter t as an element of a rational function field
  static Scalar parameter(const FieldSpec& f);

  const FieldSpec& spec() const { return spec_; }

  bool is_zero() const;
  bool is_one() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const; // errc::division_by_zero
  Scalar operator-() const;
  Scalar inv() const;
  Scalar pow(long e) const; // negative e inverts

  // unique b with b^p = a; identity map on F_p, coefficient-wise deflation on
  // F_p(t) when one exists (errc::inseparable_unsupported otherwise)
  Scalar pth_root() const;
  bool has_pth_root() const;

  // exact rational value (kind rationals only)
  const mpq_class& rational() const;
  // representative in [0,p) (kind prime_field only)
  std::uint64_t residue() const;

  // k(t) access: numerator/denominator coefficients as scalars of the base field
  std::vector<Scalar> numerator_coeffs() const;
  std::vector<Scalar> denominator_coeffs() const;
  // build a k(t) element from base-field coefficient lists (low degree first)
  static Scalar from_fraction(const FieldSpec& f, const std::vector<Scalar>& num,
                              const std::vector<Scalar>& den);
  // evaluate a k(t) element at t = value (value in the base field); the
  // denominator must not vanish there
  Scalar evaluate_parameter(const Scalar& value) const;

  std::string str() const;
  size_t hash() const;

private:
  FieldSpec spec_;
  std::variant<mpq_class, std::uint64_t, detail::qfrac, detail::pfrac> rep_;

  void check_same(const Scalar& o) const;
};

// The four arithmetic operations behind one entry point (mirrors the field
// operation table of the input DSL).
enum class field_op { add, sub, mul, div };
Scalar field_arith(const Scalar& a, const Scalar& b, field_op op);

bool is_prime_u64(std::uint64_t n);

} // namespace innskit

#endif
