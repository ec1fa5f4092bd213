#ifndef INNSKIT_POLY_HPP
#define INNSKIT_POLY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"

namespace innskit {

using expvec = std::vector<std::uint32_t>;

// Global monomial orders: degrevlex, lex, and two-block products (dominant
// block first). Block orders drive elimination.
struct MonomialOrder {
  enum class kind_t { degrevlex, lex, block };
  kind_t kind = kind_t::degrevlex;
  kind_t first = kind_t::degrevlex;  // block only
  kind_t second = kind_t::degrevlex; // block only
  size_t split = 0;                  // block: vars [0, split) form the dominant block

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder lex() {
    MonomialOrder o;
    o.kind = kind_t::lex;
    return o;
  }
  static MonomialOrder block(kind_t first, kind_t second, size_t split) {
    MonomialOrder o;
    o.kind = kind_t::block;
    o.first = first;
    o.second = second;
    o.split = split;
    return o;
  }

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && (kind != kind_t::block ||
                              (first == o.first && second == o.second && split == o.split));
  }
  std::string str() const;
};

// -1, 0, 1 for a < b, a == b, a > b in the given order
int exp_cmp(const expvec& a, const expvec& b, const MonomialOrder& ord);
bool exp_divides(const expvec& a, const expvec& b); // a | b
expvec exp_mul(const expvec& a, const expvec& b);
expvec exp_div(const expvec& a, const expvec& b); // b / a, assumes a | b
expvec exp_lcm(const expvec& a, const expvec& b);
std::uint64_t exp_total_deg(const expvec& a);

// Polynomial ring: coefficient field, named variables, ambient order.
class PolyRing {
public:
  PolyRing() = default;
  PolyRing(const FieldSpec& field, std::vector<std::string> vars,
           MonomialOrder order = MonomialOrder::degrevlex());

  const FieldSpec& field() const;
  const std::vector<std::string>& vars() const;
  size_t nvars() const;
  const MonomialOrder& order() const;
  std::optional<size_t> var_index(const std::string& name) const;

  PolyRing with_order(const MonomialOrder& o) const;
  // same field/order, extra variables appended
  PolyRing with_vars_appended(const std::vector<std::string>& extra) const;
  // same field/order kind, variables permuted by perm (new[i] = old[perm[i]])
  PolyRing with_vars_permuted(const std::vector<size_t>& perm, const MonomialOrder& o) const;

  bool operator==(const PolyRing& o) const;
  bool operator!=(const PolyRing& o) const { return !(*this == o); }
  bool same_vars(const PolyRing& o) const; // ignores order
  std::string str() const;

private:
  struct data;
  std::shared_ptr<const data> d_;
};

struct Term {
  expvec e;
  Scalar c;
};

// Immutable multivariate polynomial: term list strictly decreasing in the
// ring's order, no zero coefficients.
class Poly {
public:
  Poly() = default;
  explicit Poly(const PolyRing& r) : ring_(r) {} // zero

  static Poly zero(const PolyRing& r) { return Poly(r); }
  static Poly constant(const PolyRing& r, const Scalar& c);
  static Poly one(const PolyRing& r) { return constant(r, Scalar::one(r.field())); }
  static Poly variable(const PolyRing& r, size_t i, std::uint32_t power = 1);
  static Poly monomial(const PolyRing& r, const expvec& e, const Scalar& c);
  // sorts, merges equal monomials, drops zeros
  static Poly from_terms(const PolyRing& r, std::vector<Term> terms);

  const PolyRing& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exp_total_deg(terms_[0].e) == 0);
  }
  bool is_one() const {
    return terms_.size() == 1 && exp_total_deg(terms_[0].e) == 0 && terms_[0].c.is_one();
  }
  const Term& lead() const; // largest term
  std::uint64_t total_deg() const;
  std::uint32_t deg_in(size_t var) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly scaled(const Scalar& c) const;
  Poly term_multiplied(const expvec& e, const Scalar& c) const;
  Poly monic() const; // divide by leading coefficient
  Poly derivative(size_t var) const;

  // reinterpret in a sibling ring with the same variables (re-sorts terms)
  Poly in_ring(const PolyRing& r) const;
  // map into a ring whose variable list contains this ring's variables by name
  Poly mapped_into(const PolyRing& r) const;
  // substitute variable -> polynomial (other variables pass through)
  Poly substituted(size_t var, const Poly& value) const;

  bool depends_on(size_t var) const;
  // true if the polynomial involves only variables from `allowed`
  bool supported_on(const std::vector<bool>& allowed) const;

  std::string str() const;

private:
  PolyRing ring_;
  std::vector<Term> terms_;
};

enum class poly_op { add, sub, mul };
Poly poly_arith(const Poly& f, const Poly& g, poly_op op);

// univariate bridge: dense coefficients of f seen in `var` (f must involve no
// other variable); index = degree
std::vector<Scalar> univariate_coeffs(const Poly& f, size_t var);
Poly poly_from_univariate(const PolyRing& r, size_t var, const std::vector<Scalar>& coeffs);

} // namespace innskit

#endif
