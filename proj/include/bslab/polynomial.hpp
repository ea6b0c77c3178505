#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bslab/rational.hpp"
#include "bslab/ring.hpp"

namespace bslab {

// Sparse exact-rational multivariate polynomial. Terms are kept in strictly
// descending monomial order under the ring's order; zero coefficients are
// never stored, so the zero polynomial has an empty term list.
class Polynomial {
public:
  using Term = std::pair<Exponent, Rational>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial monomial(RingPtr ring, Exponent e, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t var, std::uint32_t power = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::uint64_t degree() const;  // max total degree over terms; 0 for the zero polynomial
  const Term& leading_term() const;
  const Exponent& leading_monomial() const { return leading_term().first; }
  Rational coefficient(const Exponent& e) const;
  bool depends_on(std::size_t var) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Polynomial& g);
  Polynomial& operator*=(const Rational& c);

  Polynomial pow(std::uint32_t e) const;

  // Iterated formal partial derivative; order 0 returns the polynomial itself.
  Polynomial derivative(std::size_t var, std::uint32_t order = 1) const;

  // Substitute 0 for every listed variable (drops terms that involve any of them).
  Polynomial restrict_zero(const std::vector<std::size_t>& vars) const;

  bool operator==(const Polynomial& g) const;
  bool operator!=(const Polynomial& g) const { return !(*this == g); }

  // Canonical form: descending monomial order, reduced fractions. Bit-exact
  // round-trip through parse_polynomial.
  std::string to_string() const;

  // Construction hook for internal/bulk use: terms may be in any order and
  // contain duplicates; they get merged and canonicalized.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial operator+(Polynomial f, const Polynomial& g);
Polynomial operator-(Polynomial f, const Polynomial& g);
Polynomial operator*(const Polynomial& f, const Polynomial& g);
Polynomial operator*(const Rational& c, Polynomial f);

// Grammar: terms joined by '+'/'-'; a term is an optional rational p/q
// and 'var^e' factors joined by '*'; parenthesized subexpressions with
// integer powers are accepted; whitespace is insignificant.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace bslab
