#include "bslab/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bslab/errors.hpp"

namespace bslab {

namespace {

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatchError("polynomials from different rings");
}

// Descending order comparator for term maps.
struct ExpGreater {
  MonomialOrder order;
  bool operator()(const Exponent& a, const Exponent& b) const {
    return compare_exponents(a, b, order) > 0;
  }
};

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  return monomial(std::move(ring), Exponent(0, 0), c);
}

Polynomial Polynomial::monomial(RingPtr ring, Exponent e, const Rational& c) {
  Polynomial p(ring);
  if (e.empty()) e.assign(ring->var_count(), 0);
  if (e.size() != ring->var_count()) throw DomainError("exponent length != variable count");
  Rational cc = c;
  cc.canonicalize();
  if (cc != 0) p.terms_.emplace_back(std::move(e), std::move(cc));
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t var, std::uint32_t power) {
  if (var >= ring->var_count()) throw DomainError("variable index out of range");
  Exponent e(ring->var_count(), 0);
  e[var] = power;
  return monomial(std::move(ring), std::move(e), 1);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].first) == 0);
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

const Polynomial::Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.front();
}

Rational Polynomial::coefficient(const Exponent& e) const {
  for (const auto& [m, c] : terms_)
    if (m == e) return c;
  return Rational(0);
}

bool Polynomial::depends_on(std::size_t var) const {
  for (const auto& [e, c] : terms_)
    if (e.at(var) > 0) return true;
  return false;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  require_same_ring(ring_, g.ring_);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = g.terms_.begin(), be = g.terms_.end();
  while (a != ae && b != be) {
    int cmp = ring_->compare(a->first, b->first);
    if (cmp > 0) {
      merged.push_back(*a++);
    } else if (cmp < 0) {
      merged.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  merged.insert(merged.end(), a, ae);
  merged.insert(merged.end(), b, be);
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) { return *this += -g; }

Polynomial& Polynomial::operator*=(const Polynomial& g) {
  require_same_ring(ring_, g.ring_);
  std::map<Exponent, Rational, ExpGreater> acc(ExpGreater{ring_->order()});
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : g.terms_) {
      acc[exponent_add(ea, eb)] += ca * cb;
    }
  }
  terms_.clear();
  for (auto& [e, c] : acc) {
    if (c != 0) terms_.emplace_back(e, std::move(c));
  }
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, k] : terms_) k *= c;
  return *this;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var, std::uint32_t order) const {
  if (var >= ring_->var_count()) throw DomainError("variable index out of range");
  if (order == 0) return *this;
  Polynomial r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] < order) continue;
    // falling factorial e[var] * (e[var]-1) * ... * (e[var]-order+1)
    Integer ff = 1;
    for (std::uint32_t i = 0; i < order; ++i) ff *= Integer(e[var] - i);
    Exponent d = e;
    d[var] -= order;
    r.terms_.emplace_back(std::move(d), c * Rational(ff));
  }
  return from_terms(ring_, std::move(r.terms_));
}

Polynomial Polynomial::restrict_zero(const std::vector<std::size_t>& vars) const {
  Polynomial r(ring_);
  for (const auto& [e, c] : terms_) {
    bool keep = true;
    for (auto v : vars) {
      if (e.at(v) > 0) {
        keep = false;
        break;
      }
    }
    if (keep) r.terms_.emplace_back(e, c);
  }
  return r;  // subsequence of a sorted list stays sorted
}

bool Polynomial::operator==(const Polynomial& g) const {
  return same_ring(ring_, g.ring_) && terms_ == g.terms_;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  std::map<Exponent, Rational, ExpGreater> acc(ExpGreater{ring->order()});
  for (auto& [e, c] : terms) {
    if (e.size() != ring->var_count()) throw DomainError("exponent length != variable count");
    acc[e] += c;
  }
  Polynomial p(std::move(ring));
  for (auto& [e, c] : acc) {
    c.canonicalize();
    if (c != 0) p.terms_.emplace_back(e, std::move(c));
  }
  return p;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    Rational mag = negative ? Rational(-c) : c;
    std::string vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += ring_->var_name(i);
      if (e[i] > 1) vars += "^" + std::to_string(e[i]);
    }
    if (vars.empty()) {
      out << rational_to_string(mag);
    } else if (mag == 1) {
      out << vars;
    } else {
      out << rational_to_string(mag) << "*" << vars;
    }
  }
  return out.str();
}

Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  Polynomial r(f);
  r *= g;
  return r;
}
Polynomial operator*(const Rational& c, Polynomial f) { return f *= c; }

}  // namespace bslab
