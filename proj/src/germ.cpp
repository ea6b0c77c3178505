#include "bslab/germ.hpp"

#include <algorithm>

#include "bslab/errors.hpp"

namespace bslab {

namespace {

// Graded order on w-exponents: by total degree, then lexicographic.
bool graded_less(const Exponent& a, const Exponent& b) {
  auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

std::pair<Exponent, Exponent> split_exponent(const Exponent& e, std::size_t z_count) {
  Exponent z(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(z_count));
  Exponent w(e.begin() + static_cast<std::ptrdiff_t>(z_count), e.end());
  return {std::move(z), std::move(w)};
}

}  // namespace

SpacePtr ThickenedSpace::make(RingPtr ring, std::size_t z_count,
                              std::vector<Exponent> j_generators) {
  if (!ring) throw DomainError("null ring");
  if (z_count < 1 || z_count >= ring->var_count())
    throw DomainError("need at least one z-variable and one w-variable");
  const std::size_t w_count = ring->var_count() - z_count;

  if (j_generators.empty()) throw DomainError("J needs at least one generator");
  for (const auto& g : j_generators) {
    if (g.size() != w_count) throw DomainError("J generator is not a w-monomial exponent");
    if (total_degree(g) == 0) throw DomainError("J contains a unit");
  }

  // Finite staircase needs a pure power of every w-variable in J.
  std::vector<std::uint32_t> box(w_count, 0);
  for (std::size_t i = 0; i < w_count; ++i) {
    std::uint32_t best = 0;
    for (const auto& g : j_generators) {
      bool pure = g[i] > 0;
      for (std::size_t t = 0; t < w_count && pure; ++t)
        if (t != i && g[t] > 0) pure = false;
      if (pure && (best == 0 || g[i] < best)) best = g[i];
    }
    if (best == 0)
      throw DomainError("J is not primary to (w): no pure power of w-variable " +
                        std::to_string(i) + "; staircase would be infinite");
    box[i] = best;
  }

  auto in_ideal = [&](const Exponent& e) {
    return std::any_of(j_generators.begin(), j_generators.end(),
                       [&](const Exponent& g) { return exponent_divides(g, e); });
  };

  // Enumerate the box and keep the complement of the ideal.
  std::vector<Exponent> staircase;
  Exponent cur(w_count, 0);
  while (true) {
    if (!in_ideal(cur)) staircase.push_back(cur);
    std::size_t i = 0;
    while (i < w_count) {
      if (++cur[i] < box[i]) break;
      cur[i] = 0;
      ++i;
    }
    if (i == w_count) break;
  }
  std::sort(staircase.begin(), staircase.end(), graded_less);

  // Recover the minimal generators: minimal ideal exponents adjacent to the
  // staircase, i.e. generators none of which divides another.
  std::vector<Exponent> minimal;
  for (const auto& g : j_generators) {
    bool redundant = false;
    for (const auto& h : j_generators) {
      if (&g == &h) continue;
      if (exponent_divides(h, g) && (h != g || &h < &g)) redundant = true;
    }
    if (!redundant) minimal.push_back(g);
  }
  std::sort(minimal.begin(), minimal.end(), graded_less);
  minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());

  auto space = std::shared_ptr<ThickenedSpace>(new ThickenedSpace());
  space->ring_ = std::move(ring);
  space->z_count_ = z_count;
  space->w_count_ = w_count;
  space->staircase_ = std::move(staircase);
  space->j_generators_ = std::move(minimal);
  return space;
}

std::vector<std::size_t> ThickenedSpace::w_vars() const {
  std::vector<std::size_t> v(w_count_);
  for (std::size_t i = 0; i < w_count_; ++i) v[i] = z_count_ + i;
  return v;
}

bool ThickenedSpace::in_staircase(const Exponent& w_exp) const {
  return std::find(staircase_.begin(), staircase_.end(), w_exp) != staircase_.end();
}

bool ThickenedSpace::j_contains(const Exponent& w_exp) const {
  return std::any_of(j_generators_.begin(), j_generators_.end(),
                     [&](const Exponent& g) { return exponent_divides(g, w_exp); });
}

Ideal ThickenedSpace::j_as_ideal() const {
  std::vector<Polynomial> gens;
  for (const auto& g : j_generators_) {
    Exponent e(ring_->var_count(), 0);
    for (std::size_t i = 0; i < w_count_; ++i) e[z_count_ + i] = g[i];
    gens.push_back(Polynomial::monomial(ring_, std::move(e), 1));
  }
  return Ideal::make(ring_, std::move(gens));
}

std::optional<std::uint32_t> ThickenedSpace::principal_k() const {
  if (w_count_ != 1) return std::nullopt;
  if (j_generators_.size() != 1) return std::nullopt;
  return j_generators_[0][0];
}

bool ThickenedSpace::operator==(const ThickenedSpace& other) const {
  return z_count_ == other.z_count_ && w_count_ == other.w_count_ &&
         j_generators_ == other.j_generators_ && same_ring(ring_, other.ring_);
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

Polynomial JetElement::coefficient(const Exponent& alpha) const {
  for (const auto& [a, p] : coefficients)
    if (a == alpha) return p;
  return Polynomial::zero(space->ring());
}

bool JetElement::operator==(const JetElement& other) const {
  return same_space(space, other.space) && coefficients == other.coefficients;
}

JetElement taylor_jet(const Polynomial& f, const SpacePtr& space) {
  if (!same_ring(f.ring(), space->ring()))
    throw RingMismatchError("polynomial from another ring");
  const RingPtr& ring = space->ring();
  const std::size_t zc = space->z_count();

  // (d^alpha_w f)|_{w=0} = alpha! * (coefficient of w^alpha), a z-polynomial.
  std::vector<std::pair<Exponent, std::vector<Polynomial::Term>>> parts;
  for (const auto& [e, c] : f.terms()) {
    auto [ze, we] = split_exponent(e, zc);
    if (!space->in_staircase(we)) continue;
    Exponent full(ring->var_count(), 0);
    std::copy(ze.begin(), ze.end(), full.begin());
    Integer fac = 1;
    for (auto x : we) fac *= factorial(x);
    auto it = std::find_if(parts.begin(), parts.end(),
                           [&](const auto& p) { return p.first == we; });
    if (it == parts.end()) {
      parts.push_back({we, {}});
      it = std::prev(parts.end());
    }
    it->second.emplace_back(std::move(full), c * Rational(fac));
  }

  JetElement jet;
  jet.space = space;
  for (auto& [alpha, terms] : parts) {
    Polynomial p = Polynomial::from_terms(ring, std::move(terms));
    if (!p.is_zero()) jet.coefficients.emplace_back(alpha, std::move(p));
  }
  std::sort(jet.coefficients.begin(), jet.coefficients.end(),
            [](const auto& a, const auto& b) { return graded_less(a.first, b.first); });
  return jet;
}

JetElement jet_mul(const JetElement& u, const JetElement& v) {
  if (!same_space(u.space, v.space)) throw RingMismatchError("jets from different spaces");
  const SpacePtr& space = u.space;
  const RingPtr& ring = space->ring();

  JetElement out;
  out.space = space;
  for (const auto& gamma : space->staircase()) {
    Polynomial acc = Polynomial::zero(ring);
    for (const auto& [alpha, pu] : u.coefficients) {
      if (!exponent_divides(alpha, gamma)) continue;
      const Exponent beta = exponent_sub(gamma, alpha);
      Polynomial pv = v.coefficient(beta);
      if (pv.is_zero()) continue;
      Integer binom = 1;
      for (std::size_t i = 0; i < gamma.size(); ++i) binom *= binomial(gamma[i], alpha[i]);
      acc += Rational(binom) * (pu * pv);
    }
    if (!acc.is_zero()) out.coefficients.emplace_back(gamma, std::move(acc));
  }
  return out;
}

Polynomial jet_reconstruct(const JetElement& jet) {
  const SpacePtr& space = jet.space;
  const RingPtr& ring = space->ring();
  Polynomial sum = Polynomial::zero(ring);
  for (const auto& [alpha, p] : jet.coefficients) {
    Exponent e(ring->var_count(), 0);
    Integer fac = 1;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      e[space->w_var(i)] = alpha[i];
      fac *= factorial(alpha[i]);
    }
    sum += Polynomial::monomial(ring, std::move(e), Rational(1) / Rational(fac)) * p;
  }
  return sum;
}

std::vector<NoetherianOperator> noetherian_set(const ThickenedSpace& space) {
  std::vector<NoetherianOperator> ops;
  for (const auto& alpha : space.staircase())
    ops.push_back({alpha, static_cast<std::uint32_t>(total_degree(alpha))});
  // staircase is already in graded order
  return ops;
}

Polynomial apply_operator(const NoetherianOperator& op, const Polynomial& f,
                          const ThickenedSpace& space) {
  if (!same_ring(f.ring(), space.ring()))
    throw RingMismatchError("polynomial from another ring");
  Polynomial g = f;
  for (std::size_t i = 0; i < space.w_count(); ++i)
    g = g.derivative(space.w_var(i), op.w_multi_order.at(i));
  return g.restrict_zero(space.w_vars());
}

bool member_of_J(const Polynomial& f, const ThickenedSpace& space) {
  for (const auto& op : noetherian_set(space))
    if (!apply_operator(op, f, space).is_zero()) return false;
  return true;
}

}  // namespace bslab
