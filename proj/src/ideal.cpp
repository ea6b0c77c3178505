#include "bslab/ideal.hpp"

#include <algorithm>

#include "bslab/errors.hpp"

namespace bslab {

Ideal Ideal::make(RingPtr ring, std::vector<Polynomial> gens) {
  if (gens.empty()) throw DomainError("ideal needs at least one generator");
  Ideal I;
  I.ring = std::move(ring);
  for (auto& g : gens) {
    if (!same_ring(g.ring(), I.ring)) throw RingMismatchError("generator from another ring");
    if (!g.is_zero()) I.generators.push_back(std::move(g));
  }
  if (I.generators.empty()) {
    I.zero_ideal = true;
    I.generators.push_back(Polynomial::zero(I.ring));
  }
  return I;
}

Ideal Ideal::parse(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> gens;
  gens.reserve(texts.size());
  for (const auto& t : texts) gens.push_back(parse_polynomial(t, ring));
  return make(ring, std::move(gens));
}

bool Ideal::is_monomial() const {
  if (zero_ideal) return false;
  return std::all_of(generators.begin(), generators.end(),
                     [](const Polynomial& g) { return g.is_monomial(); });
}

PowerProducts ideal_power_with_indices(const Ideal& ideal, std::uint32_t l) {
  if (l < 1) throw DomainError("ideal power needs l >= 1");
  if (ideal.zero_ideal) return {ideal, {{0}}};

  const std::size_t m = ideal.generators.size();
  std::vector<Polynomial> products;
  std::vector<std::vector<std::size_t>> indices;

  // Nondecreasing index tuples of length l, lexicographic.
  std::vector<std::size_t> tuple(l, 0);
  auto emit = [&]() {
    Polynomial p = Polynomial::constant(ideal.ring, 1);
    for (auto i : tuple) p *= ideal.generators[i];
    // deduplicate by value, keeping the first witnessing multiset
    for (const auto& q : products)
      if (q == p) return;
    products.push_back(std::move(p));
    indices.push_back(tuple);
  };
  while (true) {
    emit();
    std::size_t pos = l;
    while (pos > 0 && tuple[pos - 1] == m - 1) --pos;
    if (pos == 0) break;
    ++tuple[pos - 1];
    for (std::size_t i = pos; i < l; ++i) tuple[i] = tuple[pos - 1];
  }

  PowerProducts out;
  out.ideal = Ideal::make(ideal.ring, std::move(products));
  out.factor_indices = std::move(indices);
  return out;
}

Ideal ideal_power(const Ideal& ideal, std::uint32_t l) {
  return ideal_power_with_indices(ideal, l).ideal;
}

}  // namespace bslab
