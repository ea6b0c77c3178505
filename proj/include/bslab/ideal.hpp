#pragma once

#include <vector>

#include "bslab/polynomial.hpp"

namespace bslab {

// Finitely generated ideal. Zero generators are dropped on construction; the
// zero ideal keeps a single zero generator and is flagged.
struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> generators;
  bool zero_ideal = false;

  static Ideal make(RingPtr ring, std::vector<Polynomial> gens);
  static Ideal parse(const RingPtr& ring, const std::vector<std::string>& texts);

  std::size_t generator_count() const { return zero_ideal ? 0 : generators.size(); }
  bool is_monomial() const;  // every generator is a single term
};

// Generators of I^l: all products of l generators with multiplicity,
// deduplicated. Requires l >= 1.
Ideal ideal_power(const Ideal& ideal, std::uint32_t l);

// Same, remembering for each product generator the (sorted) multiset of
// factor indices into the source generator list.
struct PowerProducts {
  Ideal ideal;
  std::vector<std::vector<std::size_t>> factor_indices;
};
PowerProducts ideal_power_with_indices(const Ideal& ideal, std::uint32_t l);

}  // namespace bslab
