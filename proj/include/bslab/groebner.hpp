#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bslab/ideal.hpp"

namespace bslab {

struct GroebnerOptions {
  // Cap on the total degree of intermediate polynomials; exceeding it raises
  // ResourceLimitError.
  std::uint64_t degree_cap = 64;
};

// Reduced Groebner basis with the transformation matrix onto the source
// generators: basis[i] == sum_j transform[i][j] * source.generators[j].
struct GroebnerBasis {
  RingPtr ring;
  Ideal source;
  std::vector<Polynomial> basis;                   // monic, ascending leading monomials
  std::vector<std::vector<Polynomial>> transform;
};

GroebnerBasis groebner(const Ideal& ideal, const GroebnerOptions& opts = {});

struct NormalForm {
  Polynomial remainder;
  std::vector<Polynomial> cofactors;  // over gb.basis: f == sum cofactors[i]*basis[i] + remainder
};

// Full multivariate division: no monomial of the remainder is divisible by
// any basis leading monomial. Divisor selection is the first basis element
// in basis order, so results are deterministic.
NormalForm normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Cofactors over the source generators when f belongs to the ideal, composed
// from normal_form through the transformation matrix; nullopt otherwise.
std::optional<std::vector<Polynomial>> ideal_member(const Polynomial& f, const GroebnerBasis& gb);
std::optional<std::vector<Polynomial>> ideal_member(const Polynomial& f, const Ideal& ideal,
                                                    const GroebnerOptions& opts = {});

}  // namespace bslab
