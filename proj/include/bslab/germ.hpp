#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "bslab/ideal.hpp"
#include "bslab/polynomial.hpp"

namespace bslab {

class ThickenedSpace;
using SpacePtr = std::shared_ptr<const ThickenedSpace>;

// Non-reduced model germ: the reduced support is the coordinate subspace
// {w = 0}, thickened by a w-primary monomial ideal J. Variables are the
// ring's first z_count names (coordinates on the support) followed by
// w_count transversal names.
class ThickenedSpace {
public:
  // j_generators are exponents over the w-variables only (length w_count).
  static SpacePtr make(RingPtr ring, std::size_t z_count, std::vector<Exponent> j_generators);

  const RingPtr& ring() const { return ring_; }
  std::size_t z_count() const { return z_count_; }
  std::size_t w_count() const { return w_count_; }
  std::size_t w_var(std::size_t i) const { return z_count_ + i; }
  std::vector<std::size_t> w_vars() const;

  // Exponents alpha over the w-variables with w^alpha not in J; a finite
  // lower set containing 0, listed in graded order.
  const std::vector<Exponent>& staircase() const { return staircase_; }
  // Minimal monomial generators of J (w-exponents).
  const std::vector<Exponent>& j_generators() const { return j_generators_; }

  bool in_staircase(const Exponent& w_exp) const;
  bool j_contains(const Exponent& w_exp) const;  // divisible by some generator
  Ideal j_as_ideal() const;                      // generators lifted to the ambient ring

  // k with J = (w^k) when the thickening is principal in one variable.
  std::optional<std::uint32_t> principal_k() const;

  bool operator==(const ThickenedSpace& other) const;

private:
  ThickenedSpace() = default;
  RingPtr ring_;
  std::size_t z_count_ = 0;
  std::size_t w_count_ = 0;
  std::vector<Exponent> staircase_;
  std::vector<Exponent> j_generators_;
};

bool same_space(const SpacePtr& a, const SpacePtr& b);

// Element of O/J in coordinates: the tuple of raw transversal derivatives
// (d^alpha_w f)|_{w=0} indexed by the staircase. Absent entries are zero.
struct JetElement {
  SpacePtr space;
  std::vector<std::pair<Exponent, Polynomial>> coefficients;  // graded order, nonzero

  Polynomial coefficient(const Exponent& alpha) const;
  bool is_zero() const { return coefficients.empty(); }
  bool operator==(const JetElement& other) const;
};

struct NoetherianOperator {
  Exponent w_multi_order;  // alpha over the w-variables, in the staircase
  std::uint32_t order;     // |alpha|
};

JetElement taylor_jet(const Polynomial& f, const SpacePtr& space);

// Ring structure transported to jets: Leibniz convolution truncated to the
// staircase; agrees with taylor_jet of the product of representatives.
JetElement jet_mul(const JetElement& u, const JetElement& v);

// A representative whose jet is the given one: sum of coeff[alpha]*w^alpha/alpha!.
Polynomial jet_reconstruct(const JetElement& jet);

// One operator d^alpha_w per staircase exponent, sorted by order.
std::vector<NoetherianOperator> noetherian_set(const ThickenedSpace& space);

// (d^alpha_w f)|_{w=0}, a polynomial in the z-variables only.
Polynomial apply_operator(const NoetherianOperator& op, const Polynomial& f,
                          const ThickenedSpace& space);

// f in J, decided by vanishing of the whole defining tuple on {w = 0}.
bool member_of_J(const Polynomial& f, const ThickenedSpace& space);

}  // namespace bslab
