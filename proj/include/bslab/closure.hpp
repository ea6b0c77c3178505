#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bslab/germ.hpp"
#include "bslab/groebner.hpp"
#include "bslab/ideal.hpp"

namespace bslab {

// Supporting halfspace normal.x >= offset with componentwise-nonnegative
// primitive integer normal.
struct Facet {
  std::vector<Integer> normal;
  Integer offset;

  bool operator==(const Facet& other) const {
    return normal == other.normal && offset == other.offset;
  }
};

// conv(source_exponents) + R_{>=0}^n as an irredundant facet description;
// the integral-closure oracle for monomial ideals.
struct NewtonPolyhedron {
  std::vector<Exponent> source_exponents;  // deduplicated, sorted
  std::vector<Facet> facets;               // canonical order
  std::size_t dim = 0;
};

NewtonPolyhedron newton_polyhedron(const Ideal& monomial_ideal);
NewtonPolyhedron newton_polyhedron(std::vector<Exponent> exponents, std::size_t dim);

// Exponent in power * NP, i.e. the monomial lies in the integral closure of
// the power-th power of the source ideal. Requires power >= 1.
bool closure_member_monomial(const Exponent& mon, const NewtonPolyhedron& np,
                             std::int64_t power);

// Brute-force one-sided closure oracle: f^s in I^s for some s <= s_bound.
bool power_closure_test(const Polynomial& f, const Ideal& ideal, std::uint32_t s_bound,
                        const GroebnerOptions& opts = {});

// Monomial valuation nu_c: entries are positive integer weights.
using WeightVector = std::vector<std::int64_t>;

// min over terms of c.exponent; nullopt encodes +infinity (zero polynomial).
std::optional<std::int64_t> valuation_order(const Polynomial& f, const WeightVector& c);

// All weight vectors in {1..max_entry}^n with coordinate gcd 1.
std::vector<WeightVector> default_weights(std::size_t n, std::int64_t max_entry = 4);

// Exact rational extended with the two infinities, for slack reporting.
class ExtendedRational {
public:
  static ExtendedRational plus_infinity() { return ExtendedRational(+1); }
  static ExtendedRational minus_infinity() { return ExtendedRational(-1); }
  static ExtendedRational finite(Rational v) { return ExtendedRational(std::move(v)); }

  bool is_finite() const { return inf_ == 0; }
  bool is_plus_infinity() const { return inf_ > 0; }
  bool is_minus_infinity() const { return inf_ < 0; }
  const Rational& value() const;

  bool operator<(const ExtendedRational& o) const;
  bool operator==(const ExtendedRational& o) const {
    return inf_ == o.inf_ && (inf_ != 0 || value_ == o.value_);
  }
  std::string to_string() const;

private:
  explicit ExtendedRational(int inf) : inf_(inf) {}
  explicit ExtendedRational(Rational v) : inf_(0), value_(std::move(v)) {}
  int inf_;
  Rational value_ = 0;
};

// One graded size condition |L_alpha phi| <= C |a|^required, measured on the
// reduced support. Attained and slack are minima over the sampled weights;
// slack is in exponent units: nu_c(L_alpha phi)/nu_c(a) - required.
struct SizeRecord {
  Exponent alpha;
  std::uint32_t op_order = 0;
  std::int64_t required = 0;
  std::optional<std::int64_t> attained;  // nullopt = +infinity
  ExtendedRational slack = ExtendedRational::plus_infinity();
  bool pass = false;
};

struct SizeReport {
  std::vector<SizeRecord> records;
  bool overall_pass = false;
  bool exact = false;  // decided by the Newton polyhedron (monomial ideal)
  std::size_t m = 0;   // generator count
  std::size_t rho = 0; // min(m, dim Z)
  std::uint32_t d = 0; // maximal operator order
  std::uint32_t l = 1;
};

// Size conditions of the graded exponent table required_j = rho + d - j + l - 1.
SizeReport graded_size_check(const Polynomial& f, const Ideal& ideal,
                             const ThickenedSpace& space, std::uint32_t l,
                             const std::vector<WeightVector>& weights);

// Same check against the table required_j = N - j + l - 1 for a candidate N.
SizeReport graded_size_check_at(const Polynomial& f, const Ideal& ideal,
                                const ThickenedSpace& space, std::uint32_t l,
                                const std::vector<WeightVector>& weights, std::int64_t N);

}  // namespace bslab
