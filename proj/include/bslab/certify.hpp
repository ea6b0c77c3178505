#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bslab/closure.hpp"
#include "bslab/germ.hpp"

namespace bslab {

// Certification request: decide phi in a^l inside O/(w^k) and produce an
// expansion-checkable witness. Requires a principal single-variable
// thickening and generators vanishing at the origin.
struct CertifyRequest {
  Polynomial f;
  Ideal ideal;
  SpacePtr space;
  std::uint32_t l = 1;
};

// One certificate summand: coefficient times the product of l generators.
struct CertificateTerm {
  Polynomial coefficient;
  std::vector<std::size_t> generator_indices;  // sorted, size l, 0-based
};

// Explicit identity f == sum of terms + j_witness with j_witness in J,
// verifiable by polynomial expansion alone.
struct MembershipCertificate {
  std::vector<CertificateTerm> terms;
  Polynomial j_witness;
};

enum class CertifyStatus {
  Success,
  HypothesisFailed,  // graded size conditions fail; report attached
  LiftFailed,        // some jet is outside the required ideal power
  Resource,          // a configured resource cap was hit
};

std::string to_string(CertifyStatus status);

struct CertifyOutcome {
  CertifyStatus status = CertifyStatus::Resource;
  std::optional<MembershipCertificate> certificate;  // on Success
  std::optional<SizeReport> report;                  // hypothesis check result
  std::optional<std::uint32_t> failed_jet;           // on LiftFailed
  std::string message;

  bool ok() const { return status == CertifyStatus::Success; }
};

// Stage p of the induction: f - sum_i w^i committed[i] - w^(p+1) remainder
// vanishes identically (so in particular lies in J).
struct InductionState {
  std::uint32_t p = 0;
  std::vector<Polynomial> committed;
  Polynomial remainder;
};
bool induction_state_valid(const Polynomial& f, const InductionState& state,
                           const ThickenedSpace& space);

// Sharp exponent N = min(m, dim Z) + k - 1 for J = (w^k); the graded
// per-operator exponents are then N - j + l - 1.
std::int64_t bs_exponent(const ThickenedSpace& space, std::size_t m, std::uint32_t l);

CertifyOutcome certify_membership(const CertifyRequest& req,
                                  const std::vector<WeightVector>& weights = {},
                                  const GroebnerOptions& opts = {});

// Re-expands the certificate and checks its two invariants exactly; trusts
// only polynomial arithmetic, never the certifier's internal state.
bool verify_certificate(const MembershipCertificate& cert, const CertifyRequest& req,
                        std::string* diagnostic = nullptr);

// (w^p z^(k-1-p), (z+w)): fails exactly one graded condition, by exactly one
// exponent unit, and is not a member. Requires ambient dimension 2.
std::pair<Polynomial, Ideal> optimality_witness(const ThickenedSpace& space, std::uint32_t p);

struct SearchCase {
  Polynomial f;
  Ideal ideal;
  std::uint32_t l = 1;
};

struct SearchCaseStatus {
  bool hypothesis_pass = false;  // graded conditions at the candidate N
  bool certified = false;        // certify_membership succeeds (N-independent)
};

struct SearchResult {
  std::int64_t minimal_N = 0;
  bool vacuous = false;  // no corpus case passes the hypotheses at minimal_N
  std::vector<std::int64_t> candidates;
  std::vector<std::vector<SearchCaseStatus>> table;  // [candidate][case]
};

// Smallest N such that, for every corpus case, passing the graded conditions
// with exponents N - j + l - 1 implies certification succeeds.
SearchResult search_minimal_N(const SpacePtr& space, const std::vector<SearchCase>& corpus,
                              const std::vector<WeightVector>& weights = {},
                              const GroebnerOptions& opts = {});

}  // namespace bslab
