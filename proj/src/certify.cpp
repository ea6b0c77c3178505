#include "bslab/certify.hpp"

#include <algorithm>
#include <map>

#include "bslab/errors.hpp"

namespace bslab {

namespace {

// Exact division by w^count; the dividend must not involve w below count.
Polynomial divide_by_w(const Polynomial& f, std::size_t w_var, std::uint32_t count) {
  std::vector<Polynomial::Term> terms;
  for (const auto& [e, c] : f.terms()) {
    if (e[w_var] < count) throw Error("internal: polynomial not divisible by w^" +
                                      std::to_string(count));
    Exponent d = e;
    d[w_var] -= count;
    terms.emplace_back(std::move(d), c);
  }
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

void validate_request(const CertifyRequest& req, std::uint32_t& k_out) {
  if (!req.space) throw DomainError("missing space");
  if (!same_ring(req.f.ring(), req.space->ring()) ||
      !same_ring(req.ideal.ring, req.space->ring()))
    throw RingMismatchError("certification data from different rings");
  if (req.l < 1) throw DomainError("l must be >= 1");
  auto k = req.space->principal_k();
  if (!k) throw DomainError("certification needs a principal thickening J = (w^k)");
  k_out = *k;
  if (req.ideal.zero_ideal) throw DomainError("cannot certify against the zero ideal");
  for (const auto& g : req.ideal.generators) {
    Exponent origin(g.ring()->var_count(), 0);
    if (g.coefficient(origin) != 0)
      throw DomainError("generators must vanish at the origin");
  }
}

}  // namespace

std::string to_string(CertifyStatus status) {
  switch (status) {
    case CertifyStatus::Success: return "SUCCESS";
    case CertifyStatus::HypothesisFailed: return "HYPOTHESIS_FAILED";
    case CertifyStatus::LiftFailed: return "LIFT_FAILED";
    case CertifyStatus::Resource: return "RESOURCE";
  }
  return "UNKNOWN";
}

bool induction_state_valid(const Polynomial& f, const InductionState& state,
                           const ThickenedSpace& space) {
  auto k = space.principal_k();
  if (!k) return false;
  const std::size_t wv = space.w_var(0);
  Polynomial acc = f;
  for (std::size_t i = 0; i < state.committed.size(); ++i) {
    acc -= Polynomial::variable(f.ring(), wv, static_cast<std::uint32_t>(i)) *
           state.committed[i];
  }
  acc -= Polynomial::variable(f.ring(), wv, state.p + 1) * state.remainder;
  return member_of_J(acc, space);
}

std::int64_t bs_exponent(const ThickenedSpace& space, std::size_t m, std::uint32_t l) {
  if (m < 1) throw DomainError("m must be >= 1");
  if (l < 1) throw DomainError("l must be >= 1");
  auto k = space.principal_k();
  if (!k) throw DomainError("sharp exponent needs a principal thickening J = (w^k)");
  return static_cast<std::int64_t>(std::min(m, space.z_count())) +
         static_cast<std::int64_t>(*k) - 1;
}

CertifyOutcome certify_membership(const CertifyRequest& req,
                                  const std::vector<WeightVector>& weights,
                                  const GroebnerOptions& opts) {
  std::uint32_t k = 0;
  validate_request(req, k);
  const RingPtr& ring = req.space->ring();
  const std::size_t wv = req.space->w_var(0);
  const std::uint32_t l = req.l;

  const std::vector<WeightVector> ws =
      weights.empty() ? default_weights(ring->var_count()) : weights;

  CertifyOutcome out;
  try {
    // Hypothesis: the graded size conditions of the sharp exponent table.
    SizeReport report = graded_size_check(req.f, req.ideal, *req.space, l, ws);
    out.report = report;
    if (!report.overall_pass) {
      out.status = CertifyStatus::HypothesisFailed;
      out.message = "graded size conditions fail";
      return out;
    }

    // Restriction of the generators to the reduced support, remembering
    // original indices for certificate assembly.
    std::vector<Polynomial> restricted;
    std::vector<std::size_t> origin_index;
    for (std::size_t j = 0; j < req.ideal.generators.size(); ++j) {
      Polynomial r = req.ideal.generators[j].restrict_zero(req.space->w_vars());
      if (r.is_zero()) continue;
      restricted.push_back(std::move(r));
      origin_index.push_back(j);
    }

    // Groebner bases of the needed reduced-ideal powers a_red^e, e = l..k+l-1.
    std::map<std::uint32_t, PowerProducts> powers;
    std::map<std::uint32_t, GroebnerBasis> bases;
    const bool have_reduced = !restricted.empty();
    Ideal reduced_ideal =
        have_reduced ? Ideal::make(ring, restricted) : Ideal{};
    if (have_reduced) {
      for (std::uint32_t e = l; e <= k + l - 1; ++e) {
        powers.emplace(e, ideal_power_with_indices(reduced_ideal, e));
        bases.emplace(e, groebner(powers.at(e).ideal, opts));
      }
    }

    // The jets (d^j f)|_{w=0} must lie in a_red^(k-j+l-1); this realizes the
    // transversal-derivative decomposition that drives the induction.
    const auto ops = noetherian_set(*req.space);
    for (std::uint32_t j = 0; j < k; ++j) {
      const Polynomial fj = apply_operator(ops[j], req.f, *req.space);
      if (fj.is_zero()) continue;
      const std::uint32_t e = k - j + l - 1;
      if (!have_reduced || !ideal_member(fj, bases.at(e))) {
        out.status = CertifyStatus::LiftFailed;
        out.failed_jet = j;
        out.message = "jet " + std::to_string(j) + " is not in the reduced ideal power " +
                      std::to_string(e);
        return out;
      }
    }

    // Induction: peel one power of w per stage, committing a combination
    // B_p from a_red^(k-p+l-1) that matches the stage value on {w = 0}.
    InductionState state{0, {}, req.f};
    Polynomial stage_poly = req.f;
    std::vector<Polynomial> committed;
    // cofactor per stage and product multiset (original generator indices)
    struct Piece {
      std::uint32_t stage;
      Polynomial cofactor;
      std::vector<std::size_t> factors;
    };
    std::vector<Piece> pieces;

    for (std::uint32_t p = 0; p < k; ++p) {
      const Polynomial ftil = stage_poly.restrict_zero(req.space->w_vars());
      Polynomial B = Polynomial::zero(ring);
      if (!ftil.is_zero()) {
        const std::uint32_t e = k - p + l - 1;
        auto cof = have_reduced ? ideal_member(ftil, bases.at(e)) : std::nullopt;
        if (!cof) {
          out.status = CertifyStatus::LiftFailed;
          out.failed_jet = p;
          out.message = "stage " + std::to_string(p) +
                        " value is not in the reduced ideal power " + std::to_string(e);
          return out;
        }
        const auto& pp = powers.at(e);
        for (std::size_t t = 0; t < cof->size(); ++t) {
          if ((*cof)[t].is_zero()) continue;
          // replace the restricted product by the product of full generators
          Polynomial full = Polynomial::constant(ring, 1);
          std::vector<std::size_t> factors;
          for (auto idx : pp.factor_indices[t]) {
            full *= req.ideal.generators[origin_index[idx]];
            factors.push_back(origin_index[idx]);
          }
          B += (*cof)[t] * full;
          pieces.push_back(Piece{p, (*cof)[t], std::move(factors)});
        }
      }
      committed.push_back(B);
      stage_poly = divide_by_w(stage_poly - B, wv, 1);

      state.p = p;
      state.committed = committed;
      state.remainder = stage_poly;
      if (!induction_state_valid(req.f, state, *req.space))
        throw Error("internal: induction stage invariant broken");
    }

    // f = sum_p w^p B_p + w^k * stage_poly; flatten into l-fold products.
    MembershipCertificate cert{{}, Polynomial::variable(ring, wv, k) * stage_poly};
    std::map<std::vector<std::size_t>, Polynomial> collected;
    for (const auto& piece : pieces) {
      std::vector<std::size_t> factors = piece.factors;
      std::sort(factors.begin(), factors.end());
      std::vector<std::size_t> head(factors.begin(),
                                    factors.begin() + static_cast<std::ptrdiff_t>(l));
      Polynomial coeff = Polynomial::variable(ring, wv, piece.stage) * piece.cofactor;
      for (std::size_t t = l; t < factors.size(); ++t)
        coeff *= req.ideal.generators[factors[t]];
      auto [it, inserted] = collected.try_emplace(head, coeff);
      if (!inserted) it->second += coeff;
    }
    for (auto& [indices, coeff] : collected) {
      if (coeff.is_zero()) continue;
      cert.terms.push_back(CertificateTerm{std::move(coeff), indices});
    }

    std::string diag;
    if (!verify_certificate(cert, req, &diag))
      throw Error("internal: produced certificate failed verification: " + diag);

    out.status = CertifyStatus::Success;
    out.certificate = std::move(cert);
    out.message = "verified";
    return out;
  } catch (const ResourceLimitError& e) {
    out.status = CertifyStatus::Resource;
    out.message = e.what();
    return out;
  }
}

bool verify_certificate(const MembershipCertificate& cert, const CertifyRequest& req,
                        std::string* diagnostic) {
  auto fail = [&](const std::string& why) {
    if (diagnostic) *diagnostic = why;
    return false;
  };
  if (!req.space) return fail("missing space");

  try {
    Polynomial sum = cert.j_witness;
    for (const auto& term : cert.terms) {
      if (term.generator_indices.size() != req.l)
        return fail("a term does not use exactly l generators");
      Polynomial prod = term.coefficient;
      for (auto idx : term.generator_indices) {
        if (idx >= req.ideal.generators.size()) return fail("generator index out of range");
        prod *= req.ideal.generators[idx];
      }
      sum += prod;
    }
    if (sum != req.f) return fail("expansion does not reproduce f");

    // j_witness must reduce to zero modulo the monomial generators of J:
    // termwise divisibility by some generator.
    const std::size_t zc = req.space->z_count();
    for (const auto& [e, c] : cert.j_witness.terms()) {
      Exponent we(e.begin() + static_cast<std::ptrdiff_t>(zc), e.end());
      if (!req.space->j_contains(we)) return fail("j_witness is not in J");
    }
  } catch (const Error& e) {
    return fail(e.what());
  }
  if (diagnostic) *diagnostic = "ok";
  return true;
}

std::pair<Polynomial, Ideal> optimality_witness(const ThickenedSpace& space, std::uint32_t p) {
  auto k = space.principal_k();
  if (!k) throw DomainError("witness needs a principal thickening J = (w^k)");
  if (space.ring()->var_count() != 2 || space.z_count() != 1)
    throw DomainError("witness family lives in ambient dimension 2");
  if (p >= *k) throw DomainError("witness stage p out of range");

  const RingPtr& ring = space.ring();
  Exponent e(2, 0);
  e[0] = *k - 1 - p;  // z
  e[1] = p;           // w
  Polynomial f = Polynomial::monomial(ring, std::move(e), 1);
  Polynomial zw = Polynomial::variable(ring, 0) + Polynomial::variable(ring, 1);
  return {std::move(f), Ideal::make(ring, {std::move(zw)})};
}

SearchResult search_minimal_N(const SpacePtr& space, const std::vector<SearchCase>& corpus,
                              const std::vector<WeightVector>& weights,
                              const GroebnerOptions& opts) {
  if (!space) throw DomainError("missing space");
  if (corpus.empty()) throw DomainError("corpus must be nonempty");
  auto k = space->principal_k();
  if (!k) throw DomainError("search needs a principal thickening J = (w^k)");

  const std::vector<WeightVector> ws =
      weights.empty() ? default_weights(space->ring()->var_count()) : weights;

  // Certification is independent of the candidate exponent.
  std::vector<bool> certified;
  std::int64_t cap = 0;
  for (const auto& c : corpus) {
    CertifyRequest req{c.f, c.ideal, space, c.l};
    certified.push_back(certify_membership(req, ws, opts).ok());
    const std::int64_t r = static_cast<std::int64_t>(
        std::min(c.ideal.generator_count(), space->z_count()));
    cap = std::max(cap, r + static_cast<std::int64_t>(*k) + 4);
  }

  SearchResult result;
  std::optional<std::int64_t> found;
  for (std::int64_t N = 0; N <= cap; ++N) {
    result.candidates.push_back(N);
    std::vector<SearchCaseStatus> row;
    bool counterexample = false;
    bool any_hypothesis = false;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      SearchCaseStatus st;
      st.hypothesis_pass = graded_size_check_at(corpus[i].f, corpus[i].ideal, *space,
                                                corpus[i].l, ws, N)
                               .overall_pass;
      st.certified = certified[i];
      if (st.hypothesis_pass) {
        any_hypothesis = true;
        if (!st.certified) counterexample = true;
      }
      row.push_back(st);
    }
    result.table.push_back(std::move(row));
    if (!counterexample && !found) {
      found = N;
      result.vacuous = !any_hypothesis;
    }
  }
  if (!found)
    throw ResourceLimitError("no admissible exponent up to the search cap " +
                             std::to_string(cap));
  result.minimal_N = *found;
  return result;
}

}  // namespace bslab
