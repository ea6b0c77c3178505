#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bslab/errors.hpp"
#include "bslab/serialize.hpp"
#include "test_util.hpp"

using namespace bslab;
using namespace bslab::testutil;

namespace {

Exponent E(std::initializer_list<std::uint32_t> xs) { return Exponent(xs); }

SpacePtr space_wk(std::uint32_t k) { return ThickenedSpace::make(ring_zw(), 1, {E({k})}); }

// Direct membership of f in a^l + J, the ground truth the certifier proves.
bool raw_member(const Polynomial& f, const Ideal& a, const ThickenedSpace& space,
                std::uint32_t l) {
  std::vector<Polynomial> gens = ideal_power(a, l).generators;
  for (const auto& g : space.j_as_ideal().generators) gens.push_back(g);
  return ideal_member(f, Ideal::make(a.ring, std::move(gens))).has_value();
}

}  // namespace

TEST_CASE("sharp exponent bookkeeping") {
  CHECK(bs_exponent(*space_wk(3), 1, 1) == 3);  // r = 1, k = 3
  CHECK(bs_exponent(*space_wk(1), 1, 1) == 1);  // reduced case: N = r
  CHECK(bs_exponent(*space_wk(1), 3, 1) == 1);  // r = min(3, 1)

  auto r3 = AmbientRing::make({"z1", "z2", "w"});
  auto s = ThickenedSpace::make(r3, 2, {E({2})});
  CHECK(bs_exponent(*s, 5, 1) == 3);  // r = min(5,2) = 2, k = 2

  CHECK_THROWS_AS(bs_exponent(*space_wk(2), 0, 1), DomainError);
  CHECK_THROWS_AS(bs_exponent(*space_wk(2), 1, 0), DomainError);
}

TEST_CASE("certify the z^3 identity exactly") {
  auto s = space_wk(3);
  auto r = s->ring();
  CertifyRequest req{P(r, "z^3"), Ideal::parse(r, {"z+w"}), s, 1};
  auto out = certify_membership(req);
  REQUIRE(out.ok());
  REQUIRE(out.certificate.has_value());
  const auto& cert = *out.certificate;
  // collected certificate matches the hand identity z^3 = (z+w)(z^2-zw+w^2) - w^3
  REQUIRE(cert.terms.size() == 1);
  CHECK(cert.terms[0].coefficient == P(r, "z^2 - z*w + w^2"));
  CHECK(cert.terms[0].generator_indices == std::vector<std::size_t>{0});
  CHECK(cert.j_witness == P(r, "-w^3"));
  CHECK(verify_certificate(cert, req));
}

TEST_CASE("certify the positive witness family w^p z^(k-p)") {
  for (std::uint32_t k = 2; k <= 4; ++k) {
    auto s = space_wk(k);
    auto r = s->ring();
    for (std::uint32_t p = 0; p < k; ++p) {
      Exponent e(2, 0);
      e[0] = k - p;
      e[1] = p;
      CertifyRequest req{Polynomial::monomial(r, e, 1), Ideal::parse(r, {"z+w"}), s, 1};
      auto out = certify_membership(req);
      REQUIRE(out.ok());
      CHECK(verify_certificate(*out.certificate, req));
    }
  }
  // spot check the worked k=3, p=1 j_witness
  auto s = space_wk(3);
  auto r = s->ring();
  CertifyRequest req{P(r, "w*z^2"), Ideal::parse(r, {"z+w"}), s, 1};
  auto out = certify_membership(req);
  REQUIRE(out.ok());
  CHECK(out.certificate->j_witness == P(r, "w^3"));
}

TEST_CASE("hypothesis failure carries the size report") {
  auto s = space_wk(3);
  auto r = s->ring();
  CertifyRequest req{P(r, "w*z"), Ideal::parse(r, {"z+w"}), s, 1};
  auto out = certify_membership(req);
  CHECK(out.status == CertifyStatus::HypothesisFailed);
  CHECK(!out.certificate.has_value());
  REQUIRE(out.report.has_value());
  CHECK(!out.report->overall_pass);
  CHECK(!out.report->records[1].pass);
  CHECK(out.report->records[1].slack == ExtendedRational::finite(Rational(-1)));
}

TEST_CASE("lift failure on the polynomial/local membership gap") {
  // z^2 is in (z^2+z^3) only up to the unit 1+z, which polynomial division
  // cannot invert; the valuative hypothesis still holds.
  auto s = space_wk(1);
  auto r = s->ring();
  CertifyRequest req{P(r, "z^2"), Ideal::parse(r, {"z^2 + z^3"}), s, 1};
  auto out = certify_membership(req);
  CHECK(out.status == CertifyStatus::LiftFailed);
  CHECK(out.failed_jet == 0);
}

TEST_CASE("induction state invariant is checkable from outside") {
  auto s = space_wk(3);
  auto r = s->ring();
  // f = w^0*(z+w)^3 + w^1*0 + ... , remainder carries the tail exactly
  Polynomial f = P(r, "z^3");
  InductionState st{0, {P(r, "(z+w)^3")}, P(r, "-3*z^2 - 3*z*w - w^2")};
  CHECK(induction_state_valid(f, st, *s));
  st.remainder = P(r, "-3*z^2");
  CHECK(!induction_state_valid(f, st, *s));
}

TEST_CASE("verifier accepts hand-built certificates and rejects mutations") {
  auto s = space_wk(2);
  auto r = s->ring();
  Ideal a = Ideal::parse(r, {"z + w", "z^2"});
  // f = a_1^2 with l = 2: terms = [(1, {1,1})], j_witness = 0
  CertifyRequest req{P(r, "(z+w)^2"), a, s, 2};
  MembershipCertificate cert{{CertificateTerm{P(r, "1"), {0, 0}}}, Polynomial::zero(r)};
  CHECK(verify_certificate(cert, req));

  MembershipCertificate bad = cert;
  bad.terms[0].coefficient += P(r, "1");
  std::string diag;
  CHECK(!verify_certificate(bad, req, &diag));
  CHECK(diag == "expansion does not reproduce f");

  // wrong arity of generator products
  MembershipCertificate wrong{{CertificateTerm{P(r, "z+w"), {0}}}, Polynomial::zero(r)};
  CHECK(!verify_certificate(wrong, req));

  // j_witness outside J
  MembershipCertificate leak = cert;
  leak.j_witness = P(r, "z");
  CHECK(!verify_certificate(leak, req));
}

TEST_CASE("optimality witnesses and their sharpness contract") {
  auto weights = default_weights(2);
  for (std::uint32_t k = 2; k <= 5; ++k) {
    auto s = space_wk(k);
    auto r = s->ring();
    for (std::uint32_t p = 0; p < k; ++p) {
      auto [f, a] = optimality_witness(*s, p);
      Exponent expect(2, 0);
      expect[0] = k - 1 - p;
      expect[1] = p;
      CHECK(f == Polynomial::monomial(r, expect, 1));
      REQUIRE(a.generators.size() == 1);
      CHECK(a.generators[0] == P(r, "z+w"));

      auto report = graded_size_check(f, a, *s, 1, weights);
      CHECK(!report.overall_pass);
      for (std::uint32_t j = 0; j < k; ++j) {
        if (j == p) {
          CHECK(!report.records[j].pass);
          CHECK(report.records[j].slack == ExtendedRational::finite(Rational(-1)));
        } else {
          CHECK(report.records[j].pass);
        }
      }
      CHECK(!raw_member(f, a, *s, 1));
    }
  }

  // degenerate reduced witness: 1 is not in the proper ideal (z+w, w)
  auto s1 = space_wk(1);
  auto [f1, a1] = optimality_witness(*s1, 0);
  CHECK(f1 == Polynomial::constant(s1->ring(), 1));
  CHECK(!raw_member(f1, a1, *s1, 1));
  auto rep = graded_size_check(f1, a1, *s1, 1, weights);
  CHECK(!rep.overall_pass);
  CHECK(rep.records[0].slack == ExtendedRational::finite(Rational(-1)));

  CHECK_THROWS_AS(optimality_witness(*s1, 1), DomainError);
}

TEST_CASE("search recovers the sharp exponent from the witness corpus") {
  for (std::uint32_t k : {2u, 3u}) {
    auto s = space_wk(k);
    auto r = s->ring();
    std::vector<SearchCase> corpus;
    for (std::uint32_t p = 0; p < k; ++p) {
      auto [f, a] = optimality_witness(*s, p);
      corpus.push_back(SearchCase{f, a, 1});
      Exponent e(2, 0);
      e[0] = k - p;
      e[1] = p;
      corpus.push_back(SearchCase{Polynomial::monomial(r, e, 1),
                                  Ideal::parse(r, {"z+w"}), 1});
    }
    auto result = search_minimal_N(s, corpus);
    CHECK(result.minimal_N == static_cast<std::int64_t>(k));  // r + k - 1 with r = 1
    CHECK(!result.vacuous);
  }

  // reduced corpus: N = r
  auto s1 = space_wk(1);
  auto r = s1->ring();
  std::vector<SearchCase> corpus;
  auto [f0, a0] = optimality_witness(*s1, 0);
  corpus.push_back(SearchCase{f0, a0, 1});
  corpus.push_back(SearchCase{P(r, "z"), Ideal::parse(r, {"z+w"}), 1});
  auto result = search_minimal_N(s1, corpus);
  CHECK(result.minimal_N == 1);
  CHECK(!result.vacuous);

  // no case ever satisfies the hypotheses: vacuous at the bottom
  std::vector<SearchCase> hopeless;
  hopeless.push_back(SearchCase{P(r, "z"), Ideal::parse(r, {"z*w"}), 1});
  // N = 0 still has the trivially-true exponent-0 condition as a
  // counterexample; the first exponent with no counterexample is 1.
  auto v = search_minimal_N(s1, hopeless);
  CHECK(v.minimal_N == 1);
  CHECK(v.vacuous);
}

TEST_CASE("soundness and completeness on constructed requests") {
  Rng rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    CertifyRequest req = rand_constructed_request(rng);
    auto report = graded_size_check(req.f, req.ideal, *req.space, req.l,
                                    default_weights(req.space->ring()->var_count()));
    CHECK(report.overall_pass);
    auto out = certify_membership(req);
    REQUIRE(out.ok());
    CHECK(verify_certificate(*out.certificate, req));
  }
}

TEST_CASE("certification is monotone in l on the constructed corpus") {
  Rng rng(16);
  int checked = 0;
  while (checked < 25) {
    CertifyRequest req = rand_constructed_request(rng);
    if (req.l != 2) continue;
    ++checked;
    auto out2 = certify_membership(req);
    REQUIRE(out2.ok());
    CertifyRequest weaker{req.f, req.ideal, req.space, 1};
    auto out1 = certify_membership(weaker);
    CHECK(out1.ok());
  }
}

TEST_CASE("classical specialization at k = 1 for monomial ideals") {
  Rng rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t zc = static_cast<std::size_t>(rand_int(rng, 1, 3));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < zc; ++i) names.push_back("z" + std::to_string(i + 1));
    names.push_back("w");
    auto ring = AmbientRing::make(names);
    auto space = ThickenedSpace::make(ring, zc, {E({1})});

    // monomial ideal in the z-variables only
    std::vector<Polynomial> gens;
    const int m = rand_int(rng, 1, 3);
    for (int i = 0; i < m; ++i) {
      Exponent e(ring->var_count(), 0);
      do {
        for (std::size_t t = 0; t < zc; ++t)
          e[t] = static_cast<std::uint32_t>(rand_int(rng, 0, 3));
      } while (total_degree(e) == 0);
      gens.push_back(Polynomial::monomial(ring, e, 1));
    }
    Ideal a = Ideal::make(ring, gens);
    const std::uint32_t l = static_cast<std::uint32_t>(rand_int(rng, 1, 2));
    const std::size_t rho = std::min(a.generators.size(), zc);
    const auto power = static_cast<std::int64_t>(rho + l - 1);

    std::vector<Exponent> zexps;
    for (const auto& g : a.generators) zexps.push_back(g.leading_monomial());
    auto np = newton_polyhedron(zexps, ring->var_count());

    // every monomial of the closure of a^(rho+l-1) certifies in a^l
    Exponent cur(ring->var_count(), 0);
    const std::uint32_t bound = 6;
    while (true) {
      if (total_degree(cur) <= bound && closure_member_monomial(cur, np, power)) {
        CertifyRequest req{Polynomial::monomial(ring, cur, 1), a, space, l};
        auto out = certify_membership(req);
        CHECK(out.ok());
        if (!out.ok()) break;
      }
      std::size_t i = 0;
      while (i < zc) {  // z-exponents only; w stays 0
        if (++cur[i] <= bound) break;
        cur[i] = 0;
        ++i;
      }
      if (i == zc) break;
    }
  }
}

TEST_CASE("certificates round-trip through JSON bit-exactly") {
  auto s = space_wk(3);
  auto r = s->ring();
  CertifyRequest req{P(r, "z^3"), Ideal::parse(r, {"z+w"}), s, 1};
  auto out = certify_membership(req);
  REQUIRE(out.ok());
  auto json = certificate_to_json(*out.certificate);
  auto back = certificate_from_json(json, r);
  CHECK(verify_certificate(back, req));
  CHECK(certificate_to_json(back) == json);
  CHECK(json.find("\"schema\": 1") != std::string::npos);
  CHECK(json.find("\"gens\"") != std::string::npos);
}
