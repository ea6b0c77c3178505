#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bslab/errors.hpp"
#include "bslab/serialize.hpp"
#include "test_util.hpp"

using namespace bslab;
using namespace bslab::testutil;

namespace {

Exponent E(std::initializer_list<std::uint32_t> xs) { return Exponent(xs); }

SpacePtr space_wk(std::uint32_t k) {
  return ThickenedSpace::make(ring_zw(), 1, {E({k})});
}

}  // namespace

TEST_CASE("staircases of the worked thickenings") {
  auto s3 = space_wk(3);
  CHECK(s3->staircase() == std::vector<Exponent>{E({0}), E({1}), E({2})});
  CHECK(s3->principal_k() == 3);

  auto reduced = space_wk(1);
  CHECK(reduced->staircase() == std::vector<Exponent>{E({0})});

  auto r2 = AmbientRing::make({"z", "w1", "w2"});
  auto s = ThickenedSpace::make(r2, 1, {E({2, 0}), E({0, 1})});
  CHECK(s->staircase() == std::vector<Exponent>{E({0, 0}), E({1, 0})});
  CHECK(!s->principal_k());
}

TEST_CASE("staircases are lower sets containing zero") {
  auto r2 = AmbientRing::make({"z", "w1", "w2"});
  for (auto gens : {std::vector<Exponent>{E({3, 0}), E({0, 2})},
                    std::vector<Exponent>{E({2, 0}), E({0, 3}), E({1, 1})},
                    std::vector<Exponent>{E({1, 0}), E({0, 1})}}) {
    auto s = ThickenedSpace::make(r2, 1, gens);
    CHECK(s->in_staircase(E({0, 0})));
    for (const auto& alpha : s->staircase()) {
      Exponent below = alpha;
      for (std::size_t i = 0; i < below.size(); ++i) {
        if (below[i] == 0) continue;
        --below[i];
        CHECK(s->in_staircase(below));
        ++below[i];
      }
    }
  }
}

TEST_CASE("jet coefficients involve only support variables") {
  auto r2 = AmbientRing::make({"z", "w1", "w2"});
  auto s = ThickenedSpace::make(r2, 1, {E({2, 0}), E({0, 2})});
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    auto jet = taylor_jet(rand_polynomial(rng, r2, 6, 6), s);
    for (const auto& [alpha, coeff] : jet.coefficients)
      for (std::size_t i = 0; i < s->w_count(); ++i)
        CHECK(!coeff.depends_on(s->w_var(i)));
  }
}

TEST_CASE("staircase construction rejects bad thickenings") {
  auto r2 = AmbientRing::make({"z", "w1", "w2"});
  // (w1^2) alone leaves w2 unconstrained: infinite staircase
  CHECK_THROWS_AS(ThickenedSpace::make(r2, 1, {E({2, 0})}), DomainError);
  // unit generator
  CHECK_THROWS_AS(ThickenedSpace::make(r2, 1, {E({0, 0})}), DomainError);
  // needs at least one z and one w
  CHECK_THROWS_AS(ThickenedSpace::make(ring_zw(), 2, {Exponent{}}), DomainError);
}

TEST_CASE("taylor jets read off transversal derivatives") {
  auto s = space_wk(3);
  auto r = s->ring();

  auto jet = taylor_jet(P(r, "z + 3*z*w + w^5"), s);
  CHECK(jet.coefficient(E({0})) == P(r, "z"));
  CHECK(jet.coefficient(E({1})) == P(r, "3*z"));
  CHECK(jet.coefficient(E({2})).is_zero());

  CHECK(taylor_jet(P(r, "w^3"), s).is_zero());

  auto j2 = taylor_jet(P(r, "w^2*z^2"), s);
  CHECK(j2.coefficient(E({0})).is_zero());
  CHECK(j2.coefficient(E({1})).is_zero());
  CHECK(j2.coefficient(E({2})) == P(r, "2*z^2"));
}

TEST_CASE("jet multiplication is the truncated Leibniz convolution") {
  auto s = space_wk(3);
  auto r = s->ring();

  CHECK(jet_mul(taylor_jet(P(r, "w"), s), taylor_jet(P(r, "w^2"), s)).is_zero());

  auto f = P(r, "z^2 + z*w + w^2");
  auto scaled = jet_mul(taylor_jet(P(r, "z"), s), taylor_jet(f, s));
  CHECK(scaled == taylor_jet(P(r, "z") * f, s));

  auto prod = jet_mul(taylor_jet(P(r, "1+w"), s), taylor_jet(P(r, "1-w"), s));
  CHECK(prod.coefficient(E({0})) == P(r, "1"));
  CHECK(prod.coefficient(E({1})).is_zero());
  CHECK(prod.coefficient(E({2})) == P(r, "-2"));
  CHECK(prod == taylor_jet(P(r, "1 - w^2"), s));
}

TEST_CASE("jets form a ring isomorphic to the quotient") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto k = static_cast<std::uint32_t>(rand_int(rng, 1, 4));
    auto s = space_wk(k);
    auto f = rand_polynomial(rng, s->ring(), 8, 6);
    auto g = rand_polynomial(rng, s->ring(), 8, 6);
    CHECK(jet_mul(taylor_jet(f, s), taylor_jet(g, s)) == taylor_jet(f * g, s));
  }
}

TEST_CASE("jets of sums and reconstruction") {
  Rng rng(8);
  auto s = space_wk(4);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = rand_polynomial(rng, s->ring(), 7, 5);
    auto g = rand_polynomial(rng, s->ring(), 7, 5);
    // additivity
    auto sum = taylor_jet(f + g, s);
    auto jf = taylor_jet(f, s);
    auto jg = taylor_jet(g, s);
    for (const auto& alpha : s->staircase())
      CHECK(sum.coefficient(alpha) == jf.coefficient(alpha) + jg.coefficient(alpha));
    // a reconstructed representative has the same jet
    CHECK(taylor_jet(jet_reconstruct(jf), s) == jf);
  }
}

TEST_CASE("noetherian defining sets per staircase exponent") {
  auto s3 = space_wk(3);
  auto ops = noetherian_set(*s3);
  REQUIRE(ops.size() == 3);
  CHECK(ops[0].order == 0);
  CHECK(ops[1].order == 1);
  CHECK(ops[2].order == 2);  // d = k-1

  auto reduced = noetherian_set(*space_wk(1));
  REQUIRE(reduced.size() == 1);
  CHECK(reduced[0].order == 0);

  auto r2 = AmbientRing::make({"z", "w1", "w2"});
  auto s = ThickenedSpace::make(r2, 1, {Exponent{2, 0}, Exponent{0, 1}});
  auto ops2 = noetherian_set(*s);
  REQUIRE(ops2.size() == 2);
  CHECK(ops2[0].w_multi_order == Exponent{0, 0});
  CHECK(ops2[1].w_multi_order == Exponent{1, 0});
}

TEST_CASE("operators evaluate transversal derivatives on the support") {
  auto s = space_wk(3);
  auto r = s->ring();
  auto ops = noetherian_set(*s);

  CHECK(apply_operator(ops[1], P(r, "w*z"), *s) == P(r, "z"));
  CHECK(apply_operator(ops[0], P(r, "z^2 + w"), *s) == P(r, "z^2"));
  CHECK(apply_operator(ops[2], P(r, "w^3"), *s).is_zero());
}

TEST_CASE("membership in J via the defining tuple") {
  auto s3 = space_wk(3);
  auto r = s3->ring();
  // w vanishes identically on the support but is not in (w^3)
  CHECK(!member_of_J(P(r, "w"), *s3));
  CHECK(member_of_J(P(r, "w^3*(1+z)"), *s3));

  auto r2 = AmbientRing::make({"z", "w1", "w2"});
  auto s = ThickenedSpace::make(r2, 1, {Exponent{2, 0}, Exponent{0, 1}});
  CHECK(member_of_J(P(r2, "w1*w2"), *s));
  CHECK(!member_of_J(P(r2, "w1"), *s));
}

TEST_CASE("membership agrees with Groebner normal form mod J") {
  Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    SpacePtr s;
    if (trial % 3 == 0) {
      auto r2 = AmbientRing::make({"z", "w1", "w2"});
      s = ThickenedSpace::make(r2, 1,
                               {Exponent{static_cast<std::uint32_t>(rand_int(rng, 1, 3)), 0},
                                Exponent{0, static_cast<std::uint32_t>(rand_int(rng, 1, 2))}});
    } else {
      s = space_wk(static_cast<std::uint32_t>(rand_int(rng, 1, 4)));
    }
    auto gb = groebner(s->j_as_ideal());
    auto f = rand_polynomial(rng, s->ring(), 10, 7);
    CHECK(member_of_J(f, *s) == normal_form(f, gb).remainder.is_zero());
    // the jet map has kernel exactly J
    CHECK(member_of_J(f, *s) == taylor_jet(f, s).is_zero());
  }
}

TEST_CASE("defining-set soundness: J times anything stays in J") {
  Rng rng(10);
  auto r2 = AmbientRing::make({"z", "w1", "w2"});
  auto s = ThickenedSpace::make(r2, 1, {Exponent{2, 0}, Exponent{0, 2}});
  for (const auto& g : s->j_generators()) {
    Exponent lift(r2->var_count(), 0);
    for (std::size_t i = 0; i < s->w_count(); ++i) lift[s->w_var(i)] = g[i];
    Polynomial gen = Polynomial::monomial(r2, lift, 1);
    for (int trial = 0; trial < 20; ++trial)
      CHECK(member_of_J(gen * rand_polynomial(rng, r2, 5, 4), *s));
  }
}

TEST_CASE("space description files round-trip") {
  auto s = space_from_json(R"({"z_vars": ["z"], "w_vars": ["w"], "J": ["w^3"]})");
  CHECK(s->z_count() == 1);
  CHECK(s->w_count() == 1);
  CHECK(s->principal_k() == 3);
  auto again = space_from_json(space_to_json(*s));
  CHECK(same_space(s, again));

  CHECK_THROWS_AS(space_from_json(R"({"z_vars": ["z"], "w_vars": ["w"], "J": ["w+z"]})"),
                  DomainError);
  CHECK_THROWS_AS(space_from_json(R"({"z_vars":["z"],"w_vars":["w"]})"), DomainError);
}

TEST_CASE("jet serialization lists every staircase slot in graded order") {
  auto s = space_wk(3);
  auto jet = taylor_jet(P(s->ring(), "z + 3*z*w + w^5"), s);
  CHECK(jet_to_text(jet) == "w^(0): z\nw^(1): 3*z\nw^(2): 0\n");
}
