#include "bslab/groebner.hpp"

#include <algorithm>
#include <deque>

#include "bslab/errors.hpp"

namespace bslab {

namespace {

struct Tracked {
  Polynomial poly;
  std::vector<Polynomial> rep;  // poly == sum rep[j] * source_gen[j]
};

void check_cap(const Polynomial& p, const GroebnerOptions& opts) {
  if (p.degree() > opts.degree_cap)
    throw ResourceLimitError("Buchberger degree cap " + std::to_string(opts.degree_cap) +
                             " exceeded (BSLAB_DEGREE_CAP raises it)");
}

void make_monic(Tracked& t) {
  const Rational lc = t.poly.leading_term().second;
  if (lc == 1) return;
  const Rational inv = Rational(1) / lc;
  t.poly *= inv;
  for (auto& r : t.rep) r *= inv;
}

// Divide p by the current basis, tracking quotients into the source
// representation. Returns the fully reduced remainder.
Tracked reduce(Tracked p, const std::vector<Tracked>& basis, const GroebnerOptions& opts) {
  const RingPtr& ring = p.poly.ring();
  Polynomial remainder(ring);
  while (!p.poly.is_zero()) {
    check_cap(p.poly, opts);
    const auto& [lm, lc] = p.poly.leading_term();
    bool reduced = false;
    for (const auto& b : basis) {
      const auto& blm = b.poly.leading_monomial();
      if (!exponent_divides(blm, lm)) continue;
      // b is monic
      Polynomial q = Polynomial::monomial(ring, exponent_sub(lm, blm), lc);
      p.poly -= q * b.poly;
      for (std::size_t j = 0; j < p.rep.size(); ++j)
        if (!b.rep[j].is_zero()) p.rep[j] -= q * b.rep[j];
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial lt = Polynomial::monomial(ring, lm, lc);
      remainder += lt;
      p.poly -= lt;
    }
  }
  p.poly = std::move(remainder);
  return p;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

GroebnerBasis finish(const Ideal& ideal, std::vector<Tracked> basis, const GroebnerOptions& opts) {
  const RingPtr& ring = ideal.ring;

  // Minimalize: drop elements whose leading monomial another one divides.
  std::vector<bool> redundant(basis.size(), false);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || redundant[j]) continue;
      const auto& li = basis[i].poly.leading_monomial();
      const auto& lj = basis[j].poly.leading_monomial();
      if (exponent_divides(lj, li) && (li != lj || j < i)) {
        redundant[i] = true;
        break;
      }
    }
  }
  std::vector<Tracked> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!redundant[i]) minimal.push_back(std::move(basis[i]));

  // Tail-reduce each element against the others.
  std::vector<Tracked> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Tracked> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Tracked r = reduce(minimal[i], others, opts);
    if (r.poly.is_zero()) continue;  // does not happen for minimal leads
    make_monic(r);
    reduced.push_back(std::move(r));
  }

  std::sort(reduced.begin(), reduced.end(), [&](const Tracked& a, const Tracked& b) {
    return ring->compare(a.poly.leading_monomial(), b.poly.leading_monomial()) < 0;
  });

  GroebnerBasis gb;
  gb.ring = ring;
  gb.source = ideal;
  for (auto& t : reduced) {
    gb.basis.push_back(std::move(t.poly));
    gb.transform.push_back(std::move(t.rep));
  }
  return gb;
}

}  // namespace

GroebnerBasis groebner(const Ideal& ideal, const GroebnerOptions& opts) {
  if (ideal.zero_ideal) throw DomainError("Groebner basis of the zero ideal");
  const RingPtr& ring = ideal.ring;
  const std::size_t m = ideal.generators.size();

  std::vector<Tracked> basis;
  for (std::size_t j = 0; j < m; ++j) {
    Tracked t{ideal.generators[j], std::vector<Polynomial>(m, Polynomial::zero(ring))};
    t.rep[j] = Polynomial::constant(ring, 1);
    make_monic(t);
    basis.push_back(std::move(t));
  }

  if (ideal.is_monomial()) return finish(ideal, std::move(basis), opts);

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    const auto& li = basis[i].poly.leading_monomial();
    const auto& lj = basis[j].poly.leading_monomial();
    if (coprime(li, lj)) continue;  // product criterion
    const Exponent lcm = exponent_lcm(li, lj);
    Polynomial qi = Polynomial::monomial(ring, exponent_sub(lcm, li), 1);
    Polynomial qj = Polynomial::monomial(ring, exponent_sub(lcm, lj), 1);
    Tracked s{qi * basis[i].poly - qj * basis[j].poly, {}};
    s.rep.reserve(m);
    for (std::size_t t = 0; t < m; ++t)
      s.rep.push_back(qi * basis[i].rep[t] - qj * basis[j].rep[t]);
    check_cap(s.poly, opts);
    Tracked r = reduce(std::move(s), basis, opts);
    if (r.poly.is_zero()) continue;
    make_monic(r);
    for (std::size_t t = 0; t < basis.size(); ++t) pairs.emplace_back(t, basis.size());
    basis.push_back(std::move(r));
  }

  return finish(ideal, std::move(basis), opts);
}

NormalForm normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!same_ring(f.ring(), gb.ring)) throw RingMismatchError("polynomial from another ring");
  Tracked p{f, std::vector<Polynomial>(gb.basis.size(), Polynomial::zero(gb.ring))};
  std::vector<Tracked> basis;
  basis.reserve(gb.basis.size());
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    std::vector<Polynomial> rep(gb.basis.size(), Polynomial::zero(gb.ring));
    rep[i] = Polynomial::constant(gb.ring, 1);
    basis.push_back(Tracked{gb.basis[i], std::move(rep)});
  }
  GroebnerOptions unlimited;
  unlimited.degree_cap = UINT64_MAX;
  Tracked r = reduce(std::move(p), basis, unlimited);
  NormalForm nf{std::move(r.poly), {}};
  for (auto& q : r.rep) nf.cofactors.push_back(-q);
  return nf;
}

std::optional<std::vector<Polynomial>> ideal_member(const Polynomial& f, const GroebnerBasis& gb) {
  NormalForm nf = normal_form(f, gb);
  if (!nf.remainder.is_zero()) return std::nullopt;
  const std::size_t m = gb.source.generators.size();
  std::vector<Polynomial> out(m, Polynomial::zero(gb.ring));
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    if (nf.cofactors[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) out[j] += nf.cofactors[i] * gb.transform[i][j];
  }
  return out;
}

std::optional<std::vector<Polynomial>> ideal_member(const Polynomial& f, const Ideal& ideal,
                                                    const GroebnerOptions& opts) {
  if (ideal.zero_ideal) {
    if (!f.is_zero()) return std::nullopt;
    return std::vector<Polynomial>{Polynomial::zero(ideal.ring)};
  }
  return ideal_member(f, groebner(ideal, opts));
}

}  // namespace bslab
