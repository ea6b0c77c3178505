#include "bslab/closure.hpp"

#include <algorithm>
#include <numeric>

#include "bslab/errors.hpp"

namespace bslab {

namespace {

using Vec = std::vector<Integer>;

Integer dot(const Vec& a, const Vec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void make_primitive(Vec& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) x /= g;
}

// Extreme rays of the dual cone {a : a.g >= 0 for all g} by the double
// description method; generators must span the full space.
std::vector<Vec> dual_cone_rays(const std::vector<Vec>& gens, std::size_t d) {
  // Pick d linearly independent generators for the initial simplicial cone.
  std::vector<std::size_t> base;
  std::vector<std::vector<Rational>> echelon;  // row-reduced copies
  for (std::size_t i = 0; i < gens.size() && base.size() < d; ++i) {
    std::vector<Rational> row(d);
    for (std::size_t j = 0; j < d; ++j) row[j] = Rational(gens[i][j]);
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      std::size_t pivot = 0;
      while (pivot < d && echelon[r][pivot] == 0) ++pivot;
      if (pivot < d && row[pivot] != 0) {
        Rational factor = row[pivot] / echelon[r][pivot];
        for (std::size_t j = pivot; j < d; ++j) row[j] -= factor * echelon[r][j];
      }
    }
    if (std::any_of(row.begin(), row.end(), [](const Rational& x) { return x != 0; })) {
      echelon.push_back(std::move(row));
      base.push_back(i);
    }
  }
  if (base.size() < d) throw DomainError("polyhedron generators do not span the space");

  // Invert the base matrix exactly: rays of the simplicial dual cone are the
  // columns of the inverse (so that base_i . ray_k = delta_ik).
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(2 * d, Rational(0)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a[i][j] = Rational(gens[base[i]][j]);
    a[i][d + i] = 1;
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && a[piv][col] == 0) ++piv;
    if (piv == d) throw DomainError("singular base matrix");
    std::swap(a[col], a[piv]);
    Rational inv = Rational(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < 2 * d; ++j) a[r][j] -= f * a[col][j];
    }
  }

  struct Ray {
    Vec v;
    std::vector<char> tight;  // over gens, processed so far
  };
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < d; ++k) {
    Integer lcm = 1;
    for (std::size_t i = 0; i < d; ++i)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a[i][d + k].get_den().get_mpz_t());
    Vec v(d);
    for (std::size_t i = 0; i < d; ++i) {
      Rational x = a[i][d + k] * Rational(lcm);
      v[i] = x.get_num();
    }
    make_primitive(v);
    Ray r{std::move(v), std::vector<char>(gens.size(), 0)};
    for (std::size_t i = 0; i < d; ++i)
      if (i != k) r.tight[base[i]] = 1;
    rays.push_back(std::move(r));
  }

  auto processed_subset = [&](const std::vector<char>& common, const Ray& s,
                              const std::vector<char>& done) {
    for (std::size_t i = 0; i < common.size(); ++i)
      if (done[i] && common[i] && !s.tight[i]) return false;
    return true;
  };

  std::vector<char> done(gens.size(), 0);
  for (auto b : base) done[b] = 1;

  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    if (done[gi]) continue;
    const Vec& g = gens[gi];
    std::vector<Integer> val(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) val[r] = dot(g, rays[r].v);

    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (val[r] >= 0) {
        Ray keep = rays[r];
        if (val[r] == 0) keep.tight[gi] = 1;
        next.push_back(std::move(keep));
      }
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (val[q] >= 0) continue;
        // combinatorial adjacency: no third ray is tight on the common set
        std::vector<char> common(gens.size(), 0);
        for (std::size_t i = 0; i < gens.size(); ++i)
          common[i] = rays[p].tight[i] && rays[q].tight[i];
        bool adjacent = true;
        for (std::size_t s = 0; s < rays.size() && adjacent; ++s) {
          if (s == p || s == q) continue;
          if (processed_subset(common, rays[s], done)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray nr;
        nr.v.resize(d);
        for (std::size_t i = 0; i < d; ++i) nr.v[i] = val[p] * rays[q].v[i] - val[q] * rays[p].v[i];
        make_primitive(nr.v);
        nr.tight = std::move(common);
        nr.tight[gi] = 1;
        next.push_back(std::move(nr));
      }
    }
    done[gi] = 1;
    rays = std::move(next);
  }

  std::vector<Vec> out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

NewtonPolyhedron newton_polyhedron(std::vector<Exponent> exponents, std::size_t dim) {
  if (exponents.empty()) throw DomainError("Newton polyhedron of an empty exponent set");
  for (const auto& e : exponents)
    if (e.size() != dim) throw DomainError("exponent length != dimension");
  std::sort(exponents.begin(), exponents.end());
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());

  const std::size_t d = dim + 1;
  std::vector<Vec> gens;
  for (const auto& e : exponents) {
    Vec v(d, 0);
    v[0] = 1;
    for (std::size_t i = 0; i < dim; ++i) v[1 + i] = Integer(e[i]);
    gens.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < dim; ++i) {
    Vec v(d, 0);
    v[1 + i] = 1;
    gens.push_back(std::move(v));
  }

  NewtonPolyhedron np;
  np.dim = dim;
  np.source_exponents = std::move(exponents);
  for (const auto& ray : dual_cone_rays(gens, d)) {
    bool has_normal = std::any_of(ray.begin() + 1, ray.end(),
                                  [](const Integer& x) { return x != 0; });
    if (!has_normal) continue;  // the trivial inequality 1 >= 0
    Facet f;
    f.normal.assign(ray.begin() + 1, ray.end());
    f.offset = -ray[0];
    for (const auto& x : f.normal)
      if (x < 0) throw Error("internal: negative facet normal");
    np.facets.push_back(std::move(f));
  }
  std::sort(np.facets.begin(), np.facets.end(), [](const Facet& a, const Facet& b) {
    return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
  });

  // Every facet must be supporting: attained by some source exponent.
  for (const auto& f : np.facets) {
    bool attained = false;
    for (const auto& e : np.source_exponents) {
      Integer v = 0;
      for (std::size_t i = 0; i < dim; ++i) v += f.normal[i] * Integer(e[i]);
      if (v < f.offset) throw Error("internal: facet cuts off a source exponent");
      if (v == f.offset) attained = true;
    }
    if (!attained) throw Error("internal: non-supporting facet");
  }
  return np;
}

NewtonPolyhedron newton_polyhedron(const Ideal& monomial_ideal) {
  if (monomial_ideal.zero_ideal)
    throw DomainError("Newton polyhedron of the zero ideal");
  std::vector<Exponent> exps;
  for (const auto& g : monomial_ideal.generators) {
    if (!g.is_monomial()) throw DomainError("non-monomial generator");
    exps.push_back(g.leading_monomial());
  }
  return newton_polyhedron(std::move(exps), monomial_ideal.ring->var_count());
}

bool closure_member_monomial(const Exponent& mon, const NewtonPolyhedron& np,
                             std::int64_t power) {
  if (power < 1) throw DomainError("closure power must be >= 1");
  if (mon.size() != np.dim) throw DomainError("exponent length != dimension");
  for (const auto& f : np.facets) {
    Integer v = 0;
    for (std::size_t i = 0; i < np.dim; ++i) v += f.normal[i] * Integer(mon[i]);
    if (v < Integer(power) * f.offset) return false;
  }
  return true;
}

bool power_closure_test(const Polynomial& f, const Ideal& ideal, std::uint32_t s_bound,
                        const GroebnerOptions& opts) {
  if (s_bound < 1) throw DomainError("s_bound must be >= 1");
  for (std::uint32_t s = 1; s <= s_bound; ++s) {
    if (ideal_member(f.pow(s), ideal_power(ideal, s), opts)) return true;
  }
  return false;
}

std::optional<std::int64_t> valuation_order(const Polynomial& f, const WeightVector& c) {
  if (c.size() != f.ring()->var_count()) throw DomainError("weight length != variable count");
  for (auto w : c)
    if (w < 1) throw DomainError("weights must be positive");
  if (f.is_zero()) return std::nullopt;
  std::optional<std::int64_t> best;
  for (const auto& [e, coeff] : f.terms()) {
    std::int64_t v = 0;
    for (std::size_t i = 0; i < e.size(); ++i) v += c[i] * static_cast<std::int64_t>(e[i]);
    if (!best || v < *best) best = v;
  }
  return best;
}

std::vector<WeightVector> default_weights(std::size_t n, std::int64_t max_entry) {
  std::vector<WeightVector> out;
  WeightVector cur(n, 1);
  while (true) {
    std::int64_t g = 0;
    for (auto x : cur) g = std::gcd(g, x);
    if (g == 1) out.push_back(cur);
    std::size_t i = 0;
    while (i < n) {
      if (++cur[i] <= max_entry) break;
      cur[i] = 1;
      ++i;
    }
    if (i == n) break;
  }
  return out;
}

const Rational& ExtendedRational::value() const {
  if (inf_ != 0) throw DomainError("infinite value");
  return value_;
}

bool ExtendedRational::operator<(const ExtendedRational& o) const {
  if (inf_ != o.inf_) return inf_ < o.inf_;
  return inf_ == 0 && value_ < o.value_;
}

std::string ExtendedRational::to_string() const {
  if (is_plus_infinity()) return "inf";
  if (is_minus_infinity()) return "-inf";
  return rational_to_string(value_);
}

namespace {

SizeReport size_check_impl(const Polynomial& f, const Ideal& ideal,
                           const ThickenedSpace& space, std::uint32_t l,
                           const std::vector<WeightVector>& weights,
                           std::optional<std::int64_t> exponent_base) {
  if (l < 1) throw DomainError("l must be >= 1");
  if (weights.empty()) throw DomainError("need at least one weight vector");
  if (!same_ring(f.ring(), space.ring()) || !same_ring(ideal.ring, space.ring()))
    throw RingMismatchError("size check data from different rings");

  const auto ops = noetherian_set(space);
  SizeReport report;
  report.l = l;
  report.m = ideal.generator_count();
  report.rho = std::min(report.m, space.z_count());
  report.d = 0;
  for (const auto& op : ops) report.d = std::max(report.d, op.order);

  // Size conditions hold on the reduced support, so the ideal is measured
  // through its restriction to {w = 0}.
  const auto wv = space.w_vars();
  std::vector<Polynomial> restricted;
  for (const auto& g : ideal.generators) {
    Polynomial r = g.restrict_zero(wv);
    if (!r.is_zero()) restricted.push_back(std::move(r));
  }

  report.exact = ideal.is_monomial();
  std::optional<NewtonPolyhedron> np;
  if (report.exact && !restricted.empty()) {
    std::vector<Exponent> exps;
    for (const auto& g : restricted) exps.push_back(g.leading_monomial());
    np = newton_polyhedron(std::move(exps), space.ring()->var_count());
  }

  report.overall_pass = true;
  for (const auto& op : ops) {
    SizeRecord rec;
    rec.alpha = op.w_multi_order;
    rec.op_order = op.order;
    const std::int64_t base =
        exponent_base ? *exponent_base
                      : static_cast<std::int64_t>(report.rho) + report.d;
    rec.required = base - static_cast<std::int64_t>(op.order) +
                   static_cast<std::int64_t>(l) - 1;

    const Polynomial g = apply_operator(op, f, space);

    bool valuative_pass = true;
    ExtendedRational slack = ExtendedRational::plus_infinity();
    std::optional<std::int64_t> attained;
    for (const auto& c : weights) {
      const auto vg = valuation_order(g, c);
      if (vg && (!attained || *vg < *attained)) attained = *vg;
      std::optional<std::int64_t> va;  // nu_c of the restricted ideal
      for (const auto& r : restricted) {
        auto v = valuation_order(r, c);
        if (v && (!va || *v < *va)) va = *v;
      }
      ExtendedRational slack_c = ExtendedRational::plus_infinity();
      bool pass_c = true;
      if (!vg || rec.required <= 0) {
        // L_alpha f vanishes identically, or the condition is |.| <= C
      } else if (!va) {
        pass_c = false;
        slack_c = ExtendedRational::minus_infinity();
      } else if (*va == 0) {
        // the ideal contains a unit on the support: condition is vacuous
      } else {
        pass_c = *vg >= rec.required * *va;
        slack_c = ExtendedRational::finite(Rational(*vg) / Rational(*va) -
                                           Rational(static_cast<long>(rec.required)));
      }
      if (!pass_c) valuative_pass = false;
      if (slack_c < slack) slack = slack_c;
    }
    rec.attained = attained;
    rec.slack = slack;

    if (report.exact) {
      bool exact_pass;
      if (rec.required <= 0) {
        exact_pass = true;
      } else if (!np) {
        exact_pass = g.is_zero();
      } else {
        exact_pass = true;
        for (const auto& [e, coeff] : g.terms()) {
          if (!closure_member_monomial(e, *np, rec.required)) {
            exact_pass = false;
            break;
          }
        }
      }
      rec.pass = exact_pass;
    } else {
      rec.pass = valuative_pass;
    }

    if (!rec.pass) report.overall_pass = false;
    report.records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace

SizeReport graded_size_check(const Polynomial& f, const Ideal& ideal,
                             const ThickenedSpace& space, std::uint32_t l,
                             const std::vector<WeightVector>& weights) {
  return size_check_impl(f, ideal, space, l, weights, std::nullopt);
}

SizeReport graded_size_check_at(const Polynomial& f, const Ideal& ideal,
                                const ThickenedSpace& space, std::uint32_t l,
                                const std::vector<WeightVector>& weights, std::int64_t N) {
  return size_check_impl(f, ideal, space, l, weights, N);
}

}  // namespace bslab
