// Acceptance suite: one criterion per section, each printed as a PASS/FAIL
// line with its runtime.  Everything runs on exact arithmetic with fixed
// seeds; no tolerances anywhere.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "logtor/arrangement.hpp"
#include "logtor/gf.hpp"
#include "logtor/invariants.hpp"
#include "logtor/quadric.hpp"
#include "logtor/torelli.hpp"

using namespace logtor;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Check {
  Outcome& outcome;
  void require(bool cond, const std::string& what) {
    if (!cond && outcome.pass) {
      outcome.pass = false;
      outcome.detail = what;
    }
  }
};

Shape q2shape() { return Shape({1, 1}); }

MPoly split_poly(int a, int b, const Rational& u, const Rational& v) {
  MPoly f(q2shape(), MultiDegree({a, b}));
  f.add_term({a, 0, b, 0}, u);
  f.add_term({0, a, 0, b}, v);
  return f;
}

MPoly random_poly(std::mt19937_64& rng, const MultiDegree& d, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> coeff(lo, hi);
  MPoly f(q2shape(), d);
  for (const auto& mono : monomial_basis(q2shape(), d)) f.add_term(mono, Rational(coeff(rng)));
  if (f.is_zero()) f.add_term(monomial_basis(q2shape(), d).front(), Rational(1));
  return f;
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t n, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> coeff(lo, hi);
  while (true) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(coeff(rng));
    if (!is_zero(determinant(m))) return m;
  }
}

Rational random_nonzero(std::mt19937_64& rng, int lo = 1, int hi = 9) {
  std::uniform_int_distribution<int> coeff(lo, hi);
  std::uniform_int_distribution<int> sign(0, 1);
  Rational v(coeff(rng));
  return sign(rng) ? v : -v;
}

// --------------------------------------------------------------------------
// 1. Split-type pairs are Jacobian-indistinguishable.

Outcome criterion1() {
  Outcome outcome;
  Check check{outcome};
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<int> degd(2, 4);
  for (int trial = 0; trial < 50; ++trial) {
    int a = degd(rng), b = degd(rng);
    MPoly f = split_poly(a, b, random_nonzero(rng), random_nonzero(rng));
    MPoly g = split_poly(a, b, random_nonzero(rng), random_nonzero(rng));
    auto rep = distinguish(f, g);
    check.require(rep.verdict == DistinguishReport::Verdict::JacobianIndistinguishable,
                  "split pair distinguished at trial " + std::to_string(trial));
    for (std::size_t i = 0; i < 2; ++i) {
      check.require(span_equal(jacobian_space(f, i), jacobian_space(g, i)),
                    "span mismatch in factor " + std::to_string(i + 1));
    }
  }
  return outcome;
}

// --------------------------------------------------------------------------
// 2. Normal-form recovery round trip on scrambled split pairs.

Outcome criterion2() {
  Outcome outcome;
  Check check{outcome};
  std::mt19937_64 rng(2002);
  std::uniform_int_distribution<int> degd(2, 4);
  int done = 0;
  while (done < 25) {
    int a = degd(rng), b = degd(rng);
    Rational u = random_nonzero(rng), v = random_nonzero(rng);
    Rational u2 = random_nonzero(rng), v2 = random_nonzero(rng);
    MPoly f0 = split_poly(a, b, u, v);
    MPoly g0 = split_poly(a, b, u2, v2);
    FactorChange cx{0, random_invertible(rng, 2)};
    FactorChange cy{1, random_invertible(rng, 2)};
    MPoly f = f0.apply_change(cx).apply_change(cy);
    MPoly g = g0.apply_change(cx).apply_change(cy);
    if (proportional(f, g)) continue;
    ++done;

    auto rec = recover_split_normal_form(f, g);
    check.require(rec.has_value(), "recovery failed at trial " + std::to_string(done));
    if (!rec) continue;
    QuadExt planted = QuadExt((v2 / u2) / (v / u));
    check.require(rec->lambda == planted || rec->lambda == QuadExt(1) / planted,
                  "lambda mismatch at trial " + std::to_string(done));

    // the recorded change maps the inputs to exact split form
    MPolyQ moved_f = f.lift<QuadExt>().apply_change(rec->change[0]).apply_change(rec->change[1]);
    MPolyQ moved_g = g.lift<QuadExt>().apply_change(rec->change[0]).apply_change(rec->change[1]);
    std::vector<int> xm{a, 0, b, 0}, ym{0, a, 0, b};
    bool f_split = moved_f.term_count() == 2 && !moved_f.coeff(xm).is_zero() &&
                   moved_f.coeff(ym) / moved_f.coeff(xm) == rec->v_f;
    bool g_split = moved_g.term_count() == 2 && !moved_g.coeff(xm).is_zero() &&
                   moved_g.coeff(ym) / moved_g.coeff(xm) == rec->v_g;
    check.require(f_split && g_split, "recorded change does not reach split form");
    check.require(rec->v_g / rec->v_f == rec->lambda, "lambda inconsistent with the split forms");
  }
  return outcome;
}

// --------------------------------------------------------------------------
// 3. Generic distinguishability of smooth (3,3) pairs; split orbits never
//    distinguished.

Outcome criterion3() {
  Outcome outcome;
  Check check{outcome};
  std::mt19937_64 rng(3003);

  auto gate = bott_kunneth_h1_tangent(q2shape(), MultiDegree({3, 3}));
  check.require(gate.vanishes, "h1 gate does not vanish at degree (3,3)");

  auto smooth33 = [&]() {
    while (true) {
      MPoly f = random_poly(rng, MultiDegree({3, 3}));
      if (smooth_on_p1xp1(f).is_smooth_evidence()) return f;
    }
  };

  int distinct = 0;
  for (int trial = 0; trial < 100; ++trial) {
    MPoly f = smooth33();
    MPoly g = smooth33();
    auto rep = distinguish(f, g);
    check.require(rep.hypothesis_verified, "gate not verified on a trial");
    if (rep.verdict == DistinguishReport::Verdict::DistinctBundles) ++distinct;
  }
  check.require(distinct >= 95, "only " + std::to_string(distinct) + "/100 pairs distinguished");

  // same split orbit: never distinguished
  std::uniform_int_distribution<int> degd(3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    MPoly f0 = split_poly(3, 3, random_nonzero(rng), random_nonzero(rng));
    MPoly g0 = split_poly(3, 3, random_nonzero(rng), random_nonzero(rng));
    FactorChange cx{0, random_invertible(rng, 2)};
    FactorChange cy{1, random_invertible(rng, 2)};
    MPoly f = f0.apply_change(cx).apply_change(cy);
    MPoly g = g0.apply_change(cx).apply_change(cy);
    auto rep = distinguish(f, g);
    check.require(rep.verdict == DistinguishReport::Verdict::JacobianIndistinguishable,
                  "split-orbit pair distinguished");
  }
  (void)degd;
  return outcome;
}

// --------------------------------------------------------------------------
// 4. Conic-pencil cross-validation on random smooth quadric surfaces.

struct SegreModel {
  Quadric q;
  Matrix s;  // points of Q are s * segre(x, y)

  static SegreModel random(std::mt19937_64& rng) {
    Matrix seg(4, 4);
    seg(0, 3) = seg(3, 0) = Rational(1, 2);
    seg(1, 2) = seg(2, 1) = Rational(-1, 2);
    Matrix s = random_invertible(rng, 4, -2, 2);
    Matrix sinv = invert(s);
    Matrix a = sinv.transpose() * seg * sinv;
    return SegreModel{Quadric(a), s};
  }

  // (1,1)-form cutting the pullback of the hyperplane section
  MPoly pullback(const Hyperplane& h) const {
    std::vector<Rational> sth(4, Rational(0));
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t i = 0; i < 4; ++i) sth[j] += s(i, j) * h.h()[i];
    MPoly f(q2shape(), MultiDegree({1, 1}));
    f.add_term({1, 0, 1, 0}, sth[0]);
    f.add_term({1, 0, 0, 1}, sth[1]);
    f.add_term({0, 1, 1, 0}, sth[2]);
    f.add_term({0, 1, 0, 1}, sth[3]);
    return f;
  }

  // factor coordinates of the preimage of a point of Q
  std::pair<std::vector<QuadExt>, std::vector<QuadExt>> preimage(const std::vector<QuadExt>& p) const {
    Matrix sinv = invert(s);
    std::vector<QuadExt> z(4, QuadExt(0));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) z[i] += p[j] * QuadExt(sinv(i, j));
    std::vector<QuadExt> x, y;
    if (!z[0].is_zero() || !z[2].is_zero())
      x = {z[0], z[2]};
    else
      x = {z[1], z[3]};
    if (!z[0].is_zero() || !z[1].is_zero())
      y = {z[0], z[1]};
    else
      y = {z[2], z[3]};
    return {x, y};
  }
};

Outcome criterion4() {
  Outcome outcome;
  Check check{outcome};
  std::mt19937_64 rng(4004);
  std::uniform_int_distribution<int> coeff(-4, 4);

  auto run_case = [&](const SegreModel& model, const Hyperplane& h1, const Hyperplane& h2,
                      bool expect_double) {
    BinaryQuadratic tq = pencil_tangency_quadratic(model.q, h1, h2);
    if (tq.is_zero_form()) return false;
    auto expected = roots(tq);
    if (expect_double && !(expected.size() == 1 && expected[0].multiplicity == 2)) return false;

    MPoly f = model.pullback(h1), g = model.pullback(h2);
    PencilReport rep = pencil_singular_members(f, g);
    check.require(!rep.family_singular, "pencil unexpectedly singular as a family");
    check.require(rep.members.size() == expected.size(), "member count mismatch");
    for (const auto& r : expected) {
      bool found = false;
      for (const auto& m : rep.members)
        found |= (m.u == r.c1 && m.v == r.c2 && m.multiplicity == r.multiplicity && m.verified);
      check.require(found, "tangency root missing among pencil members");
    }

    // each singular point lies on Q and annihilates the member's partials
    for (const auto& sp : singular_conic_points(model.q, h1, h2)) {
      check.require(model.q.evaluate(sp.point).is_zero(), "singular point off the quadric");
      MPolyQ w = f.lift<QuadExt>() * sp.member.c1 + g.lift<QuadExt>() * sp.member.c2;
      auto [x, y] = model.preimage(sp.point);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
          check.require(w.partial(i, j).evaluate({x, y}).is_zero(),
                        "member partial does not vanish at the singular point");
    }
    return true;
  };

  int done = 0;
  while (done < 20) {
    SegreModel model = SegreModel::random(rng);
    std::vector<Rational> h1(4), h2(4);
    for (auto& c : h1) c = Rational(coeff(rng));
    for (auto& c : h2) c = Rational(coeff(rng));
    try {
      if (run_case(model, Hyperplane(h1), Hyperplane(h2), false)) ++done;
    } catch (const Error&) {
      continue;  // degenerate sample (dependent pair, zero covector)
    }
  }

  // planted multiplicity-2 case: h1 tangent at a rational point p, h2 through p
  while (true) {
    SegreModel model = SegreModel::random(rng);
    std::vector<Rational> xy{Rational(1), Rational(1), Rational(1), Rational(1)};
    std::vector<Rational> p = model.s * xy;  // image of ((1:1),(1:1)) lies on Q
    Hyperplane h1 = model.q.polar(p);        // tangent hyperplane at p
    std::vector<Rational> h2(4);
    for (auto& c : h2) c = Rational(coeff(rng));
    // project h2 to pass through p: h2 <- h2 - (h2.p / h1.p) h1
    Rational h1p(0), h2p(0);
    for (std::size_t i = 0; i < 4; ++i) {
      h1p += h1.h()[i] * p[i];
      h2p += h2[i] * p[i];
    }
    if (!is_zero(h1p)) continue;  // tangent hyperplane contains its point of tangency
    bool zero = true;
    for (std::size_t i = 0; i < 4; ++i) {
      h2[i] -= h2p * 0;  // keep h2, then enforce incidence directly below
      zero &= is_zero(h2[i]);
    }
    if (zero) continue;
    // enforce h2 . p = 0 by solving for one coordinate with p_k != 0
    std::size_t k = 0;
    while (is_zero(p[k])) ++k;
    h2p = Rational(0);
    for (std::size_t i = 0; i < 4; ++i) h2p += h2[i] * p[i];
    h2[k] -= h2p / p[k];
    try {
      if (run_case(model, h1, Hyperplane(h2), true)) break;
    } catch (const Error&) {
      continue;
    }
  }
  return outcome;
}

// --------------------------------------------------------------------------
// 5. Chern/chi ledger.

Outcome criterion5() {
  Outcome outcome;
  Check check{outcome};

  // formulas reproduced against independent inline recomputation
  std::mt19937_64 rng(5005);
  std::uniform_int_distribution<int> cls(0, 10);
  std::vector<CurveClass> classes{CurveClass(1, 0), CurveClass(0, 1)};
  for (long long a = 1; a <= 3; ++a)
    for (long long b = 1; b <= 3; ++b) classes.emplace_back(a, b);

  for (int trial = 0; trial < 100; ++trial) {
    std::vector<CurveClass> arr;
    std::uniform_int_distribution<int> len(1, 4);
    int m = len(rng);
    for (int i = 0; i < m; ++i) arr.push_back(classes[cls(rng)]);
    LogChern lc = log_chern(arr);
    long long alpha = 0, beta = 0;
    for (const auto& c : arr) {
      alpha += c.a;
      beta += c.b;
    }
    check.require(lc.c1a == -2 + alpha && lc.c1b == -2 + beta, "c1 formula mismatch");
    long long c2 = 4 - 2 * alpha - 2 * beta;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      c2 += 2 * arr[i].a * arr[i].b;
      for (std::size_t j = i + 1; j < arr.size(); ++j)
        c2 += arr[i].a * arr[j].b + arr[j].a * arr[i].b;
    }
    check.require(lc.c2 == c2, "c2 formula mismatch");
    check.require(euler_char(lc) == (lc.c1a + 1) * (lc.c1b + 1) + lc.rank - lc.c2 - 1,
                  "chi formula mismatch");
  }

  // residue additivity, exhaustive over <= 4 components of bidegree <= (3,3)
  long long cases = 0;
  std::function<void(std::size_t, std::vector<CurveClass>&)> rec = [&](std::size_t from,
                                                                       std::vector<CurveClass>& cur) {
    if (!cur.empty()) {
      ++cases;
      check.require(residue_euler_check(cur).equal, "residue additivity fails");
    }
    if (cur.size() == 4) return;
    for (std::size_t i = from; i < classes.size(); ++i) {
      cur.push_back(classes[i]);
      rec(i, cur);
      cur.pop_back();
    }
  };
  std::vector<CurveClass> cur;
  rec(0, cur);
  check.require(cases >= 400, "exhaustive residue sweep too small");
  return outcome;
}

// --------------------------------------------------------------------------
// 6. Ruling-line splitting and the ACM table.

Outcome criterion6() {
  Outcome outcome;
  Check check{outcome};
  for (long long a = 0; a <= 5; ++a)
    for (long long b = 0; b <= 5; ++b) {
      if (a + b < 1) continue;
      auto [l1, l2] = line_arrangement_splitting(a, b);
      check.require(l1 == std::make_pair(-2 + a, 0LL) && l2 == std::make_pair(0LL, -2 + b),
                    "splitting bidegrees wrong");
      std::vector<CurveClass> lines;
      for (long long i = 0; i < a; ++i) lines.emplace_back(1, 0);
      for (long long i = 0; i < b; ++i) lines.emplace_back(0, 1);
      LogChern direct = log_chern(lines);
      check.require(direct.c1a == l1.first + l2.first && direct.c1b == l1.second + l2.second,
                    "Whitney c1 mismatch");
      check.require(direct.c2 == l1.first * l2.second + l1.second * l2.first, "Whitney c2 mismatch");
      check.require(is_acm_q2(lines) == (a >= 1 && a <= 3 && b >= 1 && b <= 3), "ACM table mismatch");
    }
  // non-line arrangements are never ACM
  check.require(!is_acm_q2({CurveClass(1, 1)}), "conic misclassified as ACM");
  check.require(!is_acm_q2({CurveClass(2, 2)}), "non-line misclassified as ACM");
  return outcome;
}

// --------------------------------------------------------------------------
// 7. Arrangement predicates against the finite-field incidence oracle.

Outcome criterion7() {
  Outcome outcome;
  Check check{outcome};
  std::mt19937_64 rng(7007);
  std::uniform_int_distribution<int> rdist(2, 4), mdist(3, 7), coeff(-4, 4), plant(0, 2);

  auto random_covector = [&](int r) {
    while (true) {
      std::vector<Rational> h(static_cast<std::size_t>(r) + 1);
      bool nz = false;
      for (auto& c : h) {
        c = Rational(coeff(rng));
        nz |= !is_zero(c);
      }
      if (nz) return h;
    }
  };

  const std::vector<std::uint32_t> primes{101, 103};
  int done = 0;
  while (done < 200) {
    int r = rdist(rng);
    std::size_t m = static_cast<std::size_t>(mdist(rng));
    std::vector<Hyperplane> hs;
    try {
      if (plant(rng) == 0 && m >= static_cast<std::size_t>(r) + 1) {
        // plant r+1 hyperplanes through a common point (the last coordinate
        // point), then fill up generically
        for (int i = 0; i <= r; ++i) {
          std::vector<Rational> h(static_cast<std::size_t>(r) + 1);
          for (int j = 0; j < r; ++j) h[static_cast<std::size_t>(j)] = Rational(coeff(rng));
          h[static_cast<std::size_t>(r)] = Rational(0);
          bool nz = false;
          for (const auto& c : h) nz |= !is_zero(c);
          if (!nz) h[0] = Rational(1);
          hs.emplace_back(std::move(h));
        }
        while (hs.size() < m) hs.emplace_back(random_covector(r));
      } else {
        for (std::size_t i = 0; i < m; ++i) hs.emplace_back(random_covector(r));
      }
    } catch (const std::exception&) {
      continue;
    }
    HArrangement arr = [&]() -> HArrangement {
      try {
        return HArrangement(r, hs);
      } catch (const std::exception&) {
        return HArrangement(1, {Hyperplane({Rational(1), Rational(0)})});
      }
    }();
    if (arr.r() != r) continue;  // repeated hyperplane, resample

    // reduce and require good reduction at both primes
    bool usable = true;
    std::vector<std::vector<std::vector<std::uint32_t>>> reductions;
    for (auto p : primes) {
      GFp gf(p);
      std::vector<std::vector<std::uint32_t>> cov;
      for (const auto& h : arr.hyperplanes()) {
        std::vector<std::uint32_t> row;
        for (const auto& c : h.h()) {
          auto v = gf.reduce(c);
          if (!v) {
            usable = false;
            break;
          }
          row.push_back(*v);
        }
        if (!usable) break;
        cov.push_back(std::move(row));
      }
      if (!usable) break;
      for (std::uint64_t mask = 1; mask < (1ULL << arr.size()) && usable; ++mask) {
        std::vector<std::size_t> subset;
        std::vector<std::vector<std::uint32_t>> sub;
        for (std::size_t i = 0; i < arr.size(); ++i)
          if (mask & (1ULL << i)) {
            subset.push_back(i);
            sub.push_back(cov[i]);
          }
        if (rank_mod_p(gf, sub) != rank(arr.covector_matrix(subset))) usable = false;
      }
      reductions.push_back(std::move(cov));
    }
    if (!usable) continue;
    ++done;

    SncReport snc = is_snc(arr);
    std::vector<std::vector<Rational>> sigma;
    bool have_sigma = false;
    if (r >= 3 && nc_outside_finite(arr)) {
      sigma = sigma_points(arr);
      have_sigma = true;
    }

    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
      GFp gf(primes[pi]);
      auto census = incidence_census(gf, reductions[pi], r);
      check.require(census.has_value(), "census failed despite good reduction");
      if (!census) continue;

      // SNC from pure point-incidence counting: subset S of size 2..r+1 is
      // in general position iff the number of points on all of S matches a
      // projective space of dimension r - |S|.  Count via submask sweeps of
      // each point's incidence mask.
      std::vector<long long> n_s(1ULL << arr.size(), 0);
      for (const auto& [pt, pmask] : census->points) {
        for (std::uint64_t sub = pmask; sub; sub = (sub - 1) & pmask)
          if (__builtin_popcountll(sub) >= 2) ++n_s[sub];
      }
      bool oracle_snc = true;
      for (std::uint64_t mask = 1; mask < (1ULL << arr.size()); ++mask) {
        int k = __builtin_popcountll(mask);
        if (k < 2 || k > r + 1) continue;
        if (n_s[mask] != projective_point_count(gf.p(), r - k)) {
          oracle_snc = false;
          break;
        }
      }
      check.require(oracle_snc == snc.snc, "snc disagrees with the incidence oracle");

      if (have_sigma) {
        // points with incidence >= r+1 mod p
        std::vector<std::vector<std::uint32_t>> sigma_p;
        for (const auto& [pt, pmask] : census->points)
          if (__builtin_popcountll(pmask) >= r + 1) sigma_p.push_back(pt);
        check.require(sigma_p.size() == sigma.size(), "sigma count disagrees with the oracle");
        for (const auto& s : sigma) {
          std::vector<std::uint32_t> red;
          bool ok = true;
          for (const auto& c : s) {
            auto v = gf.reduce(c);
            if (!v) {
              ok = false;
              break;
            }
            red.push_back(*v);
          }
          check.require(ok, "sigma point does not reduce");
          if (!ok) continue;
          // canonicalize mod p
          std::size_t lead = 0;
          while (lead < red.size() && red[lead] == 0) ++lead;
          std::uint32_t inv = gf.inv(red[lead]);
          for (auto& c : red) c = gf.mul(c, inv);
          bool found = false;
          for (const auto& sp : sigma_p) found |= (sp == red);
          check.require(found, "sigma point missing from the mod-p census");
        }
      }
    }
  }
  return outcome;
}

// --------------------------------------------------------------------------
// 8. Vanishing table.

Outcome criterion8() {
  Outcome outcome;
  Check check{outcome};

  auto sweep = [&](const std::vector<int>& dims) {
    Shape shape(dims);
    std::vector<int> a(dims.size(), 0);
    while (true) {
      bool all3 = true, all2 = true, deg3 = true;
      for (std::size_t i = 0; i < dims.size(); ++i) {
        all3 &= dims[i] >= 3;
        all2 &= dims[i] >= 2;
        deg3 &= a[i] >= 3;
      }
      auto rep = bott_kunneth_h1_tangent(shape, MultiDegree(a));
      if (all3) check.require(rep.vanishes, "vanishing fails with all n_i >= 3");
      if (all2 && deg3) {
        // single carved-out point: s = 1, n = 2, a = 3, where TX(-a) is the
        // cotangent bundle of the plane and h^1 = 1 (see decisions ledger)
        if (dims.size() == 1 && dims[0] == 2 && a[0] == 3)
          check.require(rep.h1 == 1, "expected h1 = 1 for the plane cotangent bundle");
        else
          check.require(rep.vanishes, "vanishing fails with n_i >= 2, a_i >= 3");
      }
      std::size_t i = dims.size();
      bool done = true;
      while (i-- > 0) {
        if (++a[i] <= 5) {
          done = false;
          break;
        }
        a[i] = 0;
      }
      if (done) break;
    }
  };

  for (int n1 = 1; n1 <= 4; ++n1) {
    sweep({n1});
    for (int n2 = 1; n2 <= 4; ++n2) {
      sweep({n1, n2});
      for (int n3 = 1; n3 <= 4; ++n3) sweep({n1, n2, n3});
    }
  }

  auto v22 = bott_kunneth_h1_tangent(Shape({1, 1}), MultiDegree({2, 2}));
  check.require(v22.h1 == 2, "h1 at shape (1,1), degree (2,2) must be 2");
  auto v33 = bott_kunneth_h1_tangent(Shape({1, 1}), MultiDegree({3, 3}));
  check.require(v33.vanishes, "h1 at shape (1,1), degree (3,3) must vanish");
  return outcome;
}

// --------------------------------------------------------------------------
// 9. Threshold calculator.

Outcome criterion9() {
  Outcome outcome;
  Check check{outcome};
  auto binom = [](long long n, long long k) {
    if (k < 0 || k > n) return 0LL;
    long long acc = 1;
    for (long long i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
    return acc;
  };
  for (int n = 1; n <= 6; ++n) {
    check.require(torelli_threshold({ThresholdQuery::Variety::Pn, n, 1}) == n + 3,
                  "hyperplane threshold mismatch");
    check.require(torelli_threshold({ThresholdQuery::Variety::Qn, n, 1}) == n + 4,
                  "quadric hyperplane-section threshold mismatch");
    for (int d = 1; d <= 4; ++d) {
      long long expect = binom(n + 1 + d, n + 1) - binom(n - 1 + d, n + 1) + 2;
      check.require(torelli_threshold({ThresholdQuery::Variety::Qn, n, d}) == expect,
                    "degree-d threshold mismatch");
    }
  }
  return outcome;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* label;
    Outcome (*fn)();
  };
  const Entry entries[] = {
      {1, "split-type pairs are Jacobian-indistinguishable (50 random pairs)", criterion1},
      {2, "split normal-form recovery round trip (25 scrambled pairs)", criterion2},
      {3, "generic (3,3) pairs distinguished, split orbits never", criterion3},
      {4, "conic-pencil tangency cross-validation (20 quadrics + double root)", criterion4},
      {5, "Chern/chi ledger and residue additivity (exhaustive)", criterion5},
      {6, "ruling-line splitting and ACM table (exhaustive to 5)", criterion6},
      {7, "arrangement predicates vs finite-field incidence oracle (200 cases)", criterion7},
      {8, "tangent-bundle h1 vanishing table (grid sweep)", criterion8},
      {9, "generic-injectivity thresholds", criterion9},
  };

  int failures = 0;
  for (const auto& e : entries) {
    auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = e.fn();
    } catch (const std::exception& ex) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + ex.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                    start)
                  .count();
    std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << e.id << ": " << e.label
              << " (" << ms << " ms)";
    if (!outcome.pass) std::cout << " -- " << outcome.detail;
    std::cout << "\n";
    failures += outcome.pass ? 0 : 1;
  }
  if (failures) std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
