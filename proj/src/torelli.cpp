#include "logtor/torelli.hpp"

#include <algorithm>
#include <random>

#include "logtor/gf.hpp"
#include "logtor/invariants.hpp"
#include "logtor/quadric.hpp"

namespace logtor {

// ---------------------------------------------------------------------------
// Spans.

template <class K>
SpanT<K> jacobian_space(const MPolyT<K>& f, std::size_t factor) {
  if (factor >= f.shape().factors()) throw std::out_of_range("jacobian_space: factor out of range");
  if (f.degree()[factor] < 1)
    throw DegreeUnderflowError("jacobian_space needs degree >= 1 in the chosen factor");
  const MultiDegree target = f.degree().minus_unit(factor);
  const std::size_t cols = monomial_count(f.shape(), target);
  const std::size_t nv = f.shape().vars(factor);
  MatrixT<K> rows(nv, cols);
  for (std::size_t j = 0; j < nv; ++j) {
    auto vec = f.partial(factor, j).coefficient_vector();
    for (std::size_t c = 0; c < cols; ++c) rows(j, c) = vec[c];
  }
  RrefResult<K> r = rref(std::move(rows));
  MatrixT<K> basis(r.rank, cols);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t c = 0; c < cols; ++c) basis(i, c) = r.matrix(i, c);
  return SpanT<K>{f.shape(), target, std::move(basis)};
}

template <class K>
bool span_equal(const SpanT<K>& s1, const SpanT<K>& s2) {
  if (s1.shape != s2.shape || s1.degree != s2.degree)
    throw ShapeMismatchError("spans live in different coefficient spaces");
  return s1.basis == s2.basis;
}

template <class K>
SpanT<K> span_apply_change(const SpanT<K>& s, const FactorChangeT<K>& change) {
  auto basis = monomial_basis(s.shape, s.degree);
  MatrixT<K> rows(s.basis.rows(), s.basis.cols());
  for (std::size_t i = 0; i < s.basis.rows(); ++i) {
    MPolyT<K> p(s.shape, s.degree);
    for (std::size_t c = 0; c < basis.size(); ++c) p.add_term(basis[c], s.basis(i, c));
    auto vec = p.apply_change(change).coefficient_vector();
    for (std::size_t c = 0; c < vec.size(); ++c) rows(i, c) = vec[c];
  }
  RrefResult<K> r = rref(std::move(rows));
  MatrixT<K> nb(r.rank, s.basis.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t c = 0; c < nb.cols(); ++c) nb(i, c) = r.matrix(i, c);
  return SpanT<K>{s.shape, s.degree, std::move(nb)};
}

template SpanT<Rational> jacobian_space(const MPolyT<Rational>&, std::size_t);
template SpanT<QuadExt> jacobian_space(const MPolyT<QuadExt>&, std::size_t);
template bool span_equal(const SpanT<Rational>&, const SpanT<Rational>&);
template bool span_equal(const SpanT<QuadExt>&, const SpanT<QuadExt>&);
template SpanT<Rational> span_apply_change(const SpanT<Rational>&, const FactorChangeT<Rational>&);
template SpanT<QuadExt> span_apply_change(const SpanT<QuadExt>&, const FactorChangeT<QuadExt>&);

// ---------------------------------------------------------------------------
// Distinguisher.

DistinguishReport distinguish(const MPoly& f, const MPoly& g) {
  if (f.shape() != g.shape() || f.degree() != g.degree())
    throw ShapeMismatchError("distinguish requires equal shape and degree");
  if (f.is_zero() || g.is_zero()) throw HypothesisError("zero polynomial does not define a divisor");
  const MultiDegree& a = f.degree();
  std::vector<int> ones(a.size(), 1);
  if (!a.all_at_least(1) || !a.strictly_dominates(MultiDegree(ones)))
    throw HypothesisError("distinguish requires all a_i >= 1 with some a_i >= 2");

  DistinguishReport report;
  auto gate = bott_kunneth_h1_tangent(f.shape(), a);
  report.hypothesis_verified = gate.vanishes;
  report.h1 = gate.h1;
  for (std::size_t i = 0; i < f.shape().factors(); ++i) {
    if (!span_equal(jacobian_space(f, i), jacobian_space(g, i))) {
      report.verdict = DistinguishReport::Verdict::DistinctBundles;
      report.witness_factor = i;
      return report;
    }
  }
  report.verdict = DistinguishReport::Verdict::JacobianIndistinguishable;
  return report;
}

// ---------------------------------------------------------------------------
// Split support.

std::optional<SplitForm> is_split_type_in_coords(const MPoly& f) {
  if (f.shape() != Shape({1, 1})) throw ShapeMismatchError("split type is defined on P^1 x P^1");
  const int a = f.degree()[0], b = f.degree()[1];
  if (a < 1 || b < 1) return std::nullopt;
  std::vector<int> mx{a, 0, b, 0}, my{0, a, 0, b};
  Rational u = f.coeff(mx), v = f.coeff(my);
  if (is_zero(u) || is_zero(v) || f.term_count() != 2) return std::nullopt;
  SplitForm form;
  form.change = {FactorChange{0, Matrix::identity(2)}, FactorChange{1, Matrix::identity(2)}};
  form.u = u;
  form.v = v;
  form.a = a;
  form.b = b;
  return form;
}

// ---------------------------------------------------------------------------
// Chart engine: affine common zeros of (F, F_u, F_v) in one chart.

namespace {

template <class K>
Bi<K> inner_derivative(const Bi<K>& f) {
  std::vector<UniPolyT<K>> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(c.derivative());
  return Bi<K>(std::move(out));
}

template <class K>
bool bi_nonconstant(const Bi<K>& g) {
  if (g.is_zero()) return false;
  return g.degree() >= 1 || g.coeffs()[0].degree() >= 1;
}

// Chart of a (1,1)-shape polynomial: x_{cx} = 1, y_{cy} = 1; outer variable
// v = y_{1-cy}, inner u = x_{1-cx}.
template <class K>
Bi<K> chart(const MPolyT<K>& f, int cx, int cy) {
  const int b = f.degree()[1];
  std::vector<UniPolyT<K>> vc(static_cast<std::size_t>(b) + 1);
  for (const auto& [e, c] : f.terms()) {
    int uexp = cx == 0 ? e[1] : e[0];
    int vexp = cy == 0 ? e[3] : e[2];
    UniPolyT<K>& slot = vc[static_cast<std::size_t>(vexp)];
    slot.set_coeff(static_cast<std::size_t>(uexp), slot.coeff(static_cast<std::size_t>(uexp)) + c);
  }
  return Bi<K>(std::move(vc));
}

struct FieldRoots {
  std::vector<std::pair<QuadExt, int>> roots;
  bool complete = true;
  UniPoly leftover;  // rational-coefficient leftover for reporting (monic)
};

FieldRoots field_roots(const UniPoly& p) {
  FieldRoots out;
  if (p.degree() <= 0) {
    out.leftover = UniPoly(1);
    return out;
  }
  AlgebraicRoots ar = roots_up_to_quadratic(p);
  for (auto& [r, m] : ar.roots) out.roots.emplace_back(r, m);
  out.leftover = ar.unresolved;
  out.complete = ar.unresolved.degree() <= 0;
  return out;
}

Integer poly_field_tag(const UniPolyT<QuadExt>& p) {
  for (const auto& c : p.coeffs())
    if (c.d() != 0) return c.d();
  return 0;
}

// Roots of p that live in Q or in Q(sqrt(ambient_d)).  Conjugate-product
// trick: the norm of p has rational coefficients and contains every such
// root among its roots of degree <= 2 over Q.
FieldRoots field_roots(const UniPolyT<QuadExt>& p, const Integer& ambient_d) {
  FieldRoots out;
  if (p.degree() <= 0) {
    out.leftover = UniPoly(1);
    return out;
  }
  Integer d = poly_field_tag(p);
  if (d == 0) {
    std::vector<Rational> rc;
    rc.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) rc.push_back(c.a());
    FieldRoots base = field_roots(UniPoly(std::move(rc)));
    // keep only roots living in the ambient field
    for (auto& [r, m] : base.roots) {
      if (r.d() == 0 || r.d() == ambient_d || ambient_d == 0)
        out.roots.emplace_back(r, m);
      else
        base.complete = false;
    }
    out.complete = base.complete;
    out.leftover = base.leftover;
    return out;
  }
  std::vector<QuadExt> conj;
  conj.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) conj.push_back(c.conj());
  UniPolyT<QuadExt> norm = p * UniPolyT<QuadExt>(std::vector<QuadExt>(conj));
  std::vector<Rational> nc;
  nc.reserve(norm.coeffs().size());
  for (const auto& c : norm.coeffs()) {
    if (!c.is_rational()) throw std::logic_error("norm polynomial must be rational");
    nc.push_back(c.a());
  }
  FieldRoots cand = field_roots(UniPoly(std::move(nc)));
  out.complete = cand.complete;
  out.leftover = cand.leftover;
  UniPolyT<QuadExt> work = p;
  for (auto& [r, m] : cand.roots) {
    if (r.d() != 0 && r.d() != d) continue;  // lives outside the working field
    int mult = 0;
    UniPolyT<QuadExt> lin(std::vector<QuadExt>{-r, QuadExt(1)});
    while (!work.is_zero() && work.degree() >= 1) {
      auto [q, rem] = divmod(work, lin);
      if (!rem.is_zero()) break;
      work = std::move(q);
      ++mult;
    }
    if (mult > 0) out.roots.emplace_back(r, mult);
  }
  if (work.degree() > 0) out.complete = false;
  return out;
}

enum class Tri { Found, Refuted, Unresolved };

struct ChartOutcome {
  Tri status = Tri::Refuted;
  std::optional<QuadExt> u0, v0;
  std::vector<UniPoly> unresolved;
};

UniPolyT<QuadExt> lift_or_self(const UniPoly& p) {
  std::vector<QuadExt> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return UniPolyT<QuadExt>(std::move(c));
}

UniPolyT<QuadExt> lift_or_self(const UniPolyT<QuadExt>& p) { return p; }

inline Integer ambient_tag(const Bi<Rational>&) { return Integer(0); }
Integer ambient_tag(const Bi<QuadExt>& f) {
  for (const auto& c : f.coeffs())
    for (const auto& v : c.coeffs())
      if (v.d() != 0) return v.d();
  return Integer(0);
}

// Witness search on a curve G that consists of common zeros: scan small u.
template <class K>
std::pair<std::optional<QuadExt>, std::optional<QuadExt>> hunt_zero(const Bi<K>& G) {
  std::optional<QuadExt> fallback_u;
  for (int trial = 0; trial <= 12; ++trial) {
    int val = (trial + 1) / 2 * (trial % 2 ? 1 : -1);  // 0, 1, -1, 2, -2, ...
    QuadExt u0{Rational(val)};
    UniPolyT<QuadExt> at = eval_inner(G, u0);
    if (at.is_zero()) return {u0, QuadExt(0)};
    if (at.degree() >= 1) {
      FieldRoots fr = field_roots(at, ambient_tag(G));
      if (!fr.roots.empty()) return {u0, fr.roots.front().first};
      if (!fallback_u) fallback_u = u0;
    }
  }
  if (G.degree() == 0) {
    // zero locus is a union of vertical lines u = root
    FieldRoots fr = field_roots(lift_or_self(G.coeffs()[0]), ambient_tag(G));
    if (!fr.roots.empty()) return {fr.roots.front().first, QuadExt(0)};
  }
  return {fallback_u, std::nullopt};
}

// Shared elimination skeleton for the affine system (F, F_u, F_v): the
// common-curve gcd and the candidate u-polynomials, valid over any exact
// field (used over Q, quadratic extensions, and prime fields).
template <class K>
struct TripleSystem {
  bool curve_found = false;       // gcd(F, gcd(Fu, Fv)) is nonconstant
  bool trivially_refuted = false; // constant F, or a one-variable system with trivial gcd
  Bi<K> G, Fu, Fv;
  std::vector<UniPolyT<K>> cand_polys;
};

template <class K>
TripleSystem<K> build_triple_system(const Bi<K>& F) {
  TripleSystem<K> sys;
  sys.Fv = F.derivative();
  sys.Fu = inner_derivative(F);
  const bool fu0 = sys.Fu.is_zero(), fv0 = sys.Fv.is_zero();
  if (fu0 && fv0) {
    sys.trivially_refuted = true;  // F is a nonzero constant
    return sys;
  }
  Bi<K> g2 = fu0 ? sys.Fv : (fv0 ? sys.Fu : gcd_bivariate(sys.Fu, sys.Fv));
  sys.G = gcd_bivariate(F, g2);
  if (bi_nonconstant(sys.G)) {
    sys.curve_found = true;
    return sys;
  }
  if (fu0 || fv0) {
    sys.trivially_refuted = true;  // single-variable system with trivial gcd
    return sys;
  }

  const bool g2_const = !bi_nonconstant(g2);
  Bi<K> A = sys.Fu, B = sys.Fv;
  if (!g2_const) {
    A = exact_div(sys.Fu, g2);
    B = exact_div(sys.Fv, g2);
    if (g2.degree() == 0) {
      sys.cand_polys.push_back(g2.coeffs()[0]);
    } else {
      sys.cand_polys.push_back(resultant_formal(F, g2, static_cast<std::size_t>(F.degree()),
                                                static_cast<std::size_t>(g2.degree())));
    }
  }
  const long long dA = A.degree(), dB = B.degree();
  if (dA == 0 && dB == 0) {
    sys.cand_polys.push_back(gcd(A.coeffs()[0], B.coeffs()[0]));
  } else if (dA == 0) {
    sys.cand_polys.push_back(A.coeffs()[0]);
  } else if (dB == 0) {
    sys.cand_polys.push_back(B.coeffs()[0]);
  } else {
    sys.cand_polys.push_back(
        resultant_formal(A, B, static_cast<std::size_t>(dA), static_cast<std::size_t>(dB)));
  }

  // A common zero also annihilates the pairs (F, Fu) and (F, Fv), so its
  // u-coordinate is a root of their v-resultants; intersecting the candidate
  // polynomials with those stays inside the base field and usually collapses
  // irreducible high-degree factors.
  auto pair_filter = [&](const Bi<K>& P) -> UniPolyT<K> {
    if (P.is_zero()) return UniPolyT<K>();
    if (P.degree() == 0) return P.coeffs()[0];
    return resultant_formal(F, P, static_cast<std::size_t>(F.degree()),
                            static_cast<std::size_t>(P.degree()));
  };
  const UniPolyT<K> rf = pair_filter(sys.Fu), rg = pair_filter(sys.Fv);
  for (auto& cp : sys.cand_polys) {
    if (cp.is_zero()) continue;
    if (!rf.is_zero()) cp = gcd(cp, rf);
    if (!rg.is_zero()) cp = gcd(cp, rg);
  }
  return sys;
}

template <class K>
ChartOutcome decide_affine_triple(const Bi<K>& F) {
  ChartOutcome out;
  if (F.is_zero()) {  // cannot happen for a nonzero bihomogeneous input
    out.status = Tri::Found;
    out.u0 = QuadExt(0);
    out.v0 = QuadExt(0);
    return out;
  }
  TripleSystem<K> sys = build_triple_system(F);
  if (sys.curve_found) {
    out.status = Tri::Found;
    auto [u0, v0] = hunt_zero(sys.G);
    out.u0 = u0;
    out.v0 = v0;
    return out;
  }
  if (sys.trivially_refuted) return out;
  const Bi<K>& Fu = sys.Fu;
  const Bi<K>& Fv = sys.Fv;
  const std::vector<UniPolyT<K>>& cand_polys = sys.cand_polys;

  const Integer ambient = ambient_tag(F);
  bool complete = true;
  std::vector<QuadExt> candidates;
  for (const auto& cp : cand_polys) {
    if (cp.is_zero()) continue;  // coprimality rules this out; stay safe
    FieldRoots fr = field_roots(lift_or_self(cp), ambient);
    if (!fr.complete) {
      complete = false;
      if (fr.leftover.degree() > 0) out.unresolved.push_back(fr.leftover);
    }
    for (auto& [r, m] : fr.roots)
      if (std::find(candidates.begin(), candidates.end(), r) == candidates.end())
        candidates.push_back(r);
  }

  for (const auto& u0 : candidates) {
    UniPolyT<QuadExt> F0 = eval_inner(F, u0);
    UniPolyT<QuadExt> Fu0 = eval_inner(Fu, u0);
    UniPolyT<QuadExt> Fv0 = eval_inner(Fv, u0);
    UniPolyT<QuadExt> h = gcd(gcd(F0, Fu0), Fv0);
    if (h.is_zero()) {  // entire vertical line of common zeros
      out.status = Tri::Found;
      out.u0 = u0;
      out.v0 = QuadExt(0);
      return out;
    }
    if (h.degree() >= 1) {
      out.status = Tri::Found;
      out.u0 = u0;
      FieldRoots vr = field_roots(h, u0.d());
      if (!vr.roots.empty()) out.v0 = vr.roots.front().first;
      return out;
    }
  }
  out.status = complete ? Tri::Refuted : Tri::Unresolved;
  return out;
}

// Exact tri-state singularity decision over the coefficient field.
template <class K>
std::pair<Tri, ChartOutcome> singular_exact(const MPolyT<K>& f, int* chart_x = nullptr,
                                            int* chart_y = nullptr) {
  bool unresolved = false;
  ChartOutcome pending;
  for (int cx = 0; cx < 2; ++cx)
    for (int cy = 0; cy < 2; ++cy) {
      ChartOutcome o = decide_affine_triple(chart(f, cx, cy));
      if (o.status == Tri::Found) {
        if (chart_x) *chart_x = cx;
        if (chart_y) *chart_y = cy;
        return {Tri::Found, std::move(o)};
      }
      if (o.status == Tri::Unresolved) {
        unresolved = true;
        for (auto& p : o.unresolved) pending.unresolved.push_back(p);
      }
    }
  if (unresolved) {
    pending.status = Tri::Unresolved;
    return {Tri::Unresolved, std::move(pending)};
  }
  return {Tri::Refuted, {}};
}

// ---------------------------------------------------------------------------
// Geometric singularity over the algebraic closure of F_p.  The candidate
// u-polynomials are handled by dynamic evaluation in F_p[u]/(q): whenever a
// leading coefficient fails to be invertible its gcd with q splits the
// modulus and both branches are tried, so no explicit field extensions are
// ever constructed.

using FpU = UniPolyT<FpScalar>;
using FpBi = Bi<FpScalar>;

struct FpSplit {
  FpU factor;
};

FpBi reduce_coeffs(const FpBi& f, const FpU& q) {
  std::vector<FpU> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(divmod(c, q).second);
  return FpBi(std::move(out));
}

// Extended-Euclid inverse of a modulo q; the caller guarantees gcd(a, q) = 1.
FpU fpu_inverse(const FpU& a, const FpU& q) {
  FpU r0 = q, r1 = divmod(a, q).second, s0, s1(1);
  while (!r1.is_zero()) {
    auto [quot, rem] = divmod(r0, r1);
    FpU s2 = s0 - quot * s1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw std::logic_error("fpu_inverse: operand is a zero divisor");
  return divmod(s0 * FpU(std::vector<FpScalar>{FpScalar(1) / r0.coeff(0)}), q).second;
}

// Drop leading v-coefficients that vanish modulo q; raise FpSplit on a
// proper zero divisor.
void fp_trim(FpBi& b, const FpU& q) {
  while (!b.is_zero()) {
    FpU g = gcd(b.leading(), q);
    if (g.degree() == 0) return;
    if (g.degree() == q.degree()) {
      b.set_coeff(static_cast<std::size_t>(b.degree()), FpU());
      continue;
    }
    throw FpSplit{g};
  }
}

// True when some irreducible factor q' | q admits a common v-root of the
// polynomials over the field F_p[u]/(q').
bool d5_common_root(FpU q, const std::vector<FpBi>& polys_in) {
  q = monic(q);
  if (q.degree() < 1) return false;
  std::vector<FpBi> polys;
  for (const auto& p : polys_in) {
    FpBi r = reduce_coeffs(p, q);
    if (!r.is_zero()) polys.push_back(std::move(r));
  }
  if (polys.empty()) return true;  // whole vertical lines of common zeros
  try {
    FpBi h = polys[0];
    fp_trim(h, q);
    for (std::size_t i = 1; i < polys.size(); ++i) {
      FpBi b = polys[i];
      fp_trim(b, q);
      while (!b.is_zero()) {
        FpU inv = fpu_inverse(b.leading(), q);
        FpBi r = h;
        while (!r.is_zero() && r.degree() >= b.degree()) {
          FpU c = divmod(r.leading() * inv, q).second;
          FpBi term(std::vector<FpU>{c});
          r -= (term.shifted(static_cast<std::size_t>(r.degree() - b.degree()))) * b;
          r = reduce_coeffs(r, q);
        }
        h = std::move(b);
        b = std::move(r);
        fp_trim(b, q);
      }
      fp_trim(h, q);
      if (h.is_zero()) return true;  // all polynomials vanish modulo q
    }
    if (h.is_zero()) return true;
    return h.degree() >= 1;
  } catch (const FpSplit& s) {
    FpU other = divmod(q, s.factor).first;
    return d5_common_root(s.factor, polys_in) || d5_common_root(other, polys_in);
  }
}

std::optional<MPolyT<FpScalar>> reduce_to_fp(const MPoly& f, std::uint32_t p) {
  GFp gf(p);
  MPolyT<FpScalar> out(f.shape(), f.degree());
  for (const auto& [e, c] : f.terms()) {
    auto r = gf.reduce(c);
    if (!r) return std::nullopt;
    out.add_term(e, FpScalar::from_raw(*r));
  }
  return out;
}

}  // namespace

std::optional<bool> singular_closure_modp(const MPoly& f, std::uint32_t p) {
  if (f.shape() != Shape({1, 1})) throw ShapeMismatchError("closure test is defined on P^1 x P^1");
  FpModulusGuard guard(p);
  auto fp = reduce_to_fp(f, p);
  if (!fp || fp->is_zero()) return std::nullopt;  // bad prime for these coefficients
  for (int cx = 0; cx < 2; ++cx)
    for (int cy = 0; cy < 2; ++cy) {
      FpBi F = chart(*fp, cx, cy);
      if (F.is_zero()) continue;
      TripleSystem<FpScalar> sys = build_triple_system(F);
      if (sys.curve_found) return true;
      if (sys.trivially_refuted) continue;
      for (const auto& cp : sys.cand_polys) {
        if (cp.is_zero() || cp.degree() < 1) continue;
        if (d5_common_root(cp, {F, sys.Fu, sys.Fv})) return true;
      }
    }
  return false;
}

namespace {

// A nontrivial content in one factor's variables is a union of ruling lines
// inside the divisor: with both degrees positive it always crosses the rest
// of the divisor (or doubles a line), so the divisor is singular.  The gcd
// runs over Q, making these verdicts exact even when the crossing
// coordinates live in high-degree extensions.
struct FactorContent {
  UniPoly gcd_dehom;  // gcd of the dehomogenized factor forms (variable index 1)
  int defect = 0;     // common power of the index-0 variable
  bool nontrivial() const { return gcd_dehom.degree() >= 1 || defect >= 1; }
};

FactorContent factor_content(const MPoly& f, std::size_t factor) {
  std::map<std::pair<int, int>, UniPoly> groups;
  const std::size_t off = factor == 0 ? 2 : 0;
  const std::size_t pos = factor == 0 ? 0 : 2;
  for (const auto& [e, c] : f.terms()) {
    auto& slot = groups[{e[off], e[off + 1]}];
    slot.set_coeff(static_cast<std::size_t>(e[pos + 1]),
                   slot.coeff(static_cast<std::size_t>(e[pos + 1])) + c);
  }
  FactorContent out;
  const int full = f.degree()[factor];
  out.defect = full;
  for (auto& [key, poly] : groups) {
    out.gcd_dehom = gcd(out.gcd_dehom, poly);
    out.defect = std::min(out.defect, full - static_cast<int>(poly.degree()));
  }
  return out;
}

}  // namespace

SmoothnessReport smooth_on_p1xp1(const MPoly& f, const std::vector<std::uint32_t>& fallback_primes) {
  if (f.shape() != Shape({1, 1})) throw ShapeMismatchError("smoothness test is defined on P^1 x P^1");
  if (f.is_zero()) throw HypothesisError("zero polynomial does not define a divisor");
  if (f.degree()[0] < 1 || f.degree()[1] < 1)
    throw HypothesisError("smoothness test requires bidegree at least (1,1)");

  int cx = 0, cy = 0;
  auto [status, outcome] = singular_exact(f, &cx, &cy);
  SmoothnessReport report;
  if (status == Tri::Found) {
    report.status = SmoothnessReport::Status::Singular;
    report.exact = true;
    if (outcome.u0) {
      std::vector<QuadExt> x(2);
      x[static_cast<std::size_t>(cx)] = QuadExt(1);
      x[static_cast<std::size_t>(1 - cx)] = *outcome.u0;
      report.witness_x = std::move(x);
    }
    if (outcome.v0 && outcome.u0) {
      std::vector<QuadExt> y(2);
      y[static_cast<std::size_t>(cy)] = QuadExt(1);
      y[static_cast<std::size_t>(1 - cy)] = *outcome.v0;
      report.witness_y = std::move(y);
    } else {
      report.note = "witness coordinate not representable over a single quadratic extension";
    }
    return report;
  }
  if (status == Tri::Refuted) {
    report.status = SmoothnessReport::Status::Smooth;
    report.exact = true;
    return report;
  }

  // A ruling-line component makes the divisor singular regardless of where
  // the crossings live; this decides some charts the elimination left open.
  for (std::size_t factor = 0; factor < 2; ++factor) {
    FactorContent content = factor_content(f, factor);
    if (!content.nontrivial()) continue;
    report.status = SmoothnessReport::Status::Singular;
    report.exact = true;
    std::vector<QuadExt> line(2);
    if (content.defect >= 1) {
      line[0] = QuadExt(0);
      line[1] = QuadExt(1);
    } else {
      AlgebraicRoots roots = roots_up_to_quadratic(content.gcd_dehom);
      if (roots.roots.empty()) {
        report.note = "singular along a ruling-line component with unrepresentable coordinate";
        return report;
      }
      line[0] = QuadExt(1);
      line[1] = roots.roots.front().first;
    }
    if (factor == 0)
      report.witness_x = std::move(line);
    else
      report.witness_y = std::move(line);
    report.note = "ruling-line component; crossing coordinate in the other factor not computed";
    return report;
  }

  // geometric fallback: decide singularity over the algebraic closure of
  // several prime fields
  std::vector<std::uint32_t> smooth_primes, singular_primes;
  for (auto p : fallback_primes) {
    auto verdict = singular_closure_modp(f, p);
    if (!verdict) continue;  // bad prime for these coefficients
    report.primes_used.push_back(p);
    (*verdict ? singular_primes : smooth_primes).push_back(p);
  }
  report.exact = false;
  if (report.primes_used.empty()) {
    report.status = SmoothnessReport::Status::ProbabilisticSmooth;
    report.note = "no usable primes for the fallback";
    return report;
  }
  if (singular_primes.empty()) {
    report.status = SmoothnessReport::Status::ProbabilisticSmooth;
    report.note = "smooth over the closure of every tested prime field";
  } else if (smooth_primes.empty()) {
    report.status = SmoothnessReport::Status::Singular;
    report.note = "singular over the closure of every tested prime field (verdict not exact)";
  } else {
    report.status = SmoothnessReport::Status::ProbabilisticSmooth;
    report.primes_used = smooth_primes;
    report.note = "mixed reductions; smooth over the closure of the listed primes";
  }
  return report;
}

// ---------------------------------------------------------------------------
// Pencil of divisors.

template <class K>
MPolyT<K> transpose_factors(const MPolyT<K>& f) {
  Shape shape({f.shape().dim(1), f.shape().dim(0)});
  MultiDegree deg({f.degree()[1], f.degree()[0]});
  MPolyT<K> out(shape, deg);
  for (const auto& [e, c] : f.terms()) out.add_term({e[2], e[3], e[0], e[1]}, c);
  return out;
}

template MPolyT<Rational> transpose_factors(const MPolyT<Rational>&);
template MPolyT<QuadExt> transpose_factors(const MPolyT<QuadExt>&);

namespace {

Rational det2(const Matrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

Matrix bilinear_matrix(const MPoly& f) {
  Matrix m(2, 2);
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) m(j, k) = f.coeff({1 - j, j, 1 - k, k});
  return m;
}

struct RankDropParams {
  std::vector<std::pair<QuadExt, int>> roots;  // parameter t of f + t g, with factor index
  bool all_t = false;
  UniPoly leftover;
};

// Parameters t where some factor-i Jacobian span of f + t g has rank <= 1:
// common roots of the 2x2 minors of the partials' coefficient matrix, which
// are quadratics in t, so the gcd is exactly solvable.
RankDropParams rank_drop_params(const MPoly& f, const MPoly& g) {
  RankDropParams out;
  for (std::size_t factor = 0; factor < 2; ++factor) {
    std::vector<Rational> f0 = f.partial(factor, 0).coefficient_vector();
    std::vector<Rational> f1 = f.partial(factor, 1).coefficient_vector();
    std::vector<Rational> g0 = g.partial(factor, 0).coefficient_vector();
    std::vector<Rational> g1 = g.partial(factor, 1).coefficient_vector();
    UniPoly minor_gcd;
    const std::size_t n = f0.size();
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        UniPoly rj0(std::vector<Rational>{f0[j], g0[j]});
        UniPoly rk0(std::vector<Rational>{f0[k], g0[k]});
        UniPoly rj1(std::vector<Rational>{f1[j], g1[j]});
        UniPoly rk1(std::vector<Rational>{f1[k], g1[k]});
        minor_gcd = gcd(minor_gcd, rj0 * rk1 - rk0 * rj1);
        if (minor_gcd.degree() == 0) break;
      }
    if (minor_gcd.is_zero()) {
      out.all_t = true;
      continue;
    }
    if (minor_gcd.degree() == 0) continue;
    FieldRoots fr = field_roots(minor_gcd);
    for (auto& [r, m] : fr.roots) {
      bool dup = false;
      for (auto& [seen, fi] : out.roots) dup |= (seen == r);
      if (!dup) out.roots.emplace_back(r, static_cast<int>(factor));
    }
    if (!fr.complete) out.leftover = fr.leftover;
  }
  return out;
}

using YForm = UniPolyT<UniPoly>;       // y-form: index = exponent of y1, coefficients in Q[t]
using XForm = UniPolyT<YForm>;         // x-form: index = exponent of x1

// Partial derivative of u f + v g at (u,v) = (1,t), as an x-form of binary
// y-form coefficients over Q[t].
XForm pencil_partial(const MPoly& f, const MPoly& g, std::size_t factor, std::size_t var) {
  MPoly pf = f.partial(factor, var);
  MPoly pg = g.partial(factor, var);
  std::vector<YForm> xs;
  auto place = [&](const MPoly& p, int tdeg) {
    for (const auto& [e, c] : p.terms()) {
      std::size_t xi = static_cast<std::size_t>(e[1]);
      std::size_t yi = static_cast<std::size_t>(e[3]);
      if (xs.size() <= xi) xs.resize(xi + 1);
      YForm& yf = xs[xi];
      UniPoly cur = yf.coeff(yi);
      UniPoly add(std::vector<Rational>(static_cast<std::size_t>(tdeg) + 1, Rational(0)));
      add.set_coeff(static_cast<std::size_t>(tdeg), c);
      yf.set_coeff(yi, cur + add);
    }
  };
  place(pf, 0);
  place(pg, 1);
  return XForm(std::move(xs));
}

UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& pts) {
  // Newton divided differences
  const std::size_t n = pts.size();
  std::vector<Rational> coef(n);
  std::vector<Rational> table(n);
  for (std::size_t i = 0; i < n; ++i) table[i] = pts[i].second;
  coef[0] = table[0];
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i)
      table[i] = (table[i + 1] - table[i]) / (pts[i + level].first - pts[i].first);
    coef[level] = table[0];
  }
  UniPoly acc;
  for (std::size_t level = n; level-- > 0;) {
    UniPoly shift(std::vector<Rational>{-pts[level].first, Rational(1)});
    acc = (level + 1 < n) ? acc * shift : UniPoly();
    acc += UniPoly(std::vector<Rational>{coef[level]});
  }
  return acc;
}

long long tdeg(const YForm& s) {
  long long d = 0;
  for (const auto& c : s.coeffs()) d = std::max(d, c.degree());
  return d;
}

// Resultant in y of two binary y-forms with Q[t] coefficients, by evaluation
// at rational t-points and interpolation; formal degrees are the homogeneous
// degrees, so vanishing at t0 means the specialized forms share a projective
// root (or one vanishes identically).
UniPoly resultant_y_interpolated(const YForm& s1, std::size_t d1, const YForm& s2, std::size_t d2) {
  const long long bound = static_cast<long long>(d1) * tdeg(s2) + static_cast<long long>(d2) * tdeg(s1);
  std::vector<std::pair<Rational, Rational>> pts;
  for (long long k = 0; k <= bound; ++k) {
    long long t = (k + 1) / 2 * (k % 2 ? 1 : -1);
    Rational tval(t);
    std::vector<Rational> c1(d1 + 1, Rational(0)), c2(d2 + 1, Rational(0));
    for (std::size_t i = 0; i < s1.coeffs().size(); ++i) c1[i] = s1.coeffs()[i].eval<Rational>(tval);
    for (std::size_t i = 0; i < s2.coeffs().size(); ++i) c2[i] = s2.coeffs()[i].eval<Rational>(tval);
    Rational value = resultant_formal(UniPoly(std::move(c1)), UniPoly(std::move(c2)), d1, d2);
    pts.emplace_back(tval, value);
  }
  return interpolate(pts);
}

PencilMember make_member(QuadExt u, QuadExt v, int mult, bool verified, std::string note = {}) {
  PencilMember m;
  m.u = std::move(u);
  m.v = std::move(v);
  m.multiplicity = mult;
  m.verified = verified;
  m.note = std::move(note);
  return m;
}

// Exact singularity verdict of u f + v g at a resolved parameter.
Tri verify_member(const MPoly& f, const MPoly& g, const QuadExt& t0) {
  if (t0.is_rational()) {
    MPoly w = f + g * t0.rational();
    if (w.is_zero()) return Tri::Refuted;
    return singular_exact(w).first;
  }
  MPolyQ w = f.lift<QuadExt>() + g.lift<QuadExt>() * t0;
  if (w.is_zero()) return Tri::Refuted;
  return singular_exact(w).first;
}

}  // namespace

PencilReport pencil_singular_members(const MPoly& f_in, const MPoly& g_in) {
  if (f_in.shape() != Shape({1, 1})) throw ShapeMismatchError("pencil analysis is defined on P^1 x P^1");
  if (f_in.degree() != g_in.degree() || f_in.shape() != g_in.shape())
    throw ShapeMismatchError("pencil requires equal shape and degree");
  if (f_in.is_zero() || g_in.is_zero() || proportional(f_in, g_in)) throw IdenticalDivisorsError();
  int a = f_in.degree()[0], b = f_in.degree()[1];
  if (a < 1 || b < 1) throw HypothesisError("pencil analysis requires bidegree at least (1,1)");

  PencilReport report;

  if (a == 1 && b == 1) {
    Matrix mf = bilinear_matrix(f_in), mg = bilinear_matrix(g_in);
    BinaryQuadratic disc;
    disc.c20 = det2(mf);
    disc.c02 = det2(mg);
    disc.c11 = det2(mf + mg) - disc.c20 - disc.c02;
    if (disc.is_zero_form()) {
      report.family_singular = true;
      return report;
    }
    for (const auto& r : roots(disc))
      report.members.push_back(make_member(r.c1, r.c2, r.multiplicity, true));
    return report;
  }

  // work with the factor of degree >= 2 in the x position
  MPoly f = f_in, g = g_in;
  if (a == 1) {
    f = transpose_factors(f);
    g = transpose_factors(g);
    std::swap(a, b);
  }

  XForm p1 = pencil_partial(f, g, 0, 0);
  XForm p2 = pencil_partial(f, g, 0, 1);
  XForm p3 = pencil_partial(f, g, 1, 0);
  XForm p4 = pencil_partial(f, g, 1, 1);
  const std::size_t dx1 = static_cast<std::size_t>(a - 1);

  struct SGen {
    YForm form;
    std::size_t ydeg;
  };
  std::vector<SGen> s;
  s.push_back({resultant_formal(p1, p2, dx1, dx1), static_cast<std::size_t>((2 * a - 2) * b)});
  const std::size_t dy_mixed = static_cast<std::size_t>(a * b + (a - 1) * (b - 1));
  s.push_back({resultant_formal(p1, p3, dx1, static_cast<std::size_t>(a)), dy_mixed});
  s.push_back({resultant_formal(p1, p4, dx1, static_cast<std::size_t>(a)), dy_mixed});

  UniPoly eliminant;
  for (std::size_t i = 0; i < s.size() && eliminant.is_zero(); ++i)
    for (std::size_t j = i + 1; j < s.size() && eliminant.is_zero(); ++j) {
      if (s[i].form.is_zero() || s[j].form.is_zero()) continue;
      eliminant = resultant_y_interpolated(s[i].form, s[i].ydeg, s[j].form, s[j].ydeg);
    }

  if (eliminant.is_zero()) {
    // every parameter passes the pairwise eliminations: the pencil is
    // singular as a family; report the Jacobian-rank-drop members
    report.family_singular = true;
    RankDropParams drops = rank_drop_params(f, g);
    for (auto& [t0, factor] : drops.roots) {
      bool cert = (factor == 0 ? a : b) >= 2;
      Tri v = cert ? Tri::Found : verify_member(f, g, t0);
      report.members.push_back(make_member(QuadExt(1), t0, 1, v == Tri::Found,
                                           v == Tri::Found ? "rank-drop member" : "unverified"));
    }
    if (!drops.leftover.is_zero() && drops.leftover.degree() > 0)
      report.unresolved_factors.push_back(drops.leftover);
    // the member at infinity
    auto ginf = singular_exact(g).first;
    if (ginf == Tri::Found)
      report.members.push_back(make_member(QuadExt(0), QuadExt(1), 1, true));
    else if (ginf == Tri::Unresolved)
      report.members.push_back(make_member(QuadExt(0), QuadExt(1), 1, false, "unverified"));
    return report;
  }

  FieldRoots roots_t = field_roots(eliminant);
  for (auto& [t0, mult] : roots_t.roots) {
    Tri v = verify_member(f, g, t0);
    if (v == Tri::Refuted) continue;  // spurious elimination root
    report.members.push_back(
        make_member(QuadExt(1), t0, 1, v == Tri::Found, v == Tri::Found ? "" : "unverified"));
  }
  if (!roots_t.complete && roots_t.leftover.degree() > 0)
    report.unresolved_factors.push_back(roots_t.leftover);

  auto ginf = singular_exact(g).first;
  if (ginf == Tri::Found)
    report.members.push_back(make_member(QuadExt(0), QuadExt(1), 1, true));
  else if (ginf == Tri::Unresolved)
    report.members.push_back(make_member(QuadExt(0), QuadExt(1), 1, false, "unverified"));
  return report;
}

// ---------------------------------------------------------------------------
// Split normal-form recovery.

namespace {

struct RetrySignal {};

template <class K>
std::size_t jacobian_dim(const MPolyT<K>& f, std::size_t factor) {
  return jacobian_space(f, factor).dim();
}

// Left-kernel vector of a 2-row coefficient matrix.
template <class K>
std::pair<K, K> left_dependency(const MPolyT<K>& p0, const MPolyT<K>& p1) {
  auto v0 = p0.coefficient_vector();
  auto v1 = p1.coefficient_vector();
  MatrixT<K> m(v0.size(), 2);
  for (std::size_t i = 0; i < v0.size(); ++i) {
    m(i, 0) = v0[i];
    m(i, 1) = v1[i];
  }
  auto basis = kernel_basis(m);
  if (basis.empty()) throw RetrySignal{};
  return {basis[0][0], basis[0][1]};
}

// Solve [p0 | p1] * (e, e')^T = target in the coefficient space.
template <class K>
std::pair<K, K> solve_pair(const MPolyT<K>& p0, const MPolyT<K>& p1, const MPolyT<K>& target) {
  auto v0 = p0.coefficient_vector();
  auto v1 = p1.coefficient_vector();
  auto vt = target.coefficient_vector();
  MatrixT<K> aug(v0.size(), 3);
  for (std::size_t i = 0; i < v0.size(); ++i) {
    aug(i, 0) = v0[i];
    aug(i, 1) = v1[i];
    aug(i, 2) = vt[i];
  }
  RrefResult<K> r = rref(std::move(aug));
  // consistency: no pivot in the last column
  for (auto c : r.pivot_cols)
    if (c == 2) throw RetrySignal{};
  K e(0), e2(0);
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
    if (r.pivot_cols[i] == 0) e = r.matrix(i, 2);
    if (r.pivot_cols[i] == 1) e2 = r.matrix(i, 2);
  }
  return {e, e2};
}

template <class K>
MatrixT<K> complete_column(const K& alpha, const K& beta) {
  MatrixT<K> c(2, 2);
  c(0, 1) = alpha;
  c(1, 1) = beta;
  if (!is_zero(beta)) {
    c(0, 0) = K(1);
    c(1, 0) = K(0);
  } else {
    c(0, 0) = K(0);
    c(1, 0) = K(1);
  }
  return c;
}

long long binom_ll(int n, int k) {
  long long acc = 1;
  for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

struct CoreResult {
  MatrixT<QuadExt> change_x, change_y;
  QuadExt v_f, v_g;
};

// The constructive normalization: w has a factor-1 rank drop; returns the
// per-factor changes sending (f, g) to split form.
template <class K>
CoreResult recover_core(const MPolyT<K>& f_in, const MPolyT<K>& g_in, const MPolyT<K>& w_in) {
  const int a = f_in.degree()[0], b = f_in.degree()[1];
  // 1) kill the second x-partial of w
  auto [alpha, beta] = left_dependency(w_in.partial(0, 0), w_in.partial(0, 1));
  MatrixT<K> cx = complete_column(alpha, beta);
  FactorChangeT<K> chx{0, cx};
  MPolyT<K> w = w_in.apply_change(chx), f = f_in.apply_change(chx), g = g_in.apply_change(chx);
  if (!w.partial(0, 1).is_zero()) throw RetrySignal{};

  // 2) w = x0^a r(y); kill the second y-partial of r via the same trick on w
  auto [alpha2, beta2] = left_dependency(w.partial(1, 0), w.partial(1, 1));
  MatrixT<K> cy = complete_column(alpha2, beta2);
  FactorChangeT<K> chy{1, cy};
  w = w.apply_change(chy);
  f = f.apply_change(chy);
  g = g.apply_change(chy);
  std::vector<int> xmono{a, 0, b, 0}, ymono{0, a, 0, b};
  if (w.term_count() != 1 || is_zero(w.coeff(xmono))) throw RetrySignal{};
  w = w * (K(1) / w.coeff(xmono));  // w = x0^a y0^b

  // 3) align f with w by a triangular x-change: solve
  //    x0^(a-1) y0^b = e f_x0 + e' f_x1, then x1 <- (e'/e) x0 + x1 with the
  //    scale mu = a e makes (mu f)_x0 = w_x0
  MPolyT<K> target(f.shape(), f.degree().minus_unit(0));
  {
    std::vector<int> tm{a - 1, 0, b, 0};
    target.add_term(tm, K(1));
  }
  auto [e, e2] = solve_pair(f.partial(0, 0), f.partial(0, 1), target);
  if (is_zero(e)) throw RetrySignal{};
  MatrixT<K> tri = MatrixT<K>::identity(2);
  tri(1, 0) = e2 / e;
  FactorChangeT<K> cht{0, tri};
  K mu = K(a) * e;
  f = f.apply_change(cht) * mu;
  g = g.apply_change(cht) * mu;
  MPolyT<K> h = f - w;
  if (!h.partial(0, 0).is_zero() || h.is_zero()) throw RetrySignal{};

  // 4) h = x1^a d(y); d must be a pure b-th power c * l(y)^b with l not
  //    proportional to y0
  std::vector<K> dvec(static_cast<std::size_t>(b) + 1, K(0));
  for (const auto& [exp, coeff] : h.terms()) {
    if (exp[0] != 0 || exp[1] != a) throw RetrySignal{};
    dvec[static_cast<std::size_t>(exp[3])] = coeff;
  }
  MatrixT<K> v = MatrixT<K>::identity(2);
  K vf(0);
  bool pure_y1 = true;
  for (int k = 0; k < b; ++k) pure_y1 &= is_zero(dvec[static_cast<std::size_t>(k)]);
  if (pure_y1) {
    vf = dvec[static_cast<std::size_t>(b)];
  } else if (!is_zero(dvec[0])) {
    K c = dvec[0];
    K l1 = dvec[1] / (K(b) * c);
    if (is_zero(l1)) throw RetrySignal{};  // d would be c y0^b
    K pw(1);
    for (int k = 0; k <= b; ++k) {
      if (dvec[static_cast<std::size_t>(k)] != c * K(static_cast<int>(binom_ll(b, k))) * pw)
        throw RetrySignal{};
      pw = pw * l1;
    }
    v(1, 0) = K(-1) / l1;  // y1 <- -y0/l1 + y1 sends l = y0 + l1 y1 to l1 y1
    K lb(1);
    for (int k = 0; k < b; ++k) lb = lb * l1;
    vf = c * lb;
  } else {
    throw RetrySignal{};  // not a pure power
  }
  FactorChangeT<K> chv{1, v};
  f = f.apply_change(chv);
  g = g.apply_change(chv);

  // 5) read the split coefficients off f and g
  if (f.term_count() != 2 || f.coeff(xmono) != K(1) || f.coeff(ymono) != vf) throw RetrySignal{};
  if (g.term_count() > 2) throw RetrySignal{};
  K ug = g.coeff(xmono), vg = g.coeff(ymono);
  if (is_zero(ug) || is_zero(vg)) throw RetrySignal{};

  CoreResult out;
  MatrixT<K> total_x = cx * tri;
  MatrixT<K> total_y = cy * v;
  out.change_x = MatrixT<QuadExt>(2, 2);
  out.change_y = MatrixT<QuadExt>(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      out.change_x(i, j) = QuadExt(total_x(i, j));
      out.change_y(i, j) = QuadExt(total_y(i, j));
    }
  out.v_f = QuadExt(vf);
  out.v_g = QuadExt(vg / ug);
  return out;
}

template <class K>
std::optional<SplitRecovery> recover_attempt(const MPolyT<K>& f, const MPolyT<K>& g, const K& t0,
                                             bool rational) {
  MPolyT<K> w = f + g * t0;
  if (w.is_zero()) return std::nullopt;
  try {
    if (jacobian_dim(w, 0) <= 1) {
      CoreResult core = recover_core(f, g, w);
      SplitRecovery rec;
      rec.change = {FactorChangeT<QuadExt>{0, core.change_x}, FactorChangeT<QuadExt>{1, core.change_y}};
      rec.v_f = core.v_f;
      rec.v_g = core.v_g;
      rec.lambda = core.v_g / core.v_f;
      rec.rational = rational;
      return rec;
    }
    if (jacobian_dim(w, 1) <= 1) {
      CoreResult core = recover_core(transpose_factors(f), transpose_factors(g), transpose_factors(w));
      SplitRecovery rec;
      rec.change = {FactorChangeT<QuadExt>{0, core.change_y}, FactorChangeT<QuadExt>{1, core.change_x}};
      rec.v_f = core.v_f;
      rec.v_g = core.v_g;
      rec.lambda = core.v_g / core.v_f;
      rec.rational = rational;
      return rec;
    }
  } catch (const RetrySignal&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<SplitRecovery> recover_split_normal_form(const MPoly& f, const MPoly& g) {
  if (f.shape() != Shape({1, 1})) throw ShapeMismatchError("split recovery is defined on P^1 x P^1");
  if (f.degree() != g.degree()) throw ShapeMismatchError("split recovery requires equal degrees");
  const int a = f.degree()[0], b = f.degree()[1];
  if (a < 2 || b < 2) throw HypothesisError("split recovery requires bidegree at least (2,2)");
  if (f.is_zero() || g.is_zero()) throw HypothesisError("zero polynomial does not define a divisor");
  for (std::size_t i = 0; i < 2; ++i) {
    if (jacobian_space(f, i).dim() != 2 || jacobian_space(g, i).dim() != 2)
      throw HypothesisError("inputs must have full Jacobian rank in both factors");
    if (!span_equal(jacobian_space(f, i), jacobian_space(g, i)))
      throw HypothesisError("Jacobian spans of the inputs differ in factor " + std::to_string(i + 1));
  }

  if (proportional(f, g)) {
    auto split = is_split_type_in_coords(f);
    if (!split) return std::nullopt;  // degenerate pencil, no constructive route
    SplitRecovery rec;
    rec.change = {FactorChangeT<QuadExt>{0, MatrixT<QuadExt>::identity(2)},
                  FactorChangeT<QuadExt>{1, MatrixT<QuadExt>::identity(2)}};
    rec.v_f = QuadExt(split->v / split->u);
    rec.v_g = rec.v_f;
    rec.lambda = QuadExt(1);
    rec.rational = true;
    return rec;
  }

  RankDropParams drops = rank_drop_params(f, g);
  std::stable_sort(drops.roots.begin(), drops.roots.end(),
                   [](const auto& x, const auto& y) { return x.first.is_rational() && !y.first.is_rational(); });
  for (const auto& [t0, factor] : drops.roots) {
    (void)factor;
    if (t0.is_rational()) {
      if (auto rec = recover_attempt<Rational>(f, g, t0.rational(), true)) return rec;
    } else {
      if (auto rec = recover_attempt<QuadExt>(f.lift<QuadExt>(), g.lift<QuadExt>(), t0, false))
        return rec;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Restriction sampling.

RestrictReport restrict_and_compare(const MPoly& f, const MPoly& g, std::size_t trials,
                                    std::uint64_t seed) {
  if (f.shape() != g.shape() || f.degree() != g.degree())
    throw ShapeMismatchError("restriction comparison requires equal shape and degree");
  if (f.shape().factors() < 2)
    throw ShapeMismatchError("restriction comparison needs at least two factors");
  if (f.degree()[0] < 1) throw HypothesisError("kept factor must have positive degree");

  RestrictReport report;
  report.kept_factor = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1)));
    std::uniform_int_distribution<int> coord(-7, 7);
    RestrictTrial tr;
    MPoly rf = f, rg = g;
    bool degenerate = false;
    // evaluate factors s-1, ..., 1, keeping factor 0
    for (std::size_t factor = f.shape().factors(); factor-- > 1;) {
      std::vector<Rational> point;
      int attempts = 0;
      while (true) {
        point.clear();
        bool nz = false;
        for (std::size_t j = 0; j < rf.shape().vars(factor); ++j) {
          point.emplace_back(coord(rng));
          nz |= !is_zero(point.back());
        }
        if (!nz) continue;
        MPoly nf = rf.evaluate_partial(factor, point);
        MPoly ng = rg.evaluate_partial(factor, point);
        if ((!nf.is_zero() && !ng.is_zero()) || ++attempts > 8) {
          rf = std::move(nf);
          rg = std::move(ng);
          break;
        }
      }
      tr.points.push_back(point);
      if (rf.is_zero() || rg.is_zero()) {
        degenerate = true;
        break;
      }
    }
    if (!degenerate) {
      tr.spans_equal = span_equal(jacobian_space(rf, 0), jacobian_space(rg, 0));
      tr.proportional = proportional(rf, rg);
    }
    report.equal_count += tr.spans_equal ? 1 : 0;
    report.proportional_count += tr.proportional ? 1 : 0;
    report.trials.push_back(std::move(tr));
  }
  return report;
}

}  // namespace logtor
