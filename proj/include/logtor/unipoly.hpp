#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "logtor/errors.hpp"
#include "logtor/fpscalar.hpp"
#include "logtor/quadext.hpp"
#include "logtor/rational.hpp"

namespace logtor {

template <class R>
class UniPolyT;

template <class R>
bool is_zero(const UniPolyT<R>& p) {
  return p.is_zero();
}

// Exact division for the coefficient rings used below.  Polynomial Bareiss
// elimination relies on every division it performs being remainder-free.
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline QuadExt exact_div(const QuadExt& a, const QuadExt& b) { return a / b; }

// Dense univariate polynomial with coefficients in a commutative ring R,
// stored ascending; the zero polynomial has an empty coefficient vector.
template <class R>
class UniPolyT {
 public:
  UniPolyT() = default;
  UniPolyT(int c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) c_.push_back(R(c));
  }
  explicit UniPolyT(R c) {
    if (!logtor::is_zero(c)) c_.push_back(std::move(c));
  }
  explicit UniPolyT(std::vector<R> ascending) : c_(std::move(ascending)) { trim(); }

  static UniPolyT variable() { return UniPolyT(std::vector<R>{R(0), R(1)}); }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  long long degree() const { return static_cast<long long>(c_.size()) - 1; }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  const R& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  void set_coeff(std::size_t i, R v) {
    if (i >= c_.size()) c_.resize(i + 1, R(0));
    c_[i] = std::move(v);
    trim();
  }

  UniPolyT operator-() const {
    UniPolyT n = *this;
    for (auto& v : n.c_) v = -v;
    return n;
  }

  UniPolyT& operator+=(const UniPolyT& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPolyT& operator-=(const UniPolyT& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  friend UniPolyT operator+(UniPolyT a, const UniPolyT& b) { return a += b; }
  friend UniPolyT operator-(UniPolyT a, const UniPolyT& b) { return a -= b; }

  friend UniPolyT operator*(const UniPolyT& a, const UniPolyT& b) {
    if (a.is_zero() || b.is_zero()) return UniPolyT();
    UniPolyT p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (logtor::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
    }
    p.trim();
    return p;
  }

  UniPolyT operator*(const R& s) const {
    if (logtor::is_zero(s)) return UniPolyT();
    UniPolyT p = *this;
    for (auto& v : p.c_) v = v * s;
    p.trim();
    return p;
  }

  friend bool operator==(const UniPolyT& a, const UniPolyT& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPolyT& a, const UniPolyT& b) { return !(a == b); }

  template <class V>
  V eval(const V& x) const {
    V acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + V(c_[i]);
    return acc;
  }

  UniPolyT derivative() const {
    if (c_.size() <= 1) return UniPolyT();
    UniPolyT d;
    d.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.c_[i - 1] = c_[i] * R(static_cast<int>(i));
    d.trim();
    return d;
  }

  // x^k * this
  UniPolyT shifted(std::size_t k) const {
    if (is_zero()) return UniPolyT();
    UniPolyT s;
    s.c_.assign(c_.size() + k, R(0));
    for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i + k] = c_[i];
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && logtor::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

using UniPoly = UniPolyT<Rational>;
using BiPoly = UniPolyT<UniPolyT<Rational>>;  // outer variable over inner-variable coefficients

// ---------------------------------------------------------------------------
// Field-coefficient algorithms (K = Rational, QuadExt, or any exact field).

template <class K>
std::pair<UniPolyT<K>, UniPolyT<K>> divmod(const UniPolyT<K>& a, const UniPolyT<K>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  UniPolyT<K> q, r = a;
  const long long db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    const long long k = r.degree() - db;
    K c = r.leading() / b.leading();
    UniPolyT<K> term(std::vector<K>{c});
    term = term.shifted(static_cast<std::size_t>(k));
    q += term;
    r -= term * b;
  }
  return {std::move(q), std::move(r)};
}

template <class K>
UniPolyT<K> monic(const UniPolyT<K>& p) {
  if (p.is_zero()) return p;
  K inv = K(1) / p.leading();
  return p * inv;
}

// Monic gcd by the Euclidean algorithm; gcd(0,0) = 0.
template <class K>
UniPolyT<K> gcd(UniPolyT<K> a, UniPolyT<K> b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class K>
UniPolyT<K> squarefree_part_poly(const UniPolyT<K>& p) {
  if (p.degree() <= 0) return monic(p);
  UniPolyT<K> g = gcd(p, p.derivative());
  if (g.degree() <= 0) return monic(p);
  return monic(divmod(p, g).first);
}

// ---------------------------------------------------------------------------
// Ring-coefficient algorithms (nested polynomials).

// Exact polynomial division; throws if the division leaves a remainder.
template <class R>
UniPolyT<R> exact_div(const UniPolyT<R>& a, const UniPolyT<R>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial exact_div by zero");
  if (a.is_zero()) return UniPolyT<R>();
  UniPolyT<R> q, r = a;
  const long long db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    const long long k = r.degree() - db;
    R c = exact_div(r.leading(), b.leading());
    UniPolyT<R> term{std::vector<R>{std::move(c)}};
    term = term.shifted(static_cast<std::size_t>(k));
    q += term;
    r -= term * b;
  }
  if (!r.is_zero()) throw std::domain_error("exact_div: division is not exact");
  return q;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + prem, computed
// without leaving the coefficient ring.
template <class R>
UniPolyT<R> prem(UniPolyT<R> a, const UniPolyT<R>& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  const long long db = b.degree();
  long long steps = a.degree() - db + 1;
  if (steps <= 0) return a;
  UniPolyT<R> lb{std::vector<R>{b.leading()}};
  while (!a.is_zero() && a.degree() >= db) {
    UniPolyT<R> lead{std::vector<R>{a.leading()}};
    UniPolyT<R> shift = lead.shifted(static_cast<std::size_t>(a.degree() - db));
    a = a * lb.coeff(0) - shift * b;
    --steps;
  }
  for (; steps > 0; --steps) a = a * lb.coeff(0);
  return a;
}

// Determinant by fraction-free Bareiss elimination; every division performed
// is exact in R.
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> m) {
  const std::size_t n = m.size();
  if (n == 0) return R(1);
  R prev(1);
  int sign = 1;
  for (std::size_t c = 0; c + 1 < n; ++c) {
    std::size_t piv = c;
    while (piv < n && is_zero(m[piv][c])) ++piv;
    if (piv == n) return R(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      sign = -sign;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        R t = m[i][j] * m[c][c] - m[i][c] * m[c][j];
        m[i][j] = exact_div(t, prev);
      }
      m[i][c] = R(0);
    }
    prev = m[c][c];
  }
  R det = m[n - 1][n - 1];
  return sign < 0 ? R(0) - det : det;
}

// Sylvester resultant with explicit formal degrees (dp, dq) >= actual
// degrees.  With formal degrees matching the homogeneous degrees of binary
// forms this is the resultant of forms: it vanishes exactly on common
// projective roots, with no leading-coefficient caveats.
template <class R>
R resultant_formal(const UniPolyT<R>& p, const UniPolyT<R>& q, std::size_t dp, std::size_t dq) {
  if (static_cast<long long>(dp) < p.degree() || static_cast<long long>(dq) < q.degree())
    throw std::invalid_argument("resultant_formal: formal degree below actual degree");
  if (dp == 0 && dq == 0) return R(1);
  if (dp == 0) {
    R acc(1);
    for (std::size_t i = 0; i < dq; ++i) acc = acc * p.coeff(0);
    return acc;
  }
  if (dq == 0) {
    R acc(1);
    for (std::size_t i = 0; i < dp; ++i) acc = acc * q.coeff(0);
    return acc;
  }
  const std::size_t n = dp + dq;
  std::vector<std::vector<R>> syl(n, std::vector<R>(n, R(0)));
  for (std::size_t i = 0; i < dq; ++i)
    for (std::size_t j = 0; j <= dp; ++j) syl[i][i + j] = p.coeff(dp - j);
  for (std::size_t i = 0; i < dp; ++i)
    for (std::size_t j = 0; j <= dq; ++j) syl[dq + i][i + j] = q.coeff(dq - j);
  return bareiss_determinant(std::move(syl));
}

// Resultant with formal degrees = actual degrees (the usual Sylvester
// resultant).  Not both arguments may be zero.
template <class R>
R sylvester_resultant(const UniPolyT<R>& p, const UniPolyT<R>& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("resultant of two zero polynomials");
  if (p.is_zero() || q.is_zero()) return R(0);
  return resultant_formal(p, q, static_cast<std::size_t>(p.degree()), static_cast<std::size_t>(q.degree()));
}

// ---------------------------------------------------------------------------
// Bivariate polynomials over a field K: outer variable v with coefficients in
// K[u].  Content/primitive-part machinery and a primitive-PRS gcd.

template <class K>
using Bi = UniPolyT<UniPolyT<K>>;

template <class K>
UniPolyT<K> content(const Bi<K>& f) {
  UniPolyT<K> c;
  for (const auto& coeff : f.coeffs()) c = gcd(c, coeff);
  return c;
}

template <class K>
Bi<K> primitive_part(const Bi<K>& f) {
  if (f.is_zero()) return f;
  UniPolyT<K> c = content(f);
  std::vector<UniPolyT<K>> out;
  out.reserve(f.coeffs().size());
  for (const auto& coeff : f.coeffs()) out.push_back(divmod(coeff, c).first);
  return Bi<K>(std::move(out));
}

// gcd in K[u][v] via contents and a primitive pseudo-remainder sequence.
// Normalized so the leading v-coefficient is monic in u.
template <class K>
Bi<K> gcd_bivariate(Bi<K> f, Bi<K> g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  UniPolyT<K> cf = content(f), cg = content(g);
  UniPolyT<K> c = gcd(cf, cg);
  Bi<K> a = primitive_part(f), b = primitive_part(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Bi<K> r = prem(a, b);
    a = std::move(b);
    b = r.is_zero() ? Bi<K>() : primitive_part(r);
  }
  Bi<K> prim = primitive_part(a);
  // scale so the leading v-coefficient is monic, then restore the content
  K inv = K(1) / prim.leading().leading();
  std::vector<UniPolyT<K>> out;
  out.reserve(prim.coeffs().size());
  for (const auto& coeff : prim.coeffs()) out.push_back(coeff * inv);
  return Bi<K>(std::move(out)) * c;
}

// Substitute u = u0 in every coefficient: K[u][v] -> L[v] (L a field
// containing the coefficients and u0).
template <class K, class L>
UniPolyT<L> eval_inner(const Bi<K>& f, const L& u0) {
  std::vector<L> out;
  out.reserve(f.coeffs().size());
  for (const auto& coeff : f.coeffs()) out.push_back(coeff.template eval<L>(u0));
  return UniPolyT<L>(std::move(out));
}

// Substitute the outer variable v = v0: K[u][v] -> K[u].
template <class K>
UniPolyT<K> eval_outer(const Bi<K>& f, const K& v0) {
  UniPolyT<K> acc;
  UniPolyT<K> scalar{std::vector<K>(1, v0)};
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * scalar + f.coeffs()[i];
  return acc;
}

// ---------------------------------------------------------------------------
// Root extraction over the rationals.

struct RationalRoot {
  Rational value;
  int multiplicity;
};

struct RootSplit {
  std::vector<RationalRoot> roots;  // rational roots with multiplicity
  UniPoly remainder;                // rational-root-free cofactor (monic)
};

// All rational roots with multiplicity, by the rational root theorem on the
// primitive integer form.  Degree <= 2 is solved in closed form; for higher
// degree the divisor enumeration trial-divides up to an internal bound, which
// is exhaustive for the coefficient sizes this library produces at desk scale.
std::vector<RationalRoot> rational_roots(const UniPoly& p);

// Rational roots plus the remaining factor after dividing them out.
RootSplit split_rational_roots(const UniPoly& p);

// Roots of p lying in Q or in a single quadratic extension.  Complete when
// deg(remainder after rational roots) <= 2; larger irreducible-over-Q
// leftovers are returned unsolved in `unresolved`.
struct AlgebraicRoots {
  std::vector<std::pair<QuadExt, int>> roots;
  UniPoly unresolved;  // monic; 1 when everything resolved
};
AlgebraicRoots roots_up_to_quadratic(const UniPoly& p);

template <class R>
std::ostream& operator<<(std::ostream& os, const UniPolyT<R>& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (logtor::is_zero(p.coeffs()[i])) continue;
    if (!first) os << " + ";
    os << "(" << p.coeffs()[i] << ")";
    if (i >= 1) os << "*x" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return os;
}

}  // namespace logtor
