#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "logtor/errors.hpp"
#include "logtor/fpscalar.hpp"
#include "logtor/matrix.hpp"
#include "logtor/quadext.hpp"
#include "logtor/rational.hpp"

namespace logtor {

// Factor dimensions (n_1, ..., n_s) of a product of projective spaces.
struct Shape {
  std::vector<int> n;

  Shape() = default;
  explicit Shape(std::vector<int> dims) : n(std::move(dims)) {
    if (n.empty()) throw std::invalid_argument("shape needs at least one factor");
    for (int d : n)
      if (d < 1) throw std::invalid_argument("factor dimensions must be >= 1");
  }

  std::size_t factors() const { return n.size(); }
  int dim(std::size_t i) const { return n.at(i); }
  std::size_t vars(std::size_t i) const { return static_cast<std::size_t>(n.at(i)) + 1; }
  std::size_t total_vars() const {
    std::size_t t = 0;
    for (int d : n) t += static_cast<std::size_t>(d) + 1;
    return t;
  }
  std::size_t offset(std::size_t i) const {
    std::size_t t = 0;
    for (std::size_t k = 0; k < i; ++k) t += vars(k);
    return t;
  }
  Shape without(std::size_t i) const {
    std::vector<int> m;
    for (std::size_t k = 0; k < n.size(); ++k)
      if (k != i) m.push_back(n[k]);
    return Shape(std::move(m));
  }

  friend bool operator==(const Shape& a, const Shape& b) { return a.n == b.n; }
  friend bool operator!=(const Shape& a, const Shape& b) { return !(a == b); }
};

// Multidegree in Z^s with the componentwise partial order.
struct MultiDegree {
  std::vector<int> a;

  MultiDegree() = default;
  explicit MultiDegree(std::vector<int> v) : a(std::move(v)) {}

  int operator[](std::size_t i) const { return a.at(i); }
  std::size_t size() const { return a.size(); }

  MultiDegree minus_unit(std::size_t i) const {
    MultiDegree m = *this;
    m.a.at(i) -= 1;
    return m;
  }
  MultiDegree without(std::size_t i) const {
    MultiDegree m;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (k != i) m.a.push_back(a[k]);
    return m;
  }
  MultiDegree operator+(const MultiDegree& o) const {
    MultiDegree m = *this;
    for (std::size_t i = 0; i < a.size(); ++i) m.a[i] += o.a[i];
    return m;
  }
  bool all_at_least(int v) const {
    return std::all_of(a.begin(), a.end(), [v](int x) { return x >= v; });
  }
  // componentwise >= with at least one strict inequality
  bool strictly_dominates(const MultiDegree& o) const {
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] < o.a[i]) return false;
      if (a[i] > o.a[i]) strict = true;
    }
    return strict;
  }

  friend bool operator==(const MultiDegree& a, const MultiDegree& b) { return a.a == b.a; }
  friend bool operator!=(const MultiDegree& a, const MultiDegree& b) { return !(a == b); }
};

// Canonical monomial basis of the multidegree-a component: all exponent
// tuples (flattened, factor-major) in descending lexicographic order.  This
// fixes the coefficient-vector coordinates that Jacobian-span fingerprints
// use, so it must never change.
std::vector<std::vector<int>> monomial_basis(const Shape& shape, const MultiDegree& degree);

// Number of monomials, prod_i C(n_i + a_i, n_i); zero if some a_i < 0.
std::size_t monomial_count(const Shape& shape, const MultiDegree& degree);

template <class K>
struct FactorChangeT {
  std::size_t factor = 0;
  MatrixT<K> matrix;
};
using FactorChange = FactorChangeT<Rational>;

// Multi-homogeneous polynomial with exact coefficients.  Terms are stored
// sparsely; the zero polynomial keeps its (shape, degree) annotation so that
// Jacobian spaces of extreme cases stay well-typed.
template <class K>
class MPolyT {
 public:
  using Terms = std::map<std::vector<int>, K>;

  MPolyT() = default;
  MPolyT(Shape shape, MultiDegree degree) : shape_(std::move(shape)), degree_(std::move(degree)) {
    if (shape_.factors() != degree_.size())
      throw ShapeMismatchError("degree length does not match shape");
  }
  MPolyT(Shape shape, MultiDegree degree, Terms terms) : MPolyT(std::move(shape), std::move(degree)) {
    for (auto& [exp, coeff] : terms) add_term(exp, coeff);
  }

  // Bypasses the multi-homogeneity validation; for negative-control tests.
  static MPolyT unchecked(Shape shape, MultiDegree degree, Terms terms) {
    MPolyT p(std::move(shape), std::move(degree));
    for (auto& [exp, coeff] : terms)
      if (!logtor::is_zero(coeff)) p.terms_[exp] = coeff;
    return p;
  }

  const Shape& shape() const { return shape_; }
  const MultiDegree& degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const std::vector<int>& exponents, const K& coeff) {
    if (logtor::is_zero(coeff)) return;
    validate_exponents(exponents);
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
      terms_.emplace(exponents, coeff);
    } else {
      it->second += coeff;
      if (logtor::is_zero(it->second)) terms_.erase(it);
    }
  }

  K coeff(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? K(0) : it->second;
  }

  MPolyT operator-() const {
    MPolyT n(shape_, degree_);
    for (const auto& [e, c] : terms_) n.terms_.emplace(e, -c);
    return n;
  }
  MPolyT operator+(const MPolyT& o) const {
    require_same_type(o);
    MPolyT s = *this;
    for (const auto& [e, c] : o.terms_) s.add_term(e, c);
    return s;
  }
  MPolyT operator-(const MPolyT& o) const {
    require_same_type(o);
    MPolyT s = *this;
    for (const auto& [e, c] : o.terms_) s.add_term(e, -c);
    return s;
  }
  MPolyT operator*(const K& scalar) const {
    MPolyT s(shape_, degree_);
    if (logtor::is_zero(scalar)) return s;
    for (const auto& [e, c] : terms_) s.terms_.emplace(e, c * scalar);
    return s;
  }
  MPolyT operator*(const MPolyT& o) const {
    if (shape_ != o.shape_) throw ShapeMismatchError("product of polynomials on different shapes");
    MPolyT p(shape_, degree_ + o.degree_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        std::vector<int> e(e1.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
        p.add_term(e, c1 * c2);
      }
    return p;
  }

  friend bool operator==(const MPolyT& a, const MPolyT& b) {
    return a.shape_ == b.shape_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPolyT& a, const MPolyT& b) { return !(a == b); }

  // Formal partial derivative in variable x_{ij}.  When a_i = 0 the result is
  // the zero polynomial of degree a - e_i by convention.
  MPolyT partial(std::size_t i, std::size_t j) const {
    if (i >= shape_.factors() || j >= shape_.vars(i))
      throw std::out_of_range("partial: variable index out of range");
    MPolyT d(shape_, degree_.minus_unit(i));
    const std::size_t pos = shape_.offset(i) + j;
    for (const auto& [e, c] : terms_) {
      if (e[pos] == 0) continue;
      std::vector<int> de = e;
      de[pos] -= 1;
      d.terms_emplace_add(de, c * K(e[pos]));
    }
    return d;
  }

  // Exact Euler identity sum_j x_{ij} d f / d x_{ij} = a_i * f.
  bool euler_check(std::size_t i) const {
    MPolyT acc(shape_, degree_);
    for (std::size_t j = 0; j < shape_.vars(i); ++j) {
      MPolyT dj = partial(i, j);
      const std::size_t pos = shape_.offset(i) + j;
      for (const auto& [e, c] : dj.terms_) {
        std::vector<int> up = e;
        up[pos] += 1;
        acc.terms_emplace_add(up, c);
      }
    }
    MPolyT scaled = *this * K(degree_[i]);
    return acc == scaled;
  }

  // Linear coordinate change on one factor: x_{ij} <- sum_k M(j,k) x_{ik}.
  MPolyT apply_change(const FactorChangeT<K>& change) const {
    const std::size_t i = change.factor;
    if (i >= shape_.factors()) throw std::out_of_range("apply_change: factor index out of range");
    const MatrixT<K>& m = change.matrix;
    const std::size_t nv = shape_.vars(i);
    if (m.rows() != nv || m.cols() != nv)
      throw ShapeMismatchError("apply_change: matrix size does not match factor");
    if (logtor::is_zero(determinant(m)))
      throw SingularMatrixError("apply_change: coordinate change is singular");
    const std::size_t off = shape_.offset(i);

    MPolyT out(shape_, degree_);
    for (const auto& [e, c] : terms_) {
      // expand prod_j (sum_k M(j,k) x_k)^{e_j} over factor i
      MPolyT factor_part(shape_, MultiDegree(std::vector<int>(shape_.factors(), 0)));
      {
        std::vector<int> unit(shape_.total_vars(), 0);
        factor_part.terms_.emplace(unit, K(1));
      }
      for (std::size_t j = 0; j < nv; ++j) {
        for (int rep = 0; rep < e[off + j]; ++rep) {
          MPolyT lin(shape_, unit_degree(i));
          for (std::size_t k = 0; k < nv; ++k) {
            if (logtor::is_zero(m(j, k))) continue;
            std::vector<int> ve(shape_.total_vars(), 0);
            ve[off + k] = 1;
            lin.add_term(ve, m(j, k));
          }
          factor_part = factor_part * lin;
        }
      }
      // reattach the exponents of the other factors and the coefficient
      for (const auto& [fe, fc] : factor_part.terms_) {
        std::vector<int> full = e;
        for (std::size_t k = 0; k < nv; ++k) full[off + k] = fe[off + k];
        out.add_term(full, c * fc);
      }
    }
    return out;
  }

  // Restriction to a point in factor i: substitutes the factor-i variables
  // and returns the polynomial on the remaining factors.
  MPolyT evaluate_partial(std::size_t i, const std::vector<K>& point) const {
    if (shape_.factors() < 2) throw ShapeMismatchError("evaluate_partial needs at least two factors");
    if (point.size() != shape_.vars(i))
      throw ShapeMismatchError("evaluate_partial: point has wrong length");
    if (std::all_of(point.begin(), point.end(), [](const K& v) { return logtor::is_zero(v); }))
      throw ZeroPointError();
    const std::size_t off = shape_.offset(i);
    const std::size_t nv = shape_.vars(i);
    MPolyT out(shape_.without(i), degree_.without(i));
    for (const auto& [e, c] : terms_) {
      K scale = c;
      for (std::size_t j = 0; j < nv; ++j)
        for (int rep = 0; rep < e[off + j]; ++rep) scale = scale * point[j];
      if (logtor::is_zero(scale)) continue;
      std::vector<int> re;
      re.reserve(e.size() - nv);
      for (std::size_t k = 0; k < e.size(); ++k)
        if (k < off || k >= off + nv) re.push_back(e[k]);
      out.add_term(re, scale);
    }
    return out;
  }

  // Full evaluation at one point per factor.
  K evaluate(const std::vector<std::vector<K>>& points) const {
    if (points.size() != shape_.factors()) throw ShapeMismatchError("evaluate: wrong number of points");
    K acc(0);
    for (const auto& [e, c] : terms_) {
      K t = c;
      for (std::size_t i = 0; i < shape_.factors(); ++i) {
        const std::size_t off = shape_.offset(i);
        for (std::size_t j = 0; j < shape_.vars(i); ++j)
          for (int rep = 0; rep < e[off + j]; ++rep) t = t * points[i][j];
      }
      acc += t;
    }
    return acc;
  }

  // Coefficient vector in the canonical monomial order of (shape, degree).
  std::vector<K> coefficient_vector() const {
    auto basis = monomial_basis(shape_, degree_);
    std::vector<K> v;
    v.reserve(basis.size());
    for (const auto& mono : basis) v.push_back(coeff(mono));
    return v;
  }

  template <class L>
  MPolyT<L> lift() const {
    typename MPolyT<L>::Terms terms;
    for (const auto& [e, c] : terms_) terms.emplace(e, L(c));
    return MPolyT<L>(shape_, degree_, std::move(terms));
  }

  std::string str(const std::string& vars = "xyzw") const;

 private:
  MultiDegree unit_degree(std::size_t i) const {
    std::vector<int> d(shape_.factors(), 0);
    d[i] = 1;
    return MultiDegree(std::move(d));
  }
  void terms_emplace_add(const std::vector<int>& e, const K& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!logtor::is_zero(c)) terms_.emplace(e, c);
    } else {
      it->second += c;
      if (logtor::is_zero(it->second)) terms_.erase(it);
    }
  }
  void require_same_type(const MPolyT& o) const {
    if (shape_ != o.shape_ || degree_ != o.degree_)
      throw ShapeMismatchError("operands have different shape or degree");
  }
  void validate_exponents(const std::vector<int>& e) const {
    if (e.size() != shape_.total_vars()) throw ShapeMismatchError("exponent tuple has wrong length");
    for (std::size_t i = 0; i < shape_.factors(); ++i) {
      int sum = 0;
      for (std::size_t j = 0; j < shape_.vars(i); ++j) {
        int v = e[shape_.offset(i) + j];
        if (v < 0) throw std::invalid_argument("negative exponent");
        sum += v;
      }
      if (sum != degree_[i])
        throw ShapeMismatchError("term violates multi-homogeneity in factor " + std::to_string(i + 1));
    }
  }

  Shape shape_;
  MultiDegree degree_;
  Terms terms_;
};

using MPoly = MPolyT<Rational>;
using MPolyQ = MPolyT<QuadExt>;

// f and g proportional (f = c*g for a nonzero scalar), both nonzero.
template <class K>
bool proportional(const MPolyT<K>& f, const MPolyT<K>& g) {
  if (f.shape() != g.shape() || f.degree() != g.degree()) return false;
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  if (f.term_count() != g.term_count()) return false;
  auto itf = f.terms().begin();
  auto itg = g.terms().begin();
  K ratio = itf->second / itg->second;
  for (; itf != f.terms().end(); ++itf, ++itg) {
    if (itf->first != itg->first) return false;
    if (itf->second != ratio * itg->second) return false;
  }
  return true;
}

template <class K>
std::string MPolyT<K>::str(const std::string& vars) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(";
    {
      std::ostringstream os;
      os << c;
      out += os.str();
    }
    out += ")";
    for (std::size_t i = 0; i < shape_.factors(); ++i)
      for (std::size_t j = 0; j < shape_.vars(i); ++j) {
        int v = e[shape_.offset(i) + j];
        if (v == 0) continue;
        out += " ";
        out += (i < vars.size() ? vars[i] : '?');
        out += std::to_string(j);
        if (v > 1) out += "^" + std::to_string(v);
      }
  }
  return out;
}

}  // namespace logtor
