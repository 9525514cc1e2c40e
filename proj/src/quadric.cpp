#include "logtor/quadric.hpp"

namespace logtor {

std::vector<QuadExt> canonical_projective(std::vector<QuadExt> v) {
  std::size_t lead = 0;
  while (lead < v.size() && v[lead].is_zero()) ++lead;
  if (lead == v.size()) throw ZeroPointError();
  QuadExt inv = QuadExt(1) / v[lead];
  for (auto& c : v) c = c * inv;
  return v;
}

std::vector<Rational> canonical_projective(std::vector<Rational> v) {
  std::size_t lead = 0;
  while (lead < v.size() && is_zero(v[lead])) ++lead;
  if (lead == v.size()) throw ZeroPointError();
  Rational inv = Rational(1) / v[lead];
  for (auto& c : v) c = c * inv;
  return v;
}

Hyperplane::Hyperplane(std::vector<Rational> covector) : h_(canonical_projective(std::move(covector))) {
  if (h_.size() < 2) throw std::invalid_argument("hyperplane covector too short");
}

Quadric::Quadric(Matrix symmetric) : a_(std::move(symmetric)) {
  if (a_.rows() != a_.cols() || a_.rows() < 3)
    throw std::invalid_argument("quadric matrix must be square of size >= 3");
  if (!a_.is_symmetric()) throw std::invalid_argument("quadric matrix must be symmetric");
  smooth_ = !is_zero(determinant(a_));
}

Rational Quadric::evaluate(const std::vector<Rational>& x) const {
  if (x.size() != a_.rows()) throw std::invalid_argument("point has wrong length");
  Rational acc(0);
  for (std::size_t i = 0; i < a_.rows(); ++i)
    for (std::size_t j = 0; j < a_.cols(); ++j) acc += a_(i, j) * x[i] * x[j];
  return acc;
}

QuadExt Quadric::evaluate(const std::vector<QuadExt>& x) const {
  if (x.size() != a_.rows()) throw std::invalid_argument("point has wrong length");
  QuadExt acc(0);
  for (std::size_t i = 0; i < a_.rows(); ++i)
    for (std::size_t j = 0; j < a_.cols(); ++j) acc += x[i] * x[j] * QuadExt(a_(i, j));
  return acc;
}

Hyperplane Quadric::polar(const std::vector<Rational>& point) const {
  return Hyperplane(a_ * point);
}

namespace {

Matrix require_smooth_inverse(const Quadric& q) {
  if (!q.is_smooth()) throw SingularMatrixError("quadric is singular");
  return invert_symmetric(q.matrix());
}

Rational bilinear(const Matrix& m, const std::vector<Rational>& u, const std::vector<Rational>& v) {
  Rational acc(0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * u[i] * v[j];
  return acc;
}

}  // namespace

std::vector<Rational> apolar_point(const Quadric& q, const Hyperplane& h) {
  Matrix inv = require_smooth_inverse(q);
  return canonical_projective(inv * h.h());
}

bool section_is_smooth(const Quadric& q, const Hyperplane& h) {
  Matrix inv = require_smooth_inverse(q);
  return !is_zero(bilinear(inv, h.h(), h.h()));
}

QuadExt BinaryQuadratic::eval(const QuadExt& c1, const QuadExt& c2) const {
  return c1 * c1 * QuadExt(c20) + c1 * c2 * QuadExt(c11) + c2 * c2 * QuadExt(c02);
}

std::vector<PencilRoot> roots(const BinaryQuadratic& q) {
  if (q.is_zero_form()) throw std::domain_error("roots of the identically-zero binary quadratic");
  std::vector<PencilRoot> out;
  if (is_zero(q.c20)) {
    // (1:0) is a root: c1^2 coefficient vanishes
    if (is_zero(q.c11)) {
      // q = c02 c2^2: (1:0) is a double root
      out.push_back({QuadExt(1), QuadExt(0), 2});
      return out;
    }
    out.push_back({QuadExt(1), QuadExt(0), 1});
    // remaining root of c11 c1 + c02 c2 = 0
    out.push_back(PencilRoot::canonical(QuadExt(-q.c02), QuadExt(q.c11)));
    return out;
  }
  QuadraticRoots qr = solve_quadratic(q.c20, q.c11, q.c02);  // roots in s = c1/c2
  if (qr.double_root) {
    out.push_back({qr.r1, QuadExt(1), 2});
  } else {
    out.push_back({qr.r1, QuadExt(1), 1});
    out.push_back({qr.r2, QuadExt(1), 1});
  }
  return out;
}

PencilRoot PencilRoot::canonical(QuadExt c1, QuadExt c2) {
  std::vector<QuadExt> v = canonical_projective({std::move(c1), std::move(c2)});
  return {v[0], v[1], 1};
}

BinaryQuadratic pencil_tangency_quadratic(const Quadric& q, const Hyperplane& h1, const Hyperplane& h2) {
  Matrix inv = require_smooth_inverse(q);
  Matrix pair(2, h1.h().size());
  for (std::size_t j = 0; j < h1.h().size(); ++j) {
    pair(0, j) = h1.h()[j];
    pair(1, j) = h2.h()[j];
  }
  if (rank(pair) < 2) throw DependentHyperplanesError();
  BinaryQuadratic out;
  out.c20 = bilinear(inv, h1.h(), h1.h());
  out.c11 = 2 * bilinear(inv, h1.h(), h2.h());
  out.c02 = bilinear(inv, h2.h(), h2.h());
  return out;
}

std::vector<SingularConicPoint> singular_conic_points(const Quadric& q, const Hyperplane& h1,
                                                      const Hyperplane& h2) {
  if (q.dim() != 2) throw std::invalid_argument("singular_conic_points requires a quadric surface");
  BinaryQuadratic tq = pencil_tangency_quadratic(q, h1, h2);
  Matrix inv = invert_symmetric(q.matrix());
  std::vector<SingularConicPoint> out;
  for (const auto& root : roots(tq)) {
    std::vector<QuadExt> combo(h1.h().size());
    for (std::size_t j = 0; j < combo.size(); ++j)
      combo[j] = root.c1 * QuadExt(h1.h()[j]) + root.c2 * QuadExt(h2.h()[j]);
    std::vector<QuadExt> pt(combo.size(), QuadExt(0));
    for (std::size_t i = 0; i < inv.rows(); ++i)
      for (std::size_t j = 0; j < inv.cols(); ++j) pt[i] += combo[j] * QuadExt(inv(i, j));
    out.push_back({canonical_projective(std::move(pt)), root});
  }
  return out;
}

std::vector<int> conic_splitting_type(const Quadric& q, const std::vector<Rational>& center,
                                      const std::vector<std::vector<Rational>>& plane_points) {
  const std::size_t nc = q.matrix().rows();
  if (q.dim() < 2) throw std::invalid_argument("conic_splitting_type needs dim Q >= 2");
  if (center.size() != nc) throw std::invalid_argument("center has wrong length");
  if (plane_points.size() != 3) throw DegeneratePlaneError("a plane needs three spanning points");
  if (is_zero(q.evaluate(center))) throw CenterOnQuadricError();

  Matrix span(3, nc);
  for (std::size_t i = 0; i < 3; ++i) {
    if (plane_points[i].size() != nc) throw std::invalid_argument("plane point has wrong length");
    for (std::size_t j = 0; j < nc; ++j) span(i, j) = plane_points[i][j];
  }
  if (rank(span) < 3) throw DegeneratePlaneError("plane points do not span a plane");

  // plane contained in Q iff the restricted quadratic form vanishes
  Matrix basis = span.transpose();  // columns span the plane
  Matrix restricted = basis.transpose() * q.matrix() * basis;
  bool plane_in_q = true;
  for (std::size_t i = 0; i < 3 && plane_in_q; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!is_zero(restricted(i, j))) {
        plane_in_q = false;
        break;
      }
  if (plane_in_q) throw DegeneratePlaneError("conic plane is contained in the quadric");

  Matrix with_center(4, nc);
  for (std::size_t j = 0; j < nc; ++j) {
    for (std::size_t i = 0; i < 3; ++i) with_center(i, j) = span(i, j);
    with_center(3, j) = center[j];
  }
  const bool center_in_plane = rank(with_center) == 3;

  std::vector<int> type(q.dim(), 0);
  if (center_in_plane) {
    type[0] = 2;
  } else {
    type[0] = 1;
    type[1] = 1;
  }
  return type;
}

}  // namespace logtor
