#pragma once

#include <optional>
#include <vector>

#include "logtor/errors.hpp"
#include "logtor/matrix.hpp"
#include "logtor/quadext.hpp"
#include "logtor/rational.hpp"

namespace logtor {

// Projective point or covector with exact coordinates over Q or Q(sqrt d),
// canonicalized so the first nonzero coordinate is 1.
std::vector<QuadExt> canonical_projective(std::vector<QuadExt> v);
std::vector<Rational> canonical_projective(std::vector<Rational> v);

// Hyperplane of P^{n+1} as a covector, scale-free.
class Hyperplane {
 public:
  explicit Hyperplane(std::vector<Rational> covector);
  const std::vector<Rational>& h() const { return h_; }
  std::size_t ambient_coords() const { return h_.size(); }
  friend bool operator==(const Hyperplane& a, const Hyperplane& b) { return a.h_ == b.h_; }
  friend bool operator!=(const Hyperplane& a, const Hyperplane& b) { return !(a == b); }

 private:
  std::vector<Rational> h_;  // canonical: first nonzero entry 1
};

// Quadric hypersurface Q = {x^T A x = 0} in P^{n+1}, A symmetric rational.
class Quadric {
 public:
  explicit Quadric(Matrix symmetric);

  const Matrix& matrix() const { return a_; }
  // dimension n of the quadric (ambient P^{n+1})
  std::size_t dim() const { return a_.rows() - 2; }
  bool is_smooth() const { return smooth_; }

  // x^T A x, exact.
  Rational evaluate(const std::vector<Rational>& x) const;
  QuadExt evaluate(const std::vector<QuadExt>& x) const;
  bool contains(const std::vector<Rational>& x) const { return is_zero(evaluate(x)); }

  // Polar hyperplane of a point: covector A x.
  Hyperplane polar(const std::vector<Rational>& point) const;

 private:
  Matrix a_;
  bool smooth_;
};

// The point A^{-1} h, projectively; the polar hyperplane of the result is h.
// Lies on Q exactly when h is tangent.  Throws SingularMatrixError on a
// singular quadric.
std::vector<Rational> apolar_point(const Quadric& q, const Hyperplane& h);

// h^T A^{-1} h != 0, i.e. the apolar point is off Q, i.e. the hyperplane
// section Q cap h is smooth.
bool section_is_smooth(const Quadric& q, const Hyperplane& h);

// Binary quadratic q~(c1,c2) = (c1 h1 + c2 h2)^T A^{-1} (c1 h1 + c2 h2): its
// projective roots are the members of the pencil tangent to Q, i.e. the
// singular sections.
struct BinaryQuadratic {
  Rational c20;  // coefficient of c1^2
  Rational c11;  // coefficient of c1 c2
  Rational c02;  // coefficient of c2^2

  bool is_zero_form() const { return is_zero(c20) && is_zero(c11) && is_zero(c02); }
  QuadExt eval(const QuadExt& c1, const QuadExt& c2) const;
  Rational discriminant() const { return c11 * c11 - 4 * c20 * c02; }
};

struct PencilRoot {
  QuadExt c1, c2;  // projective parameter, canonicalized
  int multiplicity = 1;

  static PencilRoot canonical(QuadExt c1, QuadExt c2);
  friend bool operator==(const PencilRoot& a, const PencilRoot& b) {
    return a.c1 == b.c1 && a.c2 == b.c2 && a.multiplicity == b.multiplicity;
  }
};

// The two projective roots counted with multiplicity (a double root is
// returned once with multiplicity 2 and flagged by the caller via
// discriminant() == 0).  Throws on the identically-zero form.
std::vector<PencilRoot> roots(const BinaryQuadratic& q);

BinaryQuadratic pencil_tangency_quadratic(const Quadric& q, const Hyperplane& h1, const Hyperplane& h2);

// Singular points of the singular members of the conic pencil on a quadric
// surface (n = 2): the apolar points A^{-1}(c1 h1 + c2 h2) at the tangency
// roots.  Each returned point lies on Q.
struct SingularConicPoint {
  std::vector<QuadExt> point;
  PencilRoot member;
};
std::vector<SingularConicPoint> singular_conic_points(const Quadric& q, const Hyperplane& h1,
                                                      const Hyperplane& h2);

// Splitting type of the projected tangent bundle restricted to a conic: the
// dichotomy is a pure incidence test of the projection center against the
// conic's plane.  Returns a tuple of length n = dim Q: (1,1,0,...,0) when the
// center is off the plane, (2,0,...,0) when it lies on it.
std::vector<int> conic_splitting_type(const Quadric& q, const std::vector<Rational>& center,
                                      const std::vector<std::vector<Rational>>& plane_points);

}  // namespace logtor
