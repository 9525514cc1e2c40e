#include "logtor/quadext.hpp"

namespace logtor {

QuadExt::QuadExt(Rational a, Rational b, Integer d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (b_.is_zero()) {
    d_ = 0;
    return;
  }
  if (d_ == 0) {
    b_ = 0;
    return;
  }
  if (d_ == 1) {  // sqrt(1) collapses
    a_ += b_;
    b_ = 0;
    d_ = 0;
  }
}

const Rational& QuadExt::rational() const {
  if (!is_rational()) throw UnsupportedExtensionError("irrational value where a rational is required");
  return a_;
}

Integer QuadExt::joint_d(const QuadExt& l, const QuadExt& r) {
  if (l.d_ == r.d_) return l.d_;
  if (l.d_ == 0) return r.d_;
  if (r.d_ == 0) return l.d_;
  throw UnsupportedExtensionError("mixing sqrt(" + l.d_.str() + ") with sqrt(" + r.d_.str() + ")");
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  Integer d = joint_d(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  d_ = b_.is_zero() ? Integer(0) : d;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  Integer d = joint_d(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  d_ = b_.is_zero() ? Integer(0) : d;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  Integer d = joint_d(*this, o);
  Rational na = a_ * o.a_ + Rational(d) * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  d_ = b_.is_zero() ? Integer(0) : d;
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in quadratic extension");
  // 1/(a + b sqrt d) = (a - b sqrt d)/norm
  Rational n = o.norm();
  QuadExt inv(o.a_ / n, -o.b_ / n, o.d_);
  return *this *= inv;
}

std::string QuadExt::str() const {
  if (is_rational()) return to_string(a_);
  std::string s;
  if (!a_.is_zero()) s += to_string(a_) + (b_ > 0 ? " + " : " - ");
  else if (b_ < 0) s += "-";
  Rational ab = b_ < 0 ? Rational(-b_) : b_;
  if (ab != 1) s += to_string(ab) + "*";
  s += "sqrt(" + d_.str() + ")";
  return s;
}

QuadExt quadext_sqrt(const Rational& q) {
  if (q.is_zero()) return QuadExt();
  // sqrt(p/q) = sqrt(p*q)/q
  Integer m = num(q) * den(q);
  SquarefreeSplit sf = squarefree_part(m);
  return QuadExt(Rational(0), Rational(sf.k, den(q)), sf.d);
}

std::optional<QuadExt> sqrt_in_field(const QuadExt& x) {
  if (x.is_zero()) return QuadExt();
  if (x.is_rational()) {
    Rational r;
    if (rational_sqrt(x.a(), &r)) return QuadExt(r);
    return std::nullopt;
  }
  // (u + v sqrt d)^2 = u^2 + d v^2 + 2uv sqrt d = a + b sqrt d with b != 0.
  // Then u^2 is a root of 4 z^2 - 4 a z + d b^2 = 0, i.e. z = (a +- sqrt(a^2 - d b^2))/2,
  // and the discriminant is the field norm of x.
  Rational nrm = x.norm();
  Rational s;
  if (!rational_sqrt(nrm, &s)) return std::nullopt;
  for (int branch = 0; branch < 2; ++branch) {
    Rational z = (x.a() + (branch ? -s : s)) / 2;
    Rational u;
    if (z >= 0 && rational_sqrt(z, &u) && !u.is_zero()) {
      Rational v = x.b() / (2 * u);
      QuadExt cand(u, v, x.d());
      if (cand * cand == x) return cand;
    }
  }
  return std::nullopt;
}

QuadraticRoots solve_quadratic(const Rational& c2, const Rational& c1, const Rational& c0) {
  if (c2.is_zero()) throw std::domain_error("solve_quadratic: leading coefficient is zero");
  Rational disc = c1 * c1 - 4 * c2 * c0;
  QuadraticRoots out;
  if (disc.is_zero()) {
    out.r1 = out.r2 = QuadExt(-c1 / (2 * c2));
    out.double_root = true;
    return out;
  }
  QuadExt s = quadext_sqrt(disc);
  QuadExt two_a = QuadExt(2 * c2);
  out.r1 = (QuadExt(-c1) + s) / two_a;
  out.r2 = (QuadExt(-c1) - s) / two_a;
  return out;
}

}  // namespace logtor
