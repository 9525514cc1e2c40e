#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "logtor/errors.hpp"
#include "logtor/rational.hpp"

namespace logtor {

// Element a + b*sqrt(d) of a quadratic extension of the rationals.  d is a
// squarefree integer tag shared by all operands of an expression; d may be
// negative (the pencil analysis produces imaginary tangency parameters).
// Rationals are the special case b = 0, canonically tagged d = 0, and mix
// freely with any extension.  Operands with two distinct nonzero tags raise
// UnsupportedExtension: the library never builds biquadratic fields.
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0), d_(0) {}
  QuadExt(int v) : a_(v), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational v) : a_(std::move(v)), b_(0), d_(0) {}
  QuadExt(Rational a, Rational b, Integer d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  // Valid only when is_rational().
  const Rational& rational() const;

  QuadExt conj() const { return QuadExt(a_, -b_, d_); }
  // (a + b sqrt d)(a - b sqrt d) = a^2 - d b^2, always rational.
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

  QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt l, const QuadExt& r) { return l += r; }
  friend QuadExt operator-(QuadExt l, const QuadExt& r) { return l -= r; }
  friend QuadExt operator*(QuadExt l, const QuadExt& r) { return l *= r; }
  friend QuadExt operator/(QuadExt l, const QuadExt& r) { return l /= r; }
  friend bool operator==(const QuadExt& l, const QuadExt& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.d_ == r.d_;
  }
  friend bool operator!=(const QuadExt& l, const QuadExt& r) { return !(l == r); }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.str(); }

 private:
  // Tag of the result of combining the operands; throws on a genuine mix.
  static Integer joint_d(const QuadExt& l, const QuadExt& r);

  Rational a_, b_;
  Integer d_;
};

inline bool is_zero(const QuadExt& q) { return q.is_zero(); }

// sqrt(q) as an element of some quadratic extension: rational q yields
// k*sqrt(d) with d the squarefree part.  Never nests extensions.
QuadExt quadext_sqrt(const Rational& q);

// Square root of x inside its own field Q(sqrt d), if one exists there.
std::optional<QuadExt> sqrt_in_field(const QuadExt& x);

// Roots of c2*t^2 + c1*t + c0 (c2 != 0) over at most one quadratic extension,
// as a conjugate pair (equal for a double root).
struct QuadraticRoots {
  QuadExt r1, r2;
  bool double_root = false;
};
QuadraticRoots solve_quadratic(const Rational& c2, const Rational& c1, const Rational& c0);

}  // namespace logtor
