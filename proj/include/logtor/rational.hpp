#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace logtor {

// Exact arithmetic scalars. All coefficient arithmetic in the library runs on
// arbitrary-precision rationals; nothing here is ever rounded.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_zero(const Rational& q) { return q.is_zero(); }

inline int sign(const Rational& q) { return q.sign(); }

// "p/q" or "n"; denominator must be nonzero.
Rational parse_rational(const std::string& s);

// "p/q" when den != 1, plain integer otherwise.
std::string to_string(const Rational& q);

// m = d * k^2 with d squarefree (d keeps the sign of m).  Trial division up to
// an internal bound plus a perfect-square check on the cofactor; exact for
// |m| < 1e18, throws otherwise.  k >= 1.  squarefree_part(0) = {0, 1}.
struct SquarefreeSplit {
  Integer d;
  Integer k;
};
SquarefreeSplit squarefree_part(const Integer& m);

// Largest integer r with r^2 <= n (n >= 0).
Integer isqrt(const Integer& n);

bool is_perfect_square(const Integer& n, Integer* root = nullptr);

// Exact square root if q is a square of a rational, std::nullopt-like via flag.
bool rational_sqrt(const Rational& q, Rational* root);

}  // namespace logtor
