#include "logtor/rational.hpp"

namespace logtor {

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  Integer p(s.substr(0, slash));
  Integer q(s.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rational(p, q);
}

std::string to_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  Integer r = boost::multiprecision::sqrt(n);
  return r;
}

bool is_perfect_square(const Integer& n, Integer* root) {
  if (n < 0) return false;
  Integer r = isqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

bool rational_sqrt(const Rational& q, Rational* root) {
  if (q < 0) return false;
  Integer rn, rd;
  if (!is_perfect_square(num(q), &rn)) return false;
  if (!is_perfect_square(den(q), &rd)) return false;
  if (root) *root = Rational(rn, rd);
  return true;
}

SquarefreeSplit squarefree_part(const Integer& m) {
  if (m == 0) return {Integer(0), Integer(1)};
  Integer rest = m < 0 ? Integer(-m) : m;
  const bool neg = m < 0;
  Integer d(1), k(1);

  // Peel squared prime factors by trial division.  After dividing out all
  // primes <= bound, a cofactor with a square factor must exceed bound^3,
  // except when it is itself a perfect square; we reject cofactors too large
  // for that argument instead of silently mislabelling them squarefree.
  static const std::int64_t kBound = 1000000;
  for (std::int64_t p = 2; p <= kBound && rest > 1; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) k *= p;
    if (e % 2) d *= p;
    if (Integer(p) * p > rest) break;
  }
  if (rest > 1) {
    Integer r;
    if (is_perfect_square(rest, &r)) {
      k *= r;
    } else if (rest < Integer("1000000000000000000")) {
      d *= rest;  // no prime factor <= 1e6, below 1e18: squarefree
    } else {
      throw std::domain_error("squarefree_part: cofactor too large to certify");
    }
  }
  return {neg ? Integer(-d) : d, k};
}

}  // namespace logtor
