#include "logtor/unipoly.hpp"

#include <map>

namespace logtor {

namespace {

// Prime factorization by bounded trial division; the leftover cofactor, if
// any, is appended as a single (possibly composite) factor.  Exhaustive for
// the magnitudes produced by desk-scale inputs.
std::map<Integer, int> factor_bounded(Integer n) {
  std::map<Integer, int> f;
  if (n < 0) n = -n;
  for (std::int64_t p = 2; p <= 1000000 && n > 1; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    while (n % p == 0) {
      n /= p;
      ++f[Integer(p)];
    }
    if (Integer(p) * p > n) break;
  }
  if (n > 1) ++f[n];
  return f;
}

std::vector<Integer> divisors_of(const Integer& n) {
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : factor_bounded(n)) {
    const std::size_t base = divs.size();
    Integer pe(1);
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < base; ++j) {
        divs.push_back(divs[j] * pe);
        if (divs.size() > 200000) throw std::domain_error("rational_roots: divisor set too large");
      }
    }
  }
  return divs;
}

// Primitive integer coefficients of p (denominators cleared, content removed).
std::vector<Integer> primitive_integer_coeffs(const UniPoly& p) {
  Integer lcm(1);
  for (const auto& c : p.coeffs()) lcm = boost::multiprecision::lcm(lcm, den(c));
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  Integer g(0);
  for (const auto& c : p.coeffs()) {
    Integer v = num(c) * (lcm / den(c));
    g = boost::multiprecision::gcd(g, v);
    out.push_back(std::move(v));
  }
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

void divide_out_root(UniPoly& p, const Rational& r, std::vector<RationalRoot>& roots) {
  int mult = 0;
  UniPoly lin(std::vector<Rational>{-r, Rational(1)});
  while (!p.is_zero()) {
    auto [q, rem] = divmod(p, lin);
    if (!rem.is_zero()) break;
    p = std::move(q);
    ++mult;
  }
  if (mult > 0) roots.push_back({r, mult});
}

}  // namespace

std::vector<RationalRoot> rational_roots(const UniPoly& p) {
  return split_rational_roots(p).roots;
}

RootSplit split_rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
  RootSplit out;
  UniPoly work = p;

  // roots at zero
  std::size_t k = 0;
  while (is_zero(work.coeff(0)) && work.degree() > 0) {
    std::vector<Rational> shifted(work.coeffs().begin() + 1, work.coeffs().end());
    work = UniPoly(std::move(shifted));
    ++k;
  }
  if (k > 0) out.roots.push_back({Rational(0), static_cast<int>(k)});

  if (work.degree() == 1) {
    Rational r = -work.coeff(0) / work.coeff(1);
    out.roots.push_back({r, 1});
    out.remainder = UniPoly(1);
    return out;
  }
  if (work.degree() == 2) {
    Rational a = work.coeff(2), b = work.coeff(1), c = work.coeff(0);
    Rational disc = b * b - 4 * a * c, s;
    if (disc >= 0 && rational_sqrt(disc, &s)) {
      Rational r1 = (-b + s) / (2 * a), r2 = (-b - s) / (2 * a);
      if (r1 == r2) {
        out.roots.push_back({r1, 2});
      } else {
        out.roots.push_back({r1, 1});
        out.roots.push_back({r2, 1});
      }
      out.remainder = UniPoly(1);
    } else {
      out.remainder = monic(work);
    }
    return out;
  }
  if (work.degree() < 1) {
    out.remainder = UniPoly(1);
    return out;
  }

  std::vector<Integer> ic = primitive_integer_coeffs(work);
  std::vector<Integer> ps = divisors_of(ic.front());
  std::vector<Integer> qs = divisors_of(ic.back());
  for (const auto& pd : ps) {
    for (const auto& qd : qs) {
      if (boost::multiprecision::gcd(pd, qd) != 1) continue;
      for (int s = 0; s < 2; ++s) {
        Rational cand(s ? -pd : pd, qd);
        if (is_zero(work.eval<Rational>(cand))) divide_out_root(work, cand, out.roots);
        if (work.degree() <= 0) break;
      }
    }
    if (work.degree() <= 0) break;
  }
  out.remainder = work.degree() <= 0 ? UniPoly(1) : monic(work);
  return out;
}

AlgebraicRoots roots_up_to_quadratic(const UniPoly& p) {
  AlgebraicRoots out;
  RootSplit rs = split_rational_roots(p);
  for (const auto& r : rs.roots) out.roots.emplace_back(QuadExt(r.value), r.multiplicity);
  if (rs.remainder.degree() == 2) {
    QuadraticRoots qr = solve_quadratic(rs.remainder.coeff(2), rs.remainder.coeff(1), rs.remainder.coeff(0));
    if (qr.double_root) {
      out.roots.emplace_back(qr.r1, 2);
    } else {
      out.roots.emplace_back(qr.r1, 1);
      out.roots.emplace_back(qr.r2, 1);
    }
    out.unresolved = UniPoly(1);
  } else {
    out.unresolved = rs.remainder;
  }
  return out;
}

}  // namespace logtor
