#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "logtor/fpscalar.hpp"
#include "logtor/matrix.hpp"
#include "logtor/mpoly.hpp"
#include "logtor/rational.hpp"

namespace logtor {

// Prime-field arithmetic for brute-force oracles and the probabilistic
// smoothness fallback.  p must be an odd prime < 2^31.
class GFp {
 public:
  explicit GFp(std::uint32_t p) : p_(p) {
    if (p < 3) throw std::invalid_argument("GFp: modulus too small");
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;

  // Reduction of an exact scalar; nullopt when p divides the denominator.
  std::optional<std::uint32_t> reduce(const Rational& q) const;

 private:
  std::uint32_t p_;
};

// Sparse multi-homogeneous polynomial with mod-p coefficients.
struct MPolyModP {
  Shape shape;
  MultiDegree degree;
  std::vector<std::pair<std::vector<int>, std::uint32_t>> terms;

  std::uint32_t evaluate(const GFp& gf, const std::vector<std::vector<std::uint32_t>>& points) const;
};

// nullopt when some coefficient has a denominator divisible by p.
std::optional<MPolyModP> reduce_mpoly(const MPoly& f, const GFp& gf);

// Canonical representatives of P^n(F_p), first nonzero coordinate 1.
// Visits (p^(n+1)-1)/(p-1) points.
void for_each_projective_point(const GFp& gf, int n,
                               const std::function<void(const std::vector<std::uint32_t>&)>& visit);

// Number of points of P^n(F_p); -1 gives 0.
long long projective_point_count(std::uint32_t p, int n);

// Common projective zeros on P^1 x P^1 of all four partial derivatives of f
// (shape (1,1)); nullopt if f does not reduce mod p.
std::optional<long long> singular_count_p1xp1(const MPoly& f, std::uint32_t p);

// Rank of a matrix over F_p.
std::size_t rank_mod_p(const GFp& gf, std::vector<std::vector<std::uint32_t>> m);

// Basis of the right kernel over F_p.
std::vector<std::vector<std::uint32_t>> kernel_mod_p(const GFp& gf,
                                                     const std::vector<std::vector<std::uint32_t>>& m);

// Point-incidence census of a hyperplane arrangement over F_p: every point of
// P^r(F_p) lying on at least two of the hyperplanes, with the set of incident
// hyperplanes as a bitmask.  Gathered by enumerating the pairwise intersection
// flats, which is exhaustive for incidence >= 2.  Requires every pair of
// covectors to stay independent mod p (good reduction); returns nullopt
// otherwise.
struct IncidenceCensus {
  // key: canonical point; value: bitmask over hyperplane indices
  std::map<std::vector<std::uint32_t>, std::uint64_t> points;
};
std::optional<IncidenceCensus> incidence_census(const GFp& gf,
                                                const std::vector<std::vector<std::uint32_t>>& covectors,
                                                int r);

}  // namespace logtor
