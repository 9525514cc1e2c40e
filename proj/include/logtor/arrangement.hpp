#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "logtor/errors.hpp"
#include "logtor/quadric.hpp"

namespace logtor {

// Arrangement of pairwise distinct hyperplanes in P^r.
class HArrangement {
 public:
  HArrangement(int r, std::vector<Hyperplane> hyperplanes);

  int r() const { return r_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

  // covector matrix of a subset (rows = chosen hyperplanes)
  Matrix covector_matrix(const std::vector<std::size_t>& subset) const;

 private:
  int r_;
  std::vector<Hyperplane> hyperplanes_;
};

struct SncReport {
  bool snc = true;
  std::vector<std::size_t> witness;  // a violating subset when !snc
};

// Simple normal crossings: every subset of size k <= r+1 has covector rank k.
// Subset enumeration is exponential in m; callers cap m (the CLI default cap
// is 20).
SncReport is_snc(const HArrangement& a);

// Normal crossings outside finitely many points (r >= 3): every subset whose
// intersection is a linear subspace of dimension s in {1, ..., r-2} has at
// most r - s members once closed up (no s-dimensional flat lies on more than
// r - s of the hyperplanes).
bool nc_outside_finite(const HArrangement& a);

// The finite set of points lying on at least r+1 of the hyperplanes.
// Requires nc_outside_finite (else the locus could be infinite and
// InfiniteLocusError is raised).  Points are canonical and sorted.
std::vector<std::vector<Rational>> sigma_points(const HArrangement& a);

// Hyperplane sections of a fixed quadric, with the ambient lift.
class SectionConfig {
 public:
  SectionConfig(Quadric q, std::vector<Hyperplane> sections);
  const Quadric& quadric() const { return q_; }
  const std::vector<Hyperplane>& sections() const { return sections_; }

 private:
  Quadric q_;
  std::vector<Hyperplane> sections_;
};

// Tame configuration: all sections smooth and the lifted hyperplane
// arrangement in the ambient projective space is SNC.  Throws
// SingularSectionError (listing offending indices) when a section is
// singular.
bool is_tame(const SectionConfig& c);

// Generic-injectivity thresholds for the divisor -> logarithmic bundle map:
// hyperplanes of P^n need m >= n+3; degree-d hypersurfaces of Q_n need
// m >= C(n+1+d, n+1) - C(n-1+d, n+1) + 2, which is n+4 at d = 1.
struct ThresholdQuery {
  enum class Variety { Pn, Qn } variety;
  int n = 1;
  int d = 1;  // only for Qn
};
long long torelli_threshold(const ThresholdQuery& q);

long long binomial(long long n, long long k);

}  // namespace logtor
