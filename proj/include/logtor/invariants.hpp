#pragma once

#include <string>
#include <variant>
#include <vector>

#include "logtor/errors.hpp"
#include "logtor/mpoly.hpp"

namespace logtor {

// (rank, c1, c2) of a sheaf on the quadric surface; intersection theory is
// hard-coded through h1^2 = h2^2 = 0, h1 h2 = point.
struct LogChern {
  long long rank = 0;
  long long c1a = 0, c1b = 0;
  long long c2 = 0;

  friend bool operator==(const LogChern& x, const LogChern& y) {
    return x.rank == y.rank && x.c1a == y.c1a && x.c1b == y.c1b && x.c2 == y.c2;
  }
};

// Bidegree of one smooth irreducible curve on Q2.
struct CurveClass {
  long long a = 0, b = 0;

  CurveClass(long long a_, long long b_) : a(a_), b(b_) {
    if (a < 0 || b < 0 || (a == 0 && b == 0))
      throw std::invalid_argument("curve class must be nonnegative and nonzero");
  }
  bool is_ruling_line() const { return (a == 1 && b == 0) || (a == 0 && b == 1); }
  // arithmetic genus of a smooth (a,b)-curve by adjunction
  long long genus() const { return (a - 1) * (b - 1); }
};

// c1(E(s,t)) = (a + r s, b + r t),
// c2(E(s,t)) = c + (r-1)(a t + b s) + 2 s t C(r,2).
LogChern twist_chern(const LogChern& e, long long s, long long t);

// chi(E) = (a+1)(b+1) + r - c - 1.
long long euler_char(const LogChern& e);

// Chern data of the rank-2 logarithmic bundle of an arrangement of smooth
// curves: c1 = (-2 + alpha, -2 + beta),
// c2 = 4 - 2 alpha - 2 beta + sum 2 a_i b_i + sum_{i<j} (a_i b_j + a_j b_i).
LogChern log_chern(const std::vector<CurveClass>& arr);

// Splitting of the logarithmic bundle of a ruling-line arrangement with a
// lines in one ruling and b in the other: O(-2+a, 0) + O(0, -2+b).
std::pair<std::pair<long long, long long>, std::pair<long long, long long>>
line_arrangement_splitting(long long a, long long b);

// ACM exactly for ruling-line arrangements with totals 1 <= a, b <= 3.
bool is_acm_q2(const std::vector<CurveClass>& arr);

// chi additivity along the residue sequence: lhs = chi of the log bundle,
// rhs = chi(Omega^1_Q) + sum_i (1 - g_i) = -2 + sum_i (1 - g_i).
struct ResidueCheck {
  long long lhs = 0, rhs = 0;
  bool equal = false;
};
ResidueCheck residue_euler_check(const std::vector<CurveClass>& arr);

// Splitting / Steiner-rank data for hyperplane arrangements in P^n.
struct SplitBundle {
  long long trivial_summands = 0;   // O^(m-1)
  long long twisted_summands = 0;   // O(-1)^(n-m+1)
};
struct TangentTwist {
  long long n = 0;  // T P^n(-1)
};
struct SteinerRanks {
  long long kernel_rank = 0;  // O(-1)^(m-n-1)
  long long middle_rank = 0;  // O^(m-1)
};
using HyperplaneLogBundle = std::variant<SplitBundle, TangentTwist, SteinerRanks>;
HyperplaneLogBundle hyperplane_log_splitting(int n, int m);

// Rank/chi data of the presentation of the logarithmic bundle of m conics on
// the quadric surface.  For 2 <= m <= 5 this is the closed list of
// sequences; for m >= 6 the restricted Steiner shape
// O(-2) + O(-1)^(m-4) -> O^(m-1).  m = 4 without tameness is flagged: the
// bundle is not globally generated and the sequence does not exist.
struct SectionSequence {
  int m = 0;
  bool valid = true;
  std::string note;
  std::vector<std::pair<long long, long long>> kernel;  // line-bundle bidegrees
  std::vector<std::pair<long long, long long>> middle;  // line-bundle part
  bool middle_is_tangent_restriction = false;           // T P^3(-1)|_Q instead
  long long chi_kernel = 0, chi_middle = 0, chi_quotient = 0;
};
SectionSequence q2_section_sequences(int m, bool tame);

// h^q(O_{P^n}(t)).
long long h_pn_line(int n, long long t, int q);
// h^q(T P^n(t)) for q in {0,1}, from the Euler sequence.
long long h_pn_tangent(int n, long long t, int q);
// h^q(O_Q(s,t)) on the quadric surface.
long long h_q2_line(long long s, long long t, int q);

// h^1(TX(-a)) for TX = direct sum of pullbacks of the factor tangent
// bundles, computed factor by factor through the Kunneth formula.  Gates the
// Jacobian-span distinguisher.
struct VanishingReport {
  long long h1 = 0;
  bool vanishes = false;
};
VanishingReport bott_kunneth_h1_tangent(const Shape& shape, const MultiDegree& a);

// h^1 of the restriction of O_Q(twist) to a rational curve of the given
// class (ruling line or conic): h^1(O_{P^1}(d)) = max(0, -d-1) with d the
// restriction degree.  Classes of positive genus raise UnsupportedClassError.
long long ext_dim_q2(const CurveClass& curve, std::pair<long long, long long> twist);

}  // namespace logtor
