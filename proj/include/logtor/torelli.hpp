#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logtor/errors.hpp"
#include "logtor/matrix.hpp"
#include "logtor/mpoly.hpp"
#include "logtor/quadext.hpp"
#include "logtor/unipoly.hpp"

namespace logtor {

// Canonical fingerprint of a linear subspace of the degree-a coefficient
// space: the reduced row echelon basis in the canonical monomial order.
// Two spans are equal as subspaces exactly when the fingerprints coincide.
template <class K>
struct SpanT {
  Shape shape;
  MultiDegree degree;
  MatrixT<K> basis;  // RREF, zero rows dropped

  std::size_t dim() const { return basis.rows(); }
};
using Span = SpanT<Rational>;
using SpanQ = SpanT<QuadExt>;

// Linear span of the factor-i partial derivatives of f, canonicalized.
// Requires a_i >= 1 (DegreeUnderflow otherwise).
template <class K>
SpanT<K> jacobian_space(const MPolyT<K>& f, std::size_t factor);

// Subspace equality via fingerprint identity; operands must live in the same
// coefficient space.
template <class K>
bool span_equal(const SpanT<K>& s1, const SpanT<K>& s2);

// Image of a span under a coordinate change, re-canonicalized (for
// equivariance checks).
template <class K>
SpanT<K> span_apply_change(const SpanT<K>& s, const FactorChangeT<K>& change);

extern template SpanT<Rational> jacobian_space(const MPolyT<Rational>&, std::size_t);
extern template SpanT<QuadExt> jacobian_space(const MPolyT<QuadExt>&, std::size_t);
extern template bool span_equal(const SpanT<Rational>&, const SpanT<Rational>&);
extern template bool span_equal(const SpanT<QuadExt>&, const SpanT<QuadExt>&);
extern template SpanT<Rational> span_apply_change(const SpanT<Rational>&, const FactorChangeT<Rational>&);
extern template SpanT<QuadExt> span_apply_change(const SpanT<QuadExt>&, const FactorChangeT<QuadExt>&);

// ---------------------------------------------------------------------------
// Jacobian-span distinguisher.

struct DistinguishReport {
  enum class Verdict { DistinctBundles, JacobianIndistinguishable };
  Verdict verdict = Verdict::JacobianIndistinguishable;
  std::optional<std::size_t> witness_factor;  // first factor with J_i(f) != J_i(g)
  // h^1(TX(-a)) gate: when it fails the verdict carries no soundness
  // guarantee and is tagged unverified.
  bool hypothesis_verified = false;
  long long h1 = 0;
};

// Sound one-directional test: DistinctBundles means the logarithmic bundles
// are provably non-isomorphic (under the vanishing gate);
// JacobianIndistinguishable makes no isomorphism claim.
DistinguishReport distinguish(const MPoly& f, const MPoly& g);

// ---------------------------------------------------------------------------
// Split type.

template <class K>
struct SplitFormT {
  std::vector<FactorChangeT<K>> change;  // one change per factor
  K u, v;                                // u x0^a y0^b + v x1^a y1^b, u normalized to 1 by recovery
  int a = 0, b = 0;
};
using SplitForm = SplitFormT<Rational>;

// Split support in the current coordinates: exactly the two monomials
// x0^a y0^b and x1^a y1^b, both with nonzero coefficient.
std::optional<SplitForm> is_split_type_in_coords(const MPoly& f);

// ---------------------------------------------------------------------------
// Smoothness on P^1 x P^1.

struct SmoothnessReport {
  enum class Status { Smooth, Singular, ProbabilisticSmooth };
  Status status = Status::Smooth;
  bool exact = true;
  // Singular witness: projective factor points; second coordinate may be
  // absent when the point exists but is not representable over a single
  // quadratic extension (the verdict itself is still exact).
  std::optional<std::vector<QuadExt>> witness_x, witness_y;
  std::vector<std::uint32_t> primes_used;  // fallback evidence
  std::string note;

  bool is_smooth_evidence() const { return status != Status::Singular; }
};

// Exact chart decision (dehomogenization, bivariate gcds, Sylvester
// elimination, rational/quadratic back-substitution); falls back to deciding
// the existence of common zeros of the partials over the algebraic closure
// of several prime fields when an irreducible factor of degree >= 3 blocks
// the exact path.
SmoothnessReport smooth_on_p1xp1(const MPoly& f,
                                 const std::vector<std::uint32_t>& fallback_primes = {101, 103, 107,
                                                                                      109});

// Whether the four partials of f share a zero on P^1 x P^1 over the
// algebraic closure of F_p (exact modulo p, via dynamic evaluation);
// nullopt when p divides a denominator or kills f.
std::optional<bool> singular_closure_modp(const MPoly& f, std::uint32_t p);

// ---------------------------------------------------------------------------
// Pencil of divisors.

struct PencilMember {
  QuadExt u, v;  // parameter (u : v), member u f + v g, canonicalized
  int multiplicity = 1;
  bool verified = true;  // exact singularity certificate
  std::string note;
};

struct PencilReport {
  std::vector<PencilMember> members;
  // irreducible-over-Q leftover factors of the eliminant (degree >= 3),
  // reported symbolically in the parameter t = v/u
  std::vector<UniPoly> unresolved_factors;
  // every member of the pencil is singular (identically vanishing
  // discriminant); members then list the Jacobian-rank-drop parameters
  bool family_singular = false;
};

// Singular members of the pencil {u f + v g}.  Bidegree (1,1) uses the exact
// determinant of the bilinear pencil (true multiplicities); higher bidegrees
// eliminate the four partials across charts by binary-form resultants and
// verify every resolved candidate exactly.
PencilReport pencil_singular_members(const MPoly& f, const MPoly& g);

// ---------------------------------------------------------------------------
// Split normal-form recovery.

struct SplitRecovery {
  // composite coordinate change (one per factor): applying it to the inputs
  // sends both to split form
  std::vector<FactorChangeT<QuadExt>> change;
  QuadExt v_f;     // f ~ x0^a y0^b + v_f x1^a y1^b after the change
  QuadExt v_g;     // g ~ x0^a y0^b + v_g x1^a y1^b
  QuadExt lambda;  // v_g / v_f, defined up to lambda <-> 1/lambda
  bool rational = true;
};

// Constructive recovery of the split normal form of a pair with equal
// Jacobian spans: finds a rank-drop member of the pencil, normalizes it to
// x0^a y0^b by two coordinate changes, aligns f by a triangular change and
// reads off lambda.  Returns nullopt when the pair carries no split
// structure or no rank-drop member is resolvable over a single quadratic
// extension.
std::optional<SplitRecovery> recover_split_normal_form(const MPoly& f, const MPoly& g);

// ---------------------------------------------------------------------------
// Restriction sampling.

struct RestrictTrial {
  std::vector<std::vector<Rational>> points;  // one point per restricted factor
  bool spans_equal = false;
  bool proportional = false;
};

struct RestrictReport {
  std::size_t kept_factor = 0;
  std::vector<RestrictTrial> trials;
  std::size_t equal_count = 0;
  std::size_t proportional_count = 0;
};

// Restricts f and g to random slices through all factors but the first and
// compares the single-factor Jacobian spans and the restricted divisors.
// Deterministic for a fixed seed.
RestrictReport restrict_and_compare(const MPoly& f, const MPoly& g, std::size_t trials,
                                    std::uint64_t seed);

// Swap the two factors of a polynomial on P^1 x P^1.
template <class K>
MPolyT<K> transpose_factors(const MPolyT<K>& f);

}  // namespace logtor
