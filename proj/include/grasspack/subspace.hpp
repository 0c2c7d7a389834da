#pragma once

#include "grasspack/types.hpp"

#include <cstdint>
#include <random>
#include <utility>

namespace grasspack {

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

// Orthonormalizes the rows of a full-row-rank matrix, preserving the row
// space. Throws RankDeficient when the smallest singular value is below
// 1e-12 times the largest.
Subspace orthonormalize(const Eigen::MatrixXd& raw);

// Orthogonal complement (requires n < m).
Subspace complement(const Subspace& subspace);

// Deterministic Gaussian sampler. std::normal_distribution is
// implementation-defined, so the Box-Muller transform is spelled out.
class GaussianRng {
public:
    explicit GaussianRng(std::uint64_t seed) : engine_(seed) {}
    double normal();
    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Invariant (Haar) sample from G(m, n): i.i.d. standard normal entries,
// then orthonormalize.
Subspace random_subspace(int m, int n, GaussianRng& rng);

// ---------------------------------------------------------------------------
// Angles and metrics
// ---------------------------------------------------------------------------

// Principal angles as arccosines of the singular values of P.gen * Q.gen^T,
// clamped into [0, 1]; ascending. Optionally also the principal vector pairs.
PrincipalAngles principal_angles(const Subspace& p, const Subspace& q,
                                 bool with_vectors = false);

// d_g = sqrt(sum theta_i^2), d_c = sqrt(sum sin^2 theta_i), d_m = max theta_i.
// Exactly symmetric in (p, q): inputs are ordered canonically before any
// floating-point work.
double distance(const Subspace& p, const Subspace& q, Metric metric);

bool same_span(const Subspace& p, const Subspace& q);

// Squared chordal distance in the differentiable trace form
// n - trace(A^T A B^T B) = n - |A B^T|_F^2, valid for orthonormal generators
// and extendable to unconstrained rows (used by the optimizer gradients).
double chordal_sq_trace_form(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

// ---------------------------------------------------------------------------
// Projection embedding
// ---------------------------------------------------------------------------

// mat = gen^T gen; detraced = mat - (n/m) I. embed_vec packs the detraced
// matrix into R^(m(m+1)/2 - 1): first the diagonal expressed in an
// orthonormal basis of the zero-sum hyperplane (m-1 coordinates), then the
// off-diagonals (i < j) row-major scaled by sqrt(2). The map is linear,
// bijective on traceless symmetric matrices and norm-preserving, so
// |embed(P) - embed(Q)| = |P_detraced - Q_detraced|_F = sqrt(2) d_c(P, Q).
ProjectionPoint projection(const Subspace& subspace);

// sqrt(0.5 |P - Q|_F^2) over projection matrices; equals the chordal
// distance within 1e-10.
double chordal_via_projection(const Subspace& p, const Subspace& q);

// ---------------------------------------------------------------------------
// Packing-level queries
// ---------------------------------------------------------------------------

struct MinDistance {
    double value = 0.0;
    int i = 0;
    int j = 0;  // i < j, lexicographically smallest minimizing pair
};

MinDistance min_distance(const Packing& packing, Metric metric);

// Smallest dimension in which the chordal distance matrix is realizable as a
// Euclidean point set: rank of the double-centered squared-distance Gram
// matrix (singular values > 1e-8 * largest).
int embedding_dimension(const Packing& packing);

// ---------------------------------------------------------------------------
// Canonical pair form
// ---------------------------------------------------------------------------

// Rotation R carrying (P, Q) to the canonical generator shapes
//   P: [I_n | 0]
//   Q: [diag(cos theta) | diag(sin theta) | 0]
// Requires n <= m/2 (RequiresSmallHalf otherwise). p_canonical/q_canonical
// hold those exact shapes; their spans agree with P*R and Q*R within 1e-8.
struct CanonicalPair {
    Eigen::MatrixXd rotation;  // m x m orthogonal
    PrincipalAngles angles;
    Subspace p_canonical;
    Subspace q_canonical;
};

CanonicalPair canonical_pair(const Subspace& p, const Subspace& q);

}  // namespace grasspack
