#pragma once

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace grasspack {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct TooFewSubspaces : Error { using Error::Error; };
struct BadDimensions : Error { using Error::Error; };
struct RequiresSmallHalf : Error { using Error::Error; };
struct NotAPlane : Error { using Error::Error; };
struct NotUnit : Error { using Error::Error; };
struct UnsupportedN : Error { using Error::Error; };
struct BadParams : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct OrbitOverflow : Error { using Error::Error; };
struct ClosureOverflow : Error { using Error::Error; };
struct NoRecord : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// ---------------------------------------------------------------------------
// Metrics
// ---------------------------------------------------------------------------

enum class Metric { Chordal, Geodesic, MaxAngle };

std::string to_string(Metric metric);
std::optional<Metric> metric_from_string(const std::string& name);

// Two subspaces are treated as the same span when their chordal distance is
// at most this value. Used for dedup and zero-distance decisions.
inline constexpr double kSameSpanTol = 1e-8;

// ---------------------------------------------------------------------------
// Subspace: an n-plane in R^m held as an orthonormal n x m generator matrix.
// ---------------------------------------------------------------------------

class Subspace {
public:
    // Takes ownership of an already-orthonormal generator. Throws
    // BadDimensions / RankDeficient when the row-orthonormality invariant
    // (gen * gen^T == I within 1e-10 entrywise) does not hold.
    explicit Subspace(Eigen::MatrixXd gen);

    int m() const { return static_cast<int>(gen_.cols()); }
    int n() const { return static_cast<int>(gen_.rows()); }
    const Eigen::MatrixXd& gen() const { return gen_; }

private:
    Eigen::MatrixXd gen_;
};

// ---------------------------------------------------------------------------
// PrincipalAngles
// ---------------------------------------------------------------------------

struct PrincipalAngles {
    Eigen::VectorXd angles;  // ascending, each in [0, pi/2]
    std::optional<Eigen::MatrixXd> left_vectors;   // n x m, rows u_i
    std::optional<Eigen::MatrixXd> right_vectors;  // n x m, rows v_i
};

// ---------------------------------------------------------------------------
// Packing: N subspaces sharing (m, n) plus metric metadata.
// ---------------------------------------------------------------------------

class Packing {
public:
    Packing(Metric metric, std::vector<Subspace> subspaces);

    int m() const { return m_; }
    int n() const { return n_; }
    int size() const { return static_cast<int>(subspaces_.size()); }
    Metric metric() const { return metric_; }
    const std::vector<Subspace>& subspaces() const { return subspaces_; }
    const Subspace& operator[](int i) const { return subspaces_[static_cast<size_t>(i)]; }

private:
    int m_ = 0;
    int n_ = 0;
    Metric metric_ = Metric::Chordal;
    std::vector<Subspace> subspaces_;
};

// ---------------------------------------------------------------------------
// ProjectionPoint: the projection-matrix image of a subspace together with
// its traceless part and its coordinates on the embedding sphere in R^D,
// D = m(m+1)/2 - 1.
// ---------------------------------------------------------------------------

struct ProjectionPoint {
    Eigen::MatrixXd mat;       // m x m symmetric idempotent, trace n
    Eigen::MatrixXd detraced;  // mat - (n/m) I, trace 0
    Eigen::VectorXd embed_vec; // length m(m+1)/2 - 1, |embed_vec| == |detraced|_F
};

}  // namespace grasspack
