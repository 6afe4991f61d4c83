#pragma once

#include <Eigen/Dense>

#include <vector>

namespace gfdn {

enum class FeedbackKind { block_diagonal, coupled };

/// Orthogonal feedback matrix assembled from per-group mixing matrices M_k
/// and a group-level coupling matrix Phi. Block (j,k) of the assembled
/// matrix is Phi(j,k) * M_j * M_k; with Phi = I this collapses to the
/// block-diagonal form diag(M_1^2, ..., M_G^2).
struct FeedbackMatrix {
    FeedbackKind kind = FeedbackKind::block_diagonal;
    std::vector<Eigen::MatrixXd> mixing_blocks; // G matrices, each N' x N'
    Eigen::MatrixXd coupling;                   // G x G, identity when block-diagonal
    Eigen::MatrixXd assembled;                  // N x N

    int num_groups() const { return static_cast<int>(mixing_blocks.size()); }
    int block_size() const {
        return mixing_blocks.empty() ? 0 : static_cast<int>(mixing_blocks[0].rows());
    }

    /// Frobenius-norm orthogonality defects, for invariant checks.
    double max_block_defect() const;
    double coupling_defect() const;
    double assembled_defect() const;
};

/// Maps an unconstrained square matrix to an orthogonal one: the strictly
/// upper triangular part of W is antisymmetrized and exponentiated,
/// M = expm(triu(W) - triu(W)^T). Total on square inputs; the result is
/// orthogonal with determinant +1.
Eigen::MatrixXd build_orthogonal_from_skew(const Eigen::MatrixXd& W);

/// Strictly upper-triangular part of W minus its transpose (the skew
/// generator that build_orthogonal_from_skew exponentiates).
Eigen::MatrixXd skew_from_unconstrained(const Eigen::MatrixXd& W);

/// Assembles the full feedback matrix from coupling Phi and mixing blocks.
/// Throws std::invalid_argument on dimension mismatch or if any input is
/// not orthogonal (defect > 1e-8).
FeedbackMatrix assemble_feedback(const Eigen::MatrixXd& coupling,
                                 const std::vector<Eigen::MatrixXd>& mixing_blocks);

/// Block-diagonal assembly (coupling = identity).
FeedbackMatrix assemble_block_diagonal(const std::vector<Eigen::MatrixXd>& mixing_blocks);

/// Random orthogonal matrix via the skew parameterization.
Eigen::MatrixXd random_orthogonal(int n, std::uint64_t seed);

} // namespace gfdn
