#include "gfdn/feedback.hpp"

#include "gfdn/rng.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <stdexcept>
#include <string>

namespace gfdn {

namespace {

double orth_defect(const Eigen::MatrixXd& m) {
    return (m.transpose() * m - Eigen::MatrixXd::Identity(m.rows(), m.cols())).norm();
}

} // namespace

double FeedbackMatrix::max_block_defect() const {
    double worst = 0.0;
    for (const auto& m : mixing_blocks) worst = std::max(worst, orth_defect(m));
    return worst;
}

double FeedbackMatrix::coupling_defect() const { return orth_defect(coupling); }

double FeedbackMatrix::assembled_defect() const { return orth_defect(assembled); }

Eigen::MatrixXd skew_from_unconstrained(const Eigen::MatrixXd& W) {
    if (W.rows() != W.cols())
        throw std::invalid_argument("skew_from_unconstrained: matrix must be square");
    Eigen::MatrixXd upper = W.triangularView<Eigen::StrictlyUpper>();
    return upper - upper.transpose();
}

Eigen::MatrixXd build_orthogonal_from_skew(const Eigen::MatrixXd& W) {
    return skew_from_unconstrained(W).exp();
}

FeedbackMatrix assemble_feedback(const Eigen::MatrixXd& coupling,
                                 const std::vector<Eigen::MatrixXd>& mixing_blocks) {
    const int G = static_cast<int>(mixing_blocks.size());
    if (G < 1) throw std::invalid_argument("assemble_feedback: no mixing blocks");
    if (coupling.rows() != G || coupling.cols() != G)
        throw std::invalid_argument("assemble_feedback: coupling must be " + std::to_string(G) +
                                    "x" + std::to_string(G));
    const int Np = static_cast<int>(mixing_blocks[0].rows());
    for (const auto& m : mixing_blocks)
        if (m.rows() != Np || m.cols() != Np)
            throw std::invalid_argument("assemble_feedback: mixing blocks must share one size");

    if (orth_defect(coupling) > 1e-8)
        throw std::invalid_argument("assemble_feedback: coupling matrix is not orthogonal");
    for (const auto& m : mixing_blocks)
        if (orth_defect(m) > 1e-8)
            throw std::invalid_argument("assemble_feedback: mixing block is not orthogonal");

    FeedbackMatrix fb;
    fb.mixing_blocks = mixing_blocks;
    fb.coupling = coupling;
    fb.kind = coupling.isIdentity(1e-14) ? FeedbackKind::block_diagonal : FeedbackKind::coupled;

    const int N = G * Np;
    fb.assembled.setZero(N, N);
    for (int j = 0; j < G; ++j) {
        for (int k = 0; k < G; ++k) {
            if (fb.kind == FeedbackKind::block_diagonal && j != k) continue;
            fb.assembled.block(j * Np, k * Np, Np, Np) =
                coupling(j, k) * mixing_blocks[j] * mixing_blocks[k];
        }
    }
    return fb;
}

FeedbackMatrix assemble_block_diagonal(const std::vector<Eigen::MatrixXd>& mixing_blocks) {
    const int G = static_cast<int>(mixing_blocks.size());
    return assemble_feedback(Eigen::MatrixXd::Identity(G, G), mixing_blocks);
}

Eigen::MatrixXd random_orthogonal(int n, std::uint64_t seed) {
    Rng rng(seed);
    Eigen::MatrixXd W(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) W(i, j) = rng.uniform(-1.0, 1.0);
    return build_orthogonal_from_skew(W);
}

} // namespace gfdn
