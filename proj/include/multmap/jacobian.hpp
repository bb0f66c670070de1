#pragma once

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "multmap/options.hpp"
#include "multmap/poly.hpp"
#include "multmap/roots.hpp"
#include "multmap/scalar_field.hpp"

namespace multmap {

enum class JacobianRoute { coefficient_space, root_space };

struct MinorCheck {
    int index = 0;             // 1-based row/column deleted from D
    ComplexFloat value;        // det of the submatrix
    ComplexFloat predicted;    // c * prod_{j<k, j,k != index} (a_k - a_j)^2
    double relative_deviation = 0.0;

    friend bool operator==(const MinorCheck& a, const MinorCheck& b) {
        return a.index == b.index && a.value == b.value && a.predicted == b.predicted &&
               a.relative_deviation == b.relative_deviation;
    }
};

struct JacobianReport {
    Eigen::MatrixXcd matrix;
    JacobianRoute route = JacobianRoute::coefficient_space;
    std::vector<double> singular_values; // descending
    int numerical_rank = 0;
    double rank_tol = 0.0;
    // |matrix * v| for the route's analytic kernel vector: the coefficient
    // vector of f' in coefficient space, (1,...,1) in root space.
    double kernel_residual = 0.0;
    std::vector<MinorCheck> minors; // populated on the root-space route
    double hypersurface_residual = 0.0; // relative residual of the multiplier vector

    friend bool operator==(const JacobianReport& a, const JacobianReport& b) {
        if (a.matrix.rows() != b.matrix.rows() || a.matrix.cols() != b.matrix.cols())
            return false;
        for (Eigen::Index i = 0; i < a.matrix.rows(); ++i)
            for (Eigen::Index j = 0; j < a.matrix.cols(); ++j)
                if (!(a.matrix(i, j) == b.matrix(i, j))) return false;
        return a.route == b.route && a.singular_values == b.singular_values &&
               a.numerical_rank == b.numerical_rank && a.rank_tol == b.rank_tol &&
               a.kernel_residual == b.kernel_residual && a.minors == b.minors &&
               a.hypersurface_residual == b.hypersurface_residual;
    }
};

struct HypersurfaceResidual {
    ComplexFloat raw;     // sum_i prod_{j != i} y_j
    double relative;      // |raw| / max(1, max_i |prod_{j != i} y_j|)
};

struct FiberSolveResult {
    std::vector<ComplexFloat> alpha;
    double residual = 0.0; // |m_tilde(alpha) - y_target|_2 at the returned point
    bool converged = false;
    int iterations = 0;
};

// f' evaluated at the certified, sorted roots of f.
std::vector<ComplexFloat> m_map(const Poly<ComplexFloat>& f, const Options& options = {});
std::vector<ComplexFloat> m_map(const Poly<ComplexFloat>& f, const RootSet& rs);

// Root-coordinate version: entry i is prod_{j != i} (alpha_i - alpha_j).
// Repeated coordinates simply produce zero entries.
std::vector<ComplexFloat> m_tilde(std::span<const ComplexFloat> alpha);

// Multipliers of the fixed points of z -> g(z): m_map(g - x) + (1,...,1).
std::vector<ComplexFloat> mult_map(const Poly<ComplexFloat>& g, const Options& options = {});

// Jacobian of the multiplier vector with respect to the coefficients a_i:
// column i, row j holds i a_j^{i-1} - f''(a_j) a_j^i / f'(a_j) at root a_j.
JacobianReport jac_coeff(const Poly<ComplexFloat>& f, const RootSet& rs, double rank_tol = 1e-8);

// Jacobian of the multiplier map at g, realized through the identity
// dMult(g) = dM(g - x): the constant shift of the multipliers has zero
// derivative and the coefficient translation g -> g - x has identity Jacobian.
JacobianReport mult_jacobian(const Poly<ComplexFloat>& g, const Options& options = {});

// Jacobian D of the root-coordinate map, with closed-form entries
// d_{ij} = -y_i/(a_i - a_j) off the diagonal and row sums zero. Principal
// minors are checked against the closed-form product prediction.
JacobianReport jac_roots(std::span<const ComplexFloat> alpha, double rank_tol = 1e-8);

// The universal constant in the principal-minor law: (-1)^{(n-1)(n-2)/2} (n-1)!.
long long rees_constant(int n);

// (rank, singular values descending); rank counts values above rank_tol times
// the largest one.
std::pair<int, std::vector<double>> numerical_rank(const Eigen::MatrixXcd& m, double rank_tol);

// Residual of sum_i y_1...y_{i-1} y_{i+1}...y_n, which vanishes identically on
// multiplier vectors.
HypersurfaceResidual hypersurface_residual(std::span<const ComplexFloat> y);

// Sensitivity of the roots to the coefficients: entry (j, i) = -a_j^i / f'(a_j).
Eigen::MatrixXcd alpha_sensitivity(const Poly<ComplexFloat>& f, const RootSet& rs);

// Gauss-Newton on the root-coordinate map towards y_target, with the
// translation gauge pinned: fibers contain the line alpha - t(1,...,1), so the
// coordinate sum is held at its initial value. Best-effort; divergence returns
// the best iterate flagged non-converged.
FiberSolveResult fiber_solve(std::span<const ComplexFloat> y_target,
                             std::span<const ComplexFloat> alpha0,
                             int max_iter = 100, double tol = 1e-10);

} // namespace multmap
