#include "multmap/analysis.hpp"

#include <cmath>

#include "multmap/random_gen.hpp"

namespace multmap {

AnalysisReport analyze(const Poly<ComplexFloat>& f,
                       const std::optional<Poly<GaussianRational>>& exact_f,
                       const Options& options, std::string input_echo, bool monicized) {
    if (f.is_zero() || *f.degree() < 2)
        throw DomainError("analyze: polynomial of degree >= 2 required");

    AnalysisReport rep;
    rep.input_poly = std::move(input_echo);
    rep.monicized = monicized;
    rep.exact_input = exact_f.has_value();
    rep.options = options;

    rep.roots = find_roots(f, options); // ConvergenceError propagates as conditioning
    const double residual_cap = options.residual_bound * coefficient_scale(f);
    rep.certified = certify_simple(rep.roots, options.gap_floor, residual_cap);
    if (!rep.certified)
        throw ConditioningError("analyze: root simplicity certification failed (min gap " +
                                std::to_string(rep.roots.min_gap) + ")");

    if (rep.roots.min_gap < 1e3 * options.gap_floor)
        rep.warnings.push_back("roots nearly coincident: min gap " +
                               std::to_string(rep.roots.min_gap));
    double worst_residual = 0.0;
    for (double r : rep.roots.residuals) worst_residual = std::max(worst_residual, r);
    if (worst_residual > residual_cap * 1e-3)
        rep.warnings.push_back("large root residual: " + std::to_string(worst_residual));

    rep.multipliers = m_map(f, rep.roots);
    rep.jacobian_coefficient = jac_coeff(f, rep.roots, options.rank_tol);
    rep.jacobian_root = jac_roots(rep.roots.roots, options.rank_tol);

    if (exact_f) {
        const auto& g = *exact_f;
        if (!g.is_zero() && g.is_monic() && *g.degree() >= 2 &&
            *gcd_monic(g, derivative(g)).degree() == 0) {
            rep.rank_rel = rank_relation(g, options);
        } else {
            rep.warnings.push_back("exact coefficients given but not exactly square-free; "
                                   "rank relation skipped");
        }
    }
    return rep;
}

RandomTrialsReport run_random_trials(int degree, int trials, std::uint64_t seed,
                                     const Options& options) {
    if (degree < 2 || degree > 12)
        throw DomainError("random trials: degree must lie in [2, 12]");
    if (trials < 1) throw DomainError("random trials: at least one trial required");

    RandomTrialsReport rep;
    rep.n = degree;
    rep.trials = trials;
    rep.seed = seed;
    rep.options = options;

    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        const CertifiedDraw draw =
            random_certified_monic(rng, degree, options, rep.rejected_draws);
        const JacobianReport jr = jac_coeff(draw.f, draw.roots, options.rank_tol);
        rep.rank_histogram[jr.numerical_rank] += 1;

        Eigen::VectorXcd v(degree);
        for (int i = 0; i + 1 < degree; ++i)
            v(i) = static_cast<double>(i + 1) * draw.f.coeff(i + 1);
        v(degree - 1) = static_cast<double>(degree);
        const double denom = jr.singular_values.front() * v.norm();
        if (denom > 0)
            rep.max_kernel_residual = std::max(rep.max_kernel_residual,
                                               jr.kernel_residual / denom);
        rep.max_hypersurface_residual =
            std::max(rep.max_hypersurface_residual, jr.hypersurface_residual);
    }
    return rep;
}

} // namespace multmap
