#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multmap/jacobian.hpp"
#include "multmap/kernel_space.hpp"
#include "multmap/options.hpp"
#include "multmap/roots.hpp"

namespace multmap {

// Full pipeline result for one polynomial: certified roots, multipliers, the
// Jacobian by both routes, and the exact/numeric rank relation when exact
// coefficients were given.
struct AnalysisReport {
    std::string input_poly;
    bool monicized = false;
    bool exact_input = false;
    Options options;
    RootSet roots;
    bool certified = false;
    std::vector<ComplexFloat> multipliers;
    JacobianReport jacobian_coefficient;
    JacobianReport jacobian_root;
    std::optional<RankRelation> rank_rel;
    std::vector<std::string> warnings;

    friend bool operator==(const AnalysisReport& a, const AnalysisReport& b) {
        return a.input_poly == b.input_poly && a.monicized == b.monicized &&
               a.exact_input == b.exact_input && a.options == b.options &&
               a.roots == b.roots && a.certified == b.certified &&
               a.multipliers == b.multipliers &&
               a.jacobian_coefficient == b.jacobian_coefficient &&
               a.jacobian_root == b.jacobian_root && a.rank_rel == b.rank_rel &&
               a.warnings == b.warnings;
    }
};

AnalysisReport analyze(const Poly<ComplexFloat>& f,
                       const std::optional<Poly<GaussianRational>>& exact_f,
                       const Options& options, std::string input_echo, bool monicized);

struct RandomTrialsReport {
    int n = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    Options options;
    std::map<int, int> rank_histogram;
    double max_kernel_residual = 0.0;      // |dM v| / (sigma_1 |v|), worst trial
    double max_hypersurface_residual = 0.0; // relative, worst trial
    int rejected_draws = 0;

    friend bool operator==(const RandomTrialsReport& a, const RandomTrialsReport& b) {
        return a.n == b.n && a.trials == b.trials && a.seed == b.seed &&
               a.options == b.options && a.rank_histogram == b.rank_histogram &&
               a.max_kernel_residual == b.max_kernel_residual &&
               a.max_hypersurface_residual == b.max_hypersurface_residual &&
               a.rejected_draws == b.rejected_draws;
    }
};

// Seeded random square-free corpus; deterministic given the seed.
RandomTrialsReport run_random_trials(int degree, int trials, std::uint64_t seed,
                                     const Options& options);

} // namespace multmap
