#pragma once

#include <string>
#include <vector>

#include "multmap/options.hpp"
#include "multmap/poly.hpp"
#include "multmap/scalar_field.hpp"

namespace multmap {

struct RootSet {
    // Sorted by (re, im); real parts closer than about 1e-14 count as ties and
    // fall through to the imaginary part. Near-ties may permute under
    // perturbation; min_gap exposes how close the call was.
    std::vector<ComplexFloat> roots;
    std::vector<double> residuals; // |f(root_i)|
    double min_gap = 0.0;
    int iterations = 0;

    friend bool operator==(const RootSet& a, const RootSet& b) {
        return a.roots == b.roots && a.residuals == b.residuals &&
               a.min_gap == b.min_gap && a.iterations == b.iterations;
    }
};

// Thrown when the simultaneous iteration misses the displacement tolerance;
// carries the best iterate with its residuals.
class ConvergenceError : public ConditioningError {
public:
    ConvergenceError(const std::string& msg, RootSet best)
        : ConditioningError(msg), best_(std::move(best)) {}
    const RootSet& best() const { return best_; }

private:
    RootSet best_;
};

// Ehrlich-Aberth simultaneous iteration followed by one Newton polish per
// root. Initial guesses sit on a circle of radius 1 + max|a_i| with an
// irrational angular offset so symmetric inputs like x^n - c do not stall.
RootSet find_roots(const Poly<ComplexFloat>& f, const Options& options = {},
                   const std::vector<ComplexFloat>* initial_guesses = nullptr);

// True iff min_gap >= gap_floor and every residual is at most residual_bound.
bool certify_simple(const RootSet& rs, double gap_floor, double residual_bound);

// Residuals scale with the coefficients; certification bounds are multiplied
// by this.
double coefficient_scale(const Poly<ComplexFloat>& f);

} // namespace multmap
