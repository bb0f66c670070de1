#pragma once

namespace multmap {

// Numeric defaults shared by the root finder, certification and rank
// computations. Every field is overridable from the CLI.
struct Options {
    double tol = 1e-13;           // root iteration displacement tolerance, relative to 1 + |root|
    int max_iter = 200;           // simultaneous-iteration cap
    double gap_floor = 1e-8;      // smallest certified pairwise root distance
    double residual_bound = 1e-6; // certification cap on |f(root)|, scaled by the coefficient size
    double rank_tol = 1e-8;       // relative singular-value cutoff for the numerical rank

    friend bool operator==(const Options& a, const Options& b) {
        return a.tol == b.tol && a.max_iter == b.max_iter && a.gap_floor == b.gap_floor &&
               a.residual_bound == b.residual_bound && a.rank_tol == b.rank_tol;
    }
};

} // namespace multmap
