#include "multmap/roots.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>

namespace multmap {

namespace {

// Collapses real parts onto a 1e-14 grid so the imaginary part decides ties;
// the derived key keeps the comparator a strict weak ordering.
double tie_grid(double x) { return std::nearbyint(x * 1e14) * 1e-14; }

bool lex_root_less(const ComplexFloat& a, const ComplexFloat& b) {
    const double ga = tie_grid(a.real());
    const double gb = tie_grid(b.real());
    if (ga != gb) return ga < gb;
    if (a.imag() != b.imag()) return a.imag() < b.imag();
    return a.real() < b.real();
}

double min_pairwise_gap(const std::vector<ComplexFloat>& z) {
    if (z.size() < 2) return DBL_MAX;
    double best = DBL_MAX;
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j)
            best = std::min(best, std::abs(z[i] - z[j]));
    return best;
}

RootSet package(const Poly<ComplexFloat>& f, std::vector<ComplexFloat> z, int iterations) {
    std::sort(z.begin(), z.end(), lex_root_less);
    RootSet rs;
    rs.residuals.reserve(z.size());
    for (const auto& r : z) rs.residuals.push_back(std::abs(f.eval(r)));
    rs.min_gap = min_pairwise_gap(z);
    rs.roots = std::move(z);
    rs.iterations = iterations;
    return rs;
}

} // namespace

double coefficient_scale(const Poly<ComplexFloat>& f) {
    double m = 1.0;
    for (const auto& c : f.coefficients()) m = std::max(m, std::abs(c));
    return m;
}

RootSet find_roots(const Poly<ComplexFloat>& f, const Options& options,
                   const std::vector<ComplexFloat>* initial_guesses) {
    if (f.is_zero() || *f.degree() < 1)
        throw DomainError("find_roots: polynomial of degree >= 1 required");
    if (!(options.tol > 0)) throw DomainError("find_roots: tol must be positive");
    for (const auto& c : f.coefficients())
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw DomainError("find_roots: non-finite coefficient");

    Poly<ComplexFloat> g = f;
    if (std::abs(f.leading() - ComplexFloat(1.0)) > 1e-9)
        throw DomainError("find_roots: monic polynomial required");
    if (!(f.leading() == ComplexFloat(1.0))) g = monicize(f);

    const int n = *g.degree();
    if (n == 1) return package(g, {-g.coeff(0)}, 0);

    double radius = 0.0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(g.coeff(i)));
    radius += 1.0;

    std::vector<ComplexFloat> z;
    if (initial_guesses) {
        if (static_cast<int>(initial_guesses->size()) != n)
            throw DomainError("find_roots: wrong number of initial guesses");
        z = *initial_guesses;
    } else {
        z.reserve(static_cast<std::size_t>(n));
        constexpr double offset = 0.61803398874989479; // radians, irrational
        for (int k = 0; k < n; ++k) {
            const double theta = 2.0 * M_PI * k / n + offset;
            z.emplace_back(radius * std::cos(theta), radius * std::sin(theta));
        }
    }

    const Poly<ComplexFloat> dg = derivative(g);
    int iterations = 0;
    bool converged = false;
    while (iterations < options.max_iter) {
        ++iterations;
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            const ComplexFloat fz = g.eval(z[static_cast<std::size_t>(i)]);
            const ComplexFloat fpz = dg.eval(z[static_cast<std::size_t>(i)]);
            if (fpz == ComplexFloat(0.0)) {
                z[static_cast<std::size_t>(i)] += ComplexFloat(1e-8 * radius, 1e-8 * radius);
                worst = 1.0;
                continue;
            }
            const ComplexFloat w = fz / fpz;
            ComplexFloat repulsion(0.0);
            bool collided = false;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const ComplexFloat d = z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
                if (d == ComplexFloat(0.0)) {
                    collided = true;
                    break;
                }
                repulsion += ComplexFloat(1.0) / d;
            }
            if (collided) {
                z[static_cast<std::size_t>(i)] += ComplexFloat(1e-8 * radius, -1e-8 * radius);
                worst = 1.0;
                continue;
            }
            const ComplexFloat denom = ComplexFloat(1.0) - w * repulsion;
            const ComplexFloat dz = denom == ComplexFloat(0.0) ? w : w / denom;
            z[static_cast<std::size_t>(i)] -= dz;
            worst = std::max(worst, std::abs(dz) / (1.0 + std::abs(z[static_cast<std::size_t>(i)])));
        }
        if (worst <= options.tol) {
            converged = true;
            break;
        }
        for (const auto& r : z)
            if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
                throw ConvergenceError("find_roots: iteration diverged to non-finite values",
                                       RootSet{});
    }

    if (!converged)
        throw ConvergenceError("find_roots: no convergence within " +
                                   std::to_string(options.max_iter) + " iterations",
                               package(g, z, iterations));

    for (auto& r : z) {
        const ComplexFloat fpz = dg.eval(r);
        if (!(fpz == ComplexFloat(0.0))) r -= g.eval(r) / fpz;
    }
    return package(g, std::move(z), iterations);
}

bool certify_simple(const RootSet& rs, double gap_floor, double residual_bound) {
    if (!(gap_floor > 0)) throw DomainError("certify_simple: gap_floor must be positive");
    if (rs.min_gap < gap_floor) return false;
    for (double r : rs.residuals)
        if (!(r <= residual_bound)) return false;
    return true;
}

} // namespace multmap
