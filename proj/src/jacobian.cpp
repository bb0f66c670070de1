#include "multmap/jacobian.hpp"

#include <algorithm>
#include <cmath>

namespace multmap {

namespace {

Eigen::MatrixXcd root_jacobian_matrix(std::span<const ComplexFloat> alpha) {
    const int n = static_cast<int>(alpha.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (alpha[static_cast<std::size_t>(i)] == alpha[static_cast<std::size_t>(j)])
                throw ConditioningError("jac_roots: coincident coordinates");

    const std::vector<ComplexFloat> y = m_tilde(alpha);
    Eigen::MatrixXcd d(n, n);
    for (int i = 0; i < n; ++i) {
        ComplexFloat diag(0.0);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const ComplexFloat q = y[static_cast<std::size_t>(i)] /
                                   (alpha[static_cast<std::size_t>(i)] - alpha[static_cast<std::size_t>(j)]);
            d(i, j) = -q;
            diag += q;
        }
        d(i, i) = diag;
    }
    return d;
}

double vector_norm(const std::vector<ComplexFloat>& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

// Coefficient vector of f' seen as a tangent vector: (a_1, 2 a_2, ..., n).
Eigen::VectorXcd derivative_tangent_vector(const Poly<ComplexFloat>& f) {
    const int n = *f.degree();
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n - 1; ++i) v(i) = static_cast<double>(i + 1) * f.coeff(i + 1);
    v(n - 1) = static_cast<double>(n) * f.leading();
    return v;
}

void fill_rank_data(JacobianReport& rep, double rank_tol) {
    auto [rank, sv] = numerical_rank(rep.matrix, rank_tol);
    rep.numerical_rank = rank;
    rep.singular_values = std::move(sv);
    rep.rank_tol = rank_tol;
}

} // namespace

std::vector<ComplexFloat> m_map(const Poly<ComplexFloat>& f, const RootSet& rs) {
    return eval_batch(derivative(f), rs.roots);
}

std::vector<ComplexFloat> m_map(const Poly<ComplexFloat>& f, const Options& options) {
    const RootSet rs = find_roots(f, options);
    if (!certify_simple(rs, options.gap_floor, options.residual_bound * coefficient_scale(f)))
        throw ConditioningError("m_map: root simplicity certification failed (min gap " +
                                std::to_string(rs.min_gap) + ")");
    return m_map(f, rs);
}

std::vector<ComplexFloat> m_tilde(std::span<const ComplexFloat> alpha) {
    const std::size_t n = alpha.size();
    std::vector<ComplexFloat> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        ComplexFloat prod(1.0);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) prod *= alpha[i] - alpha[j];
        out.push_back(prod);
    }
    return out;
}

std::vector<ComplexFloat> mult_map(const Poly<ComplexFloat>& g, const Options& options) {
    if (g.is_zero() || *g.degree() < 2)
        throw DomainError("mult_map: monic polynomial of degree >= 2 required");
    const Poly<ComplexFloat> f = g - Poly<ComplexFloat>::monomial(ComplexFloat(1.0), 1);
    std::vector<ComplexFloat> mult = m_map(f, options);
    for (auto& v : mult) v += ComplexFloat(1.0);
    return mult;
}

JacobianReport jac_coeff(const Poly<ComplexFloat>& f, const RootSet& rs, double rank_tol) {
    if (f.is_zero() || *f.degree() < 1) throw DomainError("jac_coeff: nonconstant f required");
    const int n = *f.degree();
    if (static_cast<int>(rs.roots.size()) != n)
        throw DomainError("jac_coeff: root count does not match the degree");

    const Poly<ComplexFloat> df = derivative(f);
    const Poly<ComplexFloat> ddf = derivative(df);

    JacobianReport rep;
    rep.route = JacobianRoute::coefficient_space;
    rep.matrix.resize(n, n);
    std::vector<ComplexFloat> multipliers;
    multipliers.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const ComplexFloat a = rs.roots[static_cast<std::size_t>(j)];
        const ComplexFloat dfa = df.eval(a);
        if (dfa == ComplexFloat(0.0))
            throw ConditioningError("jac_coeff: f' vanishes at a computed root");
        multipliers.push_back(dfa);
        const ComplexFloat ratio = ddf.eval(a) / dfa;
        ComplexFloat pow_a(1.0); // a^i while processing column i
        rep.matrix(j, 0) = -ratio;
        for (int i = 1; i < n; ++i) {
            const ComplexFloat prev = pow_a; // a^{i-1}
            pow_a *= a;
            rep.matrix(j, i) = static_cast<double>(i) * prev - ratio * pow_a;
        }
    }

    fill_rank_data(rep, rank_tol);
    rep.kernel_residual = (rep.matrix * derivative_tangent_vector(f)).norm();
    rep.hypersurface_residual = hypersurface_residual(multipliers).relative;
    return rep;
}

JacobianReport mult_jacobian(const Poly<ComplexFloat>& g, const Options& options) {
    if (g.is_zero() || *g.degree() < 2)
        throw DomainError("mult_jacobian: monic polynomial of degree >= 2 required");
    const Poly<ComplexFloat> f = g - Poly<ComplexFloat>::monomial(ComplexFloat(1.0), 1);
    const RootSet rs = find_roots(f, options);
    if (!certify_simple(rs, options.gap_floor, options.residual_bound * coefficient_scale(f)))
        throw ConditioningError("mult_jacobian: fixed points are not simple");
    return jac_coeff(f, rs, options.rank_tol);
}

JacobianReport jac_roots(std::span<const ComplexFloat> alpha, double rank_tol) {
    const int n = static_cast<int>(alpha.size());
    if (n < 1) throw DomainError("jac_roots: empty coordinate vector");

    JacobianReport rep;
    rep.route = JacobianRoute::root_space;
    rep.matrix = root_jacobian_matrix(alpha);
    fill_rank_data(rep, rank_tol);
    rep.kernel_residual = (rep.matrix * Eigen::VectorXcd::Ones(n)).norm();
    rep.hypersurface_residual = hypersurface_residual(m_tilde(alpha)).relative;

    if (n >= 2 && n <= 20) {
        const double c = static_cast<double>(rees_constant(n));
        for (int i = 0; i < n; ++i) {
            Eigen::MatrixXcd sub(n - 1, n - 1);
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int col = 0, cc = 0; col < n; ++col) {
                    if (col == i) continue;
                    sub(rr, cc) = rep.matrix(r, col);
                    ++cc;
                }
                ++rr;
            }
            MinorCheck mc;
            mc.index = i + 1;
            mc.value = n == 1 ? ComplexFloat(1.0) : ComplexFloat(sub.determinant());
            ComplexFloat prod(1.0);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                for (int k = j + 1; k < n; ++k) {
                    if (k == i) continue;
                    const ComplexFloat d = alpha[static_cast<std::size_t>(k)] -
                                           alpha[static_cast<std::size_t>(j)];
                    prod *= d * d;
                }
            }
            mc.predicted = c * prod;
            mc.relative_deviation =
                std::abs(mc.value - mc.predicted) / std::max(std::abs(mc.predicted), 1e-300);
            rep.minors.push_back(mc);
        }
    }
    return rep;
}

long long rees_constant(int n) {
    if (n < 2) throw DomainError("rees_constant: n >= 2 required");
    if (n > 20) throw DomainError("rees_constant: (n-1)! exceeds the 64-bit range");
    const long long parity = (static_cast<long long>(n - 1) * (n - 2) / 2) % 2;
    long long fact = 1;
    for (int i = 2; i <= n - 1; ++i) fact *= i;
    return parity ? -fact : fact;
}

std::pair<int, std::vector<double>> numerical_rank(const Eigen::MatrixXcd& m, double rank_tol) {
    if (!(rank_tol > 0.0 && rank_tol < 1.0))
        throw DomainError("numerical_rank: rank_tol must lie in (0, 1)");
    if (!m.allFinite()) throw DomainError("numerical_rank: non-finite entries");
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    std::vector<double> values(sv.data(), sv.data() + sv.size());
    const double smax = values.empty() ? 0.0 : values.front();
    int rank = 0;
    if (smax > 0.0)
        for (double s : values)
            if (s > rank_tol * smax) ++rank;
    return {rank, std::move(values)};
}

HypersurfaceResidual hypersurface_residual(std::span<const ComplexFloat> y) {
    const std::size_t n = y.size();
    if (n == 0) return {ComplexFloat(0.0), 0.0};
    std::vector<ComplexFloat> prefix(n + 1, ComplexFloat(1.0));
    std::vector<ComplexFloat> suffix(n + 1, ComplexFloat(1.0));
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * y[i];
    for (std::size_t i = n; i > 0; --i) suffix[i - 1] = suffix[i] * y[i - 1];
    ComplexFloat raw(0.0);
    double max_term = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const ComplexFloat term = prefix[i] * suffix[i + 1];
        raw += term;
        max_term = std::max(max_term, std::abs(term));
    }
    return {raw, std::abs(raw) / std::max(1.0, max_term)};
}

Eigen::MatrixXcd alpha_sensitivity(const Poly<ComplexFloat>& f, const RootSet& rs) {
    if (f.is_zero() || *f.degree() < 1) throw DomainError("alpha_sensitivity: nonconstant f required");
    const int n = *f.degree();
    if (static_cast<int>(rs.roots.size()) != n)
        throw DomainError("alpha_sensitivity: root count does not match the degree");
    const Poly<ComplexFloat> df = derivative(f);
    Eigen::MatrixXcd s(n, n);
    for (int j = 0; j < n; ++j) {
        const ComplexFloat a = rs.roots[static_cast<std::size_t>(j)];
        const ComplexFloat dfa = df.eval(a);
        if (dfa == ComplexFloat(0.0))
            throw ConditioningError("alpha_sensitivity: f' vanishes at a computed root");
        ComplexFloat pow_a(1.0);
        for (int i = 0; i < n; ++i) {
            s(j, i) = -pow_a / dfa;
            pow_a *= a;
        }
    }
    return s;
}

FiberSolveResult fiber_solve(std::span<const ComplexFloat> y_target,
                             std::span<const ComplexFloat> alpha0,
                             int max_iter, double tol) {
    const int n = static_cast<int>(alpha0.size());
    if (n < 1 || y_target.size() != alpha0.size())
        throw DomainError("fiber_solve: target and start must have the same positive length");
    if (hypersurface_residual(y_target).relative > 1e-6)
        throw DomainError("fiber_solve: target is off the multiplier hypersurface");

    const std::vector<ComplexFloat> y(y_target.begin(), y_target.end());
    const double y_scale = std::max(1.0, vector_norm(y));

    std::vector<ComplexFloat> alpha(alpha0.begin(), alpha0.end());
    ComplexFloat target_sum(0.0);
    for (const auto& a : alpha) target_sum += a;

    auto residual_vec = [&](const std::vector<ComplexFloat>& a) {
        std::vector<ComplexFloat> r = m_tilde(a);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
        return r;
    };
    auto desingularize = [&](std::vector<ComplexFloat>& a) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (a[static_cast<std::size_t>(i)] == a[static_cast<std::size_t>(j)])
                    a[static_cast<std::size_t>(j)] +=
                        ComplexFloat(1e-8, 1e-8) * (1.0 + std::abs(a[static_cast<std::size_t>(j)]));
    };

    FiberSolveResult best;
    best.alpha = alpha;
    best.residual = vector_norm(residual_vec(alpha));

    int it = 0;
    for (; it < max_iter; ++it) {
        const std::vector<ComplexFloat> r = residual_vec(alpha);
        const double rn = vector_norm(r);
        if (rn < best.residual) {
            best.residual = rn;
            best.alpha = alpha;
        }
        if (rn <= tol * y_scale) {
            best.converged = true;
            break;
        }

        desingularize(alpha);
        const Eigen::MatrixXcd d = root_jacobian_matrix(alpha);
        Eigen::VectorXcd rhs(n);
        for (int i = 0; i < n; ++i) rhs(i) = -r[static_cast<std::size_t>(i)];
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(d, Eigen::ComputeThinU | Eigen::ComputeThinV);
        svd.setThreshold(1e-12);
        Eigen::VectorXcd step = svd.solve(rhs);

        // project out the translation direction; the coordinate sum stays put
        ComplexFloat mean(0.0);
        for (int i = 0; i < n; ++i) mean += step(i);
        mean /= static_cast<double>(n);
        for (int i = 0; i < n; ++i) step(i) -= mean;

        bool improved = false;
        double damping = 1.0;
        for (int h = 0; h < 12; ++h) {
            std::vector<ComplexFloat> trial = alpha;
            for (int i = 0; i < n; ++i) trial[static_cast<std::size_t>(i)] += damping * step(i);
            if (vector_norm(residual_vec(trial)) < rn) {
                alpha = std::move(trial);
                improved = true;
                break;
            }
            damping *= 0.5;
        }
        if (!improved) break; // stalled; report the best iterate

        // re-pin the gauge against drift
        ComplexFloat sum(0.0);
        for (const auto& a : alpha) sum += a;
        const ComplexFloat drift = (sum - target_sum) / static_cast<double>(n);
        for (auto& a : alpha) a -= drift;
    }

    const double final_rn = vector_norm(residual_vec(alpha));
    if (final_rn < best.residual) {
        best.residual = final_rn;
        best.alpha = alpha;
    }
    if (best.residual <= tol * y_scale) best.converged = true;
    best.iterations = it;
    return best;
}

} // namespace multmap
