#include "multmap/verify_corpus.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "multmap/analysis.hpp"
#include "multmap/jacobian.hpp"
#include "multmap/kernel_space.hpp"
#include "multmap/random_gen.hpp"

namespace multmap {

namespace {

using QPoly = Poly<Rational>;
using CPoly = Poly<ComplexFloat>;

QPoly qpoly(std::initializer_list<long long> coeffs) {
    std::vector<Rational> v;
    for (long long c : coeffs) v.emplace_back(c);
    return QPoly(std::move(v));
}

CPoly cpoly(std::initializer_list<double> coeffs) {
    std::vector<ComplexFloat> v;
    for (double c : coeffs) v.emplace_back(c);
    return CPoly(std::move(v));
}

QPoly x_power_n_minus_1(int n) {
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1, Rational(0));
    v[0] = Rational(-1);
    v.back() = Rational(1);
    return QPoly(std::move(v));
}

CPoly x_power_n_minus_1_c(int n) {
    std::vector<ComplexFloat> v(static_cast<std::size_t>(n) + 1, ComplexFloat(0.0));
    v[0] = ComplexFloat(-1.0);
    v.back() = ComplexFloat(1.0);
    return CPoly(std::move(v));
}

// Quintic family: f = (x + d)(x^2 - (d/2) x + (9/4) d^2)^2 and the cubic
// p = x^3 + 2 d^2 x + (9/8) d^3, for which f''p - f'p' = 5x f.
QPoly quintic_family_f(const Rational& d) {
    const QPoly linear(std::vector<Rational>{d, Rational(1)});
    const QPoly quad(std::vector<Rational>{Rational(9, 4) * d * d, Rational(-1, 2) * d,
                                           Rational(1)});
    return linear * quad * quad;
}

QPoly quintic_family_p(const Rational& d) {
    return QPoly(std::vector<Rational>{Rational(9, 8) * d * d * d, Rational(2) * d * d,
                                       Rational(0), Rational(1)});
}

double max_entry_magnitude(const Eigen::MatrixXcd& m) {
    double best = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            best = std::max(best, std::abs(m(i, j)));
    return best;
}

std::string fmt_double(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

struct ItemRunner {
    std::vector<CorpusItem> results;
    const std::string& filter;

    void add(const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
        if (!filter.empty() && name.find(filter) == std::string::npos) return;
        CorpusItem item;
        item.name = name;
        try {
            auto [ok, detail] = fn();
            item.passed = ok;
            item.detail = std::move(detail);
        } catch (const std::exception& e) {
            item.passed = false;
            item.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(item));
    }
};

} // namespace

std::vector<CorpusItem> run_verify_corpus(const std::string& filter, InjectedFault fault) {
    ItemRunner runner{{}, filter};
    const bool flip_rees = fault == InjectedFault::rees_sign_flip;

    runner.add("rees_constant_values", [&]() -> std::pair<bool, std::string> {
        const bool ok = rees_constant(2) == 1 && rees_constant(3) == -2 &&
                        rees_constant(4) == -6 && rees_constant(5) == 24;
        return {ok, "c(2)=1, c(3)=-2, c(5)=24"};
    });

    runner.add("minor_law_anchors", [&]() -> std::pair<bool, std::string> {
        // n = 2 at (-1, 1): D = [[1,-1],[-1,1]], deleting row/col 2 leaves det 1
        const std::vector<ComplexFloat> a2{{-1.0, 0.0}, {1.0, 0.0}};
        const JacobianReport r2 = jac_roots(a2);
        bool ok = std::abs(r2.matrix(0, 0) - ComplexFloat(1.0)) == 0.0 &&
                  std::abs(r2.matrix(0, 1) + ComplexFloat(1.0)) == 0.0 &&
                  std::abs(r2.minors[1].value - ComplexFloat(1.0)) < 1e-14;
        // n = 3 at (0, 1, 2): frozen D and the minor M_33 = -2 = c * (1-0)^2
        const std::vector<ComplexFloat> a3{{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}};
        const JacobianReport r3 = jac_roots(a3);
        const double frozen[3][3] = {{-3, 2, 1}, {1, 0, -1}, {-1, -2, 3}};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                ok = ok && std::abs(r3.matrix(i, j) - ComplexFloat(frozen[i][j])) < 1e-14;
        const double c3 = flip_rees ? 2.0 : -2.0;
        ok = ok && std::abs(r3.minors[2].value - ComplexFloat(c3)) < 1e-13;
        return {ok, "M_22(-1,1)=1; M_33(0,1,2)=-2 with c(3)=-2"};
    });

    runner.add("minor_law_random_sweep", [&]() -> std::pair<bool, std::string> {
        Rng rng(20250211);
        double worst = 0.0;
        for (int n = 2; n <= 6; ++n) {
            for (int t = 0; t < 8; ++t) {
                const auto alpha = random_separated_points(rng, n, 0.25);
                const JacobianReport rep = jac_roots(alpha);
                for (const auto& mc : rep.minors) {
                    const ComplexFloat predicted = flip_rees ? -mc.predicted : mc.predicted;
                    const double dev = std::abs(mc.value - predicted) /
                                       std::max(std::abs(predicted), 1e-300);
                    worst = std::max(worst, dev);
                }
            }
        }
        return {worst <= 1e-6, "n=2..6, worst relative deviation " + fmt_double(worst)};
    });

    runner.add("hypersurface_identity_sweep", [&]() -> std::pair<bool, std::string> {
        Rng rng(777001);
        double worst = 0.0;
        for (int n = 2; n <= 12; ++n) {
            for (int t = 0; t < 20; ++t) {
                std::vector<ComplexFloat> alpha;
                for (int i = 0; i < n; ++i) alpha.push_back(rng.complex_box());
                worst = std::max(worst, hypersurface_residual(m_tilde(alpha)).relative);
            }
        }
        return {worst <= 1e-9, "n<=12, worst relative residual " + fmt_double(worst)};
    });

    runner.add("hypersurface_negative_control", [&]() -> std::pair<bool, std::string> {
        const std::vector<ComplexFloat> y{{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}};
        const auto hr = hypersurface_residual(y);
        const bool ok = std::abs(hr.raw - ComplexFloat(3.0)) == 0.0 && hr.relative == 3.0;
        return {ok, "(1,1,1) gives raw residual 3"};
    });

    runner.add("row_sum_identity", [&]() -> std::pair<bool, std::string> {
        Rng rng(424242);
        double worst = 0.0;
        for (int n = 2; n <= 12; n += 2) {
            for (int t = 0; t < 10; ++t) {
                const auto alpha = random_separated_points(rng, n, 0.05);
                const JacobianReport rep = jac_roots(alpha);
                const double scale = max_entry_magnitude(rep.matrix);
                for (Eigen::Index i = 0; i < rep.matrix.rows(); ++i)
                    worst = std::max(worst, std::abs(rep.matrix.row(i).sum()) / scale);
            }
        }
        return {worst <= 1e-12, "worst relative row sum " + fmt_double(worst)};
    });

    runner.add("rank_theorem_random", [&]() -> std::pair<bool, std::string> {
        Rng rng(90210);
        Options opts;
        int rejected = 0;
        double worst_ratio = 0.0;
        bool ok = true;
        for (int n = 2; n <= 8; ++n) {
            for (int t = 0; t < 10; ++t) {
                const auto draw = random_certified_monic(rng, n, opts, rejected);
                const JacobianReport rep = jac_coeff(draw.f, draw.roots);
                ok = ok && rep.numerical_rank == n - 1;
                worst_ratio = std::max(worst_ratio,
                                       rep.singular_values.back() / rep.singular_values.front());
            }
        }
        return {ok && worst_ratio <= 1e-8,
                "degrees 2..8, worst sigma_n/sigma_1 " + fmt_double(worst_ratio)};
    });

    runner.add("kernel_vector_random", [&]() -> std::pair<bool, std::string> {
        Rng rng(90210); // same corpus as the rank item
        Options opts;
        int rejected = 0;
        double worst = 0.0;
        for (int n = 2; n <= 8; ++n) {
            for (int t = 0; t < 10; ++t) {
                const auto draw = random_certified_monic(rng, n, opts, rejected);
                const JacobianReport rep = jac_coeff(draw.f, draw.roots);
                Eigen::VectorXcd v(n);
                for (int i = 0; i + 1 < n; ++i)
                    v(i) = static_cast<double>(i + 1) * draw.f.coeff(i + 1);
                v(n - 1) = static_cast<double>(n);
                worst = std::max(worst, rep.kernel_residual /
                                            (rep.singular_values.front() * v.norm()));
            }
        }
        return {worst <= 1e-8, "worst |dM v| / (sigma_1 |v|) = " + fmt_double(worst)};
    });

    runner.add("rank_at_sixth_roots_of_unity", [&]() -> std::pair<bool, std::string> {
        const CPoly f = x_power_n_minus_1_c(6);
        const RootSet rs = find_roots(f);
        const JacobianReport rep = jac_coeff(f, rs);
        std::vector<GaussianRational> coeffs;
        for (int i = 0; i <= 6; ++i)
            coeffs.emplace_back(Rational(i == 0 ? -1 : (i == 6 ? 1 : 0)));
        const RankRelation rr = rank_relation(Poly<GaussianRational>(std::move(coeffs)));
        const bool ok = rep.numerical_rank == 5 && rr.exact_w_dim == 0 &&
                        rr.numeric_rank == 5 && rr.contract_holds;
        return {ok, "x^6 - 1: numerical rank 5, exact w_dim 0"};
    });

    runner.add("w_space_roots_of_unity", [&]() -> std::pair<bool, std::string> {
        for (int n = 2; n <= 12; ++n)
            if (w_space(x_power_n_minus_1(n)).w_dim != 0)
                return {false, "nonzero kernel at n = " + std::to_string(n)};
        return {true, "w_dim(x^n - 1) = 0 for n = 2..12 over Q"};
    });

    runner.add("w_space_cubic_monomial", [&]() -> std::pair<bool, std::string> {
        return {w_space(qpoly({0, 0, 0, 1})).w_dim == 0, "w_dim(x^3) = 0"};
    });

    runner.add("quartic_monomial_square_law", [&]() -> std::pair<bool, std::string> {
        const QPoly f = qpoly({0, 0, 0, 0, 1});
        const auto rep = kernel_report(f);
        const QPoly x2 = qpoly({0, 0, 1});
        bool ok = rep.w_dim == 1 && rep.w_basis[0] == x2;
        ok = ok && rep.thm_checks.applicable && rep.thm_checks.all_pass();
        ok = ok && rep.thm_checks.square_scale && *rep.thm_checks.square_scale == Rational(1);
        ok = ok && rep.thm_checks.quadratic_divisor && *rep.thm_checks.quadratic_divisor == x2;
        ok = ok && bracket(f, x2) == Rational(4) * f; // n(n-3) = 4 at n = 4
        const QPoly dddf = derivative(derivative(derivative(f)));
        ok = ok && dddf * x2 == Rational(6) * derivative(f); // (n-1)(n-2) = 6
        return {ok, "W(x^4) = span{x^2}, f = 1*p^2, both scalar identities exact"};
    });

    runner.add("double_quadratic_kernel", [&]() -> std::pair<bool, std::string> {
        const QPoly p = qpoly({-1, 0, 1});
        const QPoly f = p * p;
        bool ok = bracket(f, p) == Rational(4) * f;
        const auto rep = kernel_report(f);
        ok = ok && rep.w_dim == 1 && rep.w_basis[0] == p;
        ok = ok && rep.thm_checks.all_pass() && rep.thm_checks.square_scale &&
             *rep.thm_checks.square_scale == Rational(1);
        return {ok, "f = (x^2-1)^2: f''p - f'p' = 4f and W = span{x^2 - 1}"};
    });

    runner.add("quintic_family_bracket", [&]() -> std::pair<bool, std::string> {
        for (long long dval : {1, 2, 3}) {
            const Rational d(dval);
            const QPoly f = quintic_family_f(d);
            const QPoly p = quintic_family_p(d);
            // closed-form coefficients of the same family
            const QPoly closed(std::vector<Rational>{
                Rational(81, 16) * d * d * d * d * d, Rational(45, 16) * d * d * d * d,
                Rational(5, 2) * d * d * d, Rational(15, 4) * d * d, Rational(0),
                Rational(1)});
            if (f != closed)
                return {false, "product and closed forms disagree at d = " + std::to_string(dval)};
            const QPoly five_x(std::vector<Rational>{Rational(0), Rational(5)});
            if (bracket(f, p) != five_x * f)
                return {false, "bracket identity fails at d = " + std::to_string(dval)};
        }
        return {true, "f''p - f'p' = 5x f for d = 1, 2, 3"};
    });

    runner.add("quintic_family_membership", [&]() -> std::pair<bool, std::string> {
        const QPoly f = qpoly({162, 45, 20, 15, 0, 1});
        const QPoly p = qpoly({9, 8, 0, 1});
        bool ok = divrem(bracket(f, p), f).remainder.is_zero();
        const auto rep = kernel_report(f);
        // membership of p in the reported span
        std::vector<std::vector<Rational>> basis_vectors;
        for (const auto& q : rep.w_basis) {
            std::vector<Rational> v;
            for (int i = 0; i < rep.n - 1; ++i) v.push_back(q.coeff_or_zero(i, Rational(0)));
            basis_vectors.push_back(std::move(v));
        }
        std::vector<Rational> pv;
        for (int i = 0; i < rep.n - 1; ++i) pv.push_back(p.coeff_or_zero(i, Rational(0)));
        ok = ok && rep.w_dim >= 1 && in_span(basis_vectors, std::move(pv));
        const QPoly ptilde = qpoly({9, -1, 1});
        ok = ok && rep.thm_checks.quadratic_divisor &&
             *rep.thm_checks.quadratic_divisor == ptilde;
        ok = ok && divrem(f, ptilde * ptilde).remainder.is_zero();
        ok = ok && rep.thm_checks.all_pass();
        return {ok, "x^3 + 8x + 9 lies in W(f), witness square (x^2 - x + 9)^2 | f"};
    });

    runner.add("shift_invariance_of_multipliers", [&]() -> std::pair<bool, std::string> {
        Rng rng(5150);
        double worst = 0.0;
        const ComplexFloat eps(1e-3, 5e-4);
        std::vector<CPoly> cases{cpoly({0, 2, -3, 1})};
        cases.push_back(random_monic_complex(rng, 5));
        for (const auto& f : cases) {
            const auto base = m_map(f, Options{});
            const auto shifted = m_map(taylor_shift(f, eps), Options{});
            for (std::size_t i = 0; i < base.size(); ++i)
                worst = std::max(worst, std::abs(base[i] - shifted[i]));
        }
        return {worst <= 1e-8, "max multiplier drift under x -> x + eps: " + fmt_double(worst)};
    });

    runner.add("multiplier_conjugation_invariance", [&]() -> std::pair<bool, std::string> {
        Rng rng(6021023);
        double worst = 0.0;
        const ComplexFloat eps(1e-3, -7e-4);
        std::vector<CPoly> cases{cpoly({0, 0, 1})}; // g = x^2
        cases.push_back(random_monic_complex(rng, 4));
        for (const auto& g : cases) {
            const auto base = mult_map(g, Options{});
            CPoly conj = taylor_shift(g, eps) - CPoly::constant(eps); // g(z + eps) - eps
            const auto moved = mult_map(conj, Options{});
            for (std::size_t i = 0; i < base.size(); ++i)
                worst = std::max(worst, std::abs(base[i] - moved[i]));
        }
        return {worst <= 1e-8, "max multiplier drift under conjugation: " + fmt_double(worst)};
    });

    runner.add("mult_jacobian_consistency", [&]() -> std::pair<bool, std::string> {
        Rng rng(314159);
        Options opts;
        bool ok = true;
        double worst_fd = 0.0;
        for (int n : {3, 4}) {
            // draw g with simple fixed points
            CPoly g;
            CPoly f;
            RootSet rs;
            for (int tries = 0; tries < 100; ++tries) {
                g = random_monic_complex(rng, n);
                f = g - CPoly::monomial(ComplexFloat(1.0), 1);
                rs = find_roots(f, opts);
                if (certify_simple(rs, opts.gap_floor,
                                   opts.residual_bound * coefficient_scale(f)))
                    break;
            }
            const JacobianReport rep = jac_coeff(f, rs, opts.rank_tol);
            ok = ok && rep.numerical_rank == n - 1;

            // central differences of the multiplier vector with respect to the
            // coefficients of g, fixed points tracked by nearest match
            const double h = 1e-6;
            const double scale = max_entry_magnitude(rep.matrix);
            for (int i = 0; i < n; ++i) {
                auto perturbed = [&](double sign) {
                    std::vector<ComplexFloat> c(g.coefficients());
                    c[static_cast<std::size_t>(i)] += sign * h;
                    const CPoly gp(std::move(c));
                    const CPoly fp = gp - CPoly::monomial(ComplexFloat(1.0), 1);
                    const RootSet rp = find_roots(fp, opts);
                    const auto mult = mult_map(gp, opts);
                    // reorder to the base fixed-point order
                    std::vector<ComplexFloat> out(mult.size());
                    for (std::size_t b = 0; b < rs.roots.size(); ++b) {
                        std::size_t nearest = 0;
                        double bestd = 1e300;
                        for (std::size_t r = 0; r < rp.roots.size(); ++r) {
                            const double dist = std::abs(rp.roots[r] - rs.roots[b]);
                            if (dist < bestd) {
                                bestd = dist;
                                nearest = r;
                            }
                        }
                        out[b] = mult[nearest];
                    }
                    return out;
                };
                const auto plus = perturbed(1.0);
                const auto minus = perturbed(-1.0);
                for (int j = 0; j < n; ++j) {
                    const ComplexFloat fd =
                        (plus[static_cast<std::size_t>(j)] - minus[static_cast<std::size_t>(j)]) /
                        (2.0 * h);
                    worst_fd = std::max(worst_fd, std::abs(fd - rep.matrix(j, i)) / scale);
                }
            }
        }
        ok = ok && worst_fd <= 1e-4;
        return {ok, "d(mult) = d(M at g - x), rank n-1; worst FD deviation " +
                        fmt_double(worst_fd)};
    });

    runner.add("char_transfer_prime_fields", [&]() -> std::pair<bool, std::string> {
        Rng rng(127127);
        for (std::uint64_t p : {101ull, 127ull}) {
            for (int n = 2; n <= 12; ++n) {
                for (int t = 0; t < 10; ++t) {
                    const auto f = draw_square_free<PrimeFieldElement>(
                        [&] { return random_monic_mod_p(rng, n, p); });
                    if (w_space(f).w_dim != 0)
                        return {false, "nonzero kernel over F_" + std::to_string(p) +
                                           " at degree " + std::to_string(n)};
                }
            }
        }
        return {true, "square-free over F_101 and F_127, degrees 2..12: w_dim = 0"};
    });

    runner.add("route_consistency_instances", [&]() -> std::pair<bool, std::string> {
        Rng rng(161803);
        Options opts;
        double worst = 0.0;
        bool frozen_ok = true;
        {
            const CPoly f = cpoly({-1, 0, 1});
            const RootSet rs = find_roots(f, opts);
            const JacobianReport rep = jac_coeff(f, rs);
            const double expect[2][2] = {{1, 0}, {-1, 0}};
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    frozen_ok = frozen_ok &&
                                std::abs(rep.matrix(i, j) - ComplexFloat(expect[i][j])) < 1e-12;
        }
        std::vector<CPoly> cases{cpoly({0, 2, -3, 1})};
        int rejected = 0;
        for (int n : {4, 6})
            cases.push_back(random_certified_monic(rng, n, opts, rejected).f);
        for (const auto& f : cases) {
            const RootSet rs = find_roots(f, opts);
            const Eigen::MatrixXcd lhs = jac_coeff(f, rs).matrix;
            const Eigen::MatrixXcd rhs =
                jac_roots(rs.roots).matrix * alpha_sensitivity(f, rs);
            worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff() /
                                        max_entry_magnitude(lhs));
        }
        return {frozen_ok && worst <= 1e-8,
                "chain-rule agreement, worst relative deviation " + fmt_double(worst)};
    });

    runner.add("fiber_roundtrip_small", [&]() -> std::pair<bool, std::string> {
        bool ok = true;
        {
            const std::vector<ComplexFloat> y{{2, 0}, {-1, 0}, {2, 0}};
            const std::vector<ComplexFloat> start{{0.1, 0}, {0.9, 0}, {2.1, 0}};
            const auto res = fiber_solve(y, start);
            ok = ok && res.converged && res.residual <= 1e-8;
        }
        {
            const std::vector<ComplexFloat> y{{-2, 0}, {2, 0}};
            const std::vector<ComplexFloat> start{{0.3, 0}, {0.5, 0}};
            const auto res = fiber_solve(y, start);
            ok = ok && res.converged && res.residual <= 1e-10 &&
                 std::abs(res.alpha[1] - res.alpha[0] - ComplexFloat(2.0)) <= 1e-9;
        }
        {
            Rng rng(99991);
            const auto alpha = random_separated_points(rng, 4, 0.3);
            const auto y = m_tilde(alpha);
            std::vector<ComplexFloat> start = alpha;
            for (auto& s : start) s += 0.05 * rng.complex_box();
            const auto res = fiber_solve(y, start);
            ok = ok && res.converged && res.residual <= 1e-8;
        }
        return {ok, "round trips at n = 2, 3, 4 recover the target multipliers"};
    });

    return std::move(runner.results);
}

} // namespace multmap
