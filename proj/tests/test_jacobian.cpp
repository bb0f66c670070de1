#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "common.hpp"
#include "multmap/jacobian.hpp"
#include "multmap/random_gen.hpp"
#include "oracles.hpp"

using namespace multmap;
using multmap::testing::close;
using multmap::testing::cpoly;
using multmap::testing::fd_jacobian;
using multmap::testing::matrix_scale;

TEST_CASE("multiplier map worked instances") {
    const auto y2 = m_map(cpoly({-1, 0, 1}));
    REQUIRE(y2.size() == 2);
    CHECK(close(y2[0], ComplexFloat(-2.0), 1e-12));
    CHECK(close(y2[1], ComplexFloat(2.0), 1e-12));

    const auto y3 = m_map(cpoly({0, 2, -3, 1}));
    REQUIRE(y3.size() == 3);
    CHECK(close(y3[0], ComplexFloat(2.0), 1e-10));
    CHECK(close(y3[1], ComplexFloat(-1.0), 1e-10));
    CHECK(close(y3[2], ComplexFloat(2.0), 1e-10));

    CHECK_THROWS_AS(m_map(cpoly({1, 2, 1})), ConditioningError); // (x+1)^2
}

TEST_CASE("multiplier map is shift invariant") {
    Rng rng(31);
    const ComplexFloat eps(1e-3, -4e-4);
    for (int t = 0; t < 5; ++t) {
        int rejected = 0;
        const auto draw = random_certified_monic(rng, 6, Options{}, rejected);
        const auto base = m_map(draw.f, draw.roots);
        const auto shifted = m_map(taylor_shift(draw.f, eps), Options{});
        for (std::size_t i = 0; i < base.size(); ++i)
            CHECK(std::abs(base[i] - shifted[i]) <= 1e-8);
    }
}

TEST_CASE("root-coordinate multiplier map") {
    const std::vector<ComplexFloat> a{{0, 0}, {1, 0}, {2, 0}};
    const auto y = m_tilde(a);
    CHECK(y[0] == ComplexFloat(2.0));
    CHECK(y[1] == ComplexFloat(-1.0));
    CHECK(y[2] == ComplexFloat(2.0));

    const std::vector<ComplexFloat> rep{{0.5, 0}, {0.5, 0}, {2.5, 0}};
    const auto yr = m_tilde(rep);
    CHECK(yr[0] == ComplexFloat(0.0));
    CHECK(yr[1] == ComplexFloat(0.0));
    CHECK(yr[2] == ComplexFloat(4.0)); // (beta - alpha)^2

    const std::vector<ComplexFloat> pair{{-1, 0}, {1, 0}};
    const auto yp = m_tilde(pair);
    CHECK(yp[0] == ComplexFloat(-2.0));
    CHECK(yp[1] == ComplexFloat(2.0));
}

TEST_CASE("fixed-point multipliers") {
    const auto mult = mult_map(cpoly({0, 0, 1})); // g = x^2, fixed points 0 and 1
    REQUIRE(mult.size() == 2);
    CHECK(close(mult[0], ComplexFloat(0.0), 1e-12));
    CHECK(close(mult[1], ComplexFloat(2.0), 1e-12));

    CHECK_THROWS_AS(mult_map(cpoly({0, 1, 1})), ConditioningError); // g - x = x^2
    CHECK_THROWS_AS(mult_map(cpoly({3})), DomainError);
}

TEST_CASE("conjugation leaves multipliers fixed") {
    Rng rng(32);
    const ComplexFloat eps(2e-3, 1e-3);
    const auto g = random_monic_complex(rng, 5);
    const auto base = mult_map(g);
    const auto conj = taylor_shift(g, eps) - Poly<ComplexFloat>::constant(eps);
    const auto moved = mult_map(conj);
    for (std::size_t i = 0; i < base.size(); ++i)
        CHECK(std::abs(base[i] - moved[i]) <= 1e-8);
}

TEST_CASE("multiplier-map Jacobian reduces to the coefficient route") {
    Rng rng(37);
    for (int n : {2, 4, 6}) {
        Poly<ComplexFloat> g;
        while (true) {
            g = random_monic_complex(rng, n);
            try {
                mult_map(g);
                break;
            } catch (const ConditioningError&) {
            }
        }
        const auto via_mult = mult_jacobian(g);
        const auto f = g - Poly<ComplexFloat>::monomial(ComplexFloat(1.0), 1);
        const auto direct = jac_coeff(f, find_roots(f));
        CHECK(via_mult == direct); // bitwise: same pipeline, no extra terms
        CHECK(via_mult.numerical_rank == n - 1);
    }
    CHECK_THROWS_AS(mult_jacobian(cpoly({0, 1, 1})), ConditioningError);
}

TEST_CASE("coefficient-space Jacobian at x^2 - 1") {
    const auto f = cpoly({-1, 0, 1});
    const auto rs = find_roots(f);
    const auto rep = jac_coeff(f, rs);
    CHECK(rep.matrix(0, 0) == ComplexFloat(1.0));
    CHECK(rep.matrix(0, 1) == ComplexFloat(0.0));
    CHECK(rep.matrix(1, 0) == ComplexFloat(-1.0));
    CHECK(rep.matrix(1, 1) == ComplexFloat(0.0));
    CHECK(rep.numerical_rank == 1);
    // kernel vector (a_1, n) = (0, 2) is annihilated exactly
    CHECK(rep.kernel_residual == 0.0);
    CHECK(close(rep.singular_values[0], std::sqrt(2.0), 1e-14));
    CHECK(rep.singular_values[1] <= 1e-15);
}

TEST_CASE("coefficient-space Jacobian matches finite differences") {
    {
        const auto f = cpoly({0, 2, -3, 1});
        const auto rs = find_roots(f);
        const auto rep = jac_coeff(f, rs);
        CHECK(rep.numerical_rank == 2);
        CHECK(rep.singular_values[2] <= 1e-10 * rep.singular_values[0]);
        const auto fd = fd_jacobian(f, rs, 1e-6);
        const double scale = matrix_scale(rep.matrix);
        CHECK((fd - rep.matrix).cwiseAbs().maxCoeff() <= 1e-4 * scale);
    }
    Rng rng(33);
    for (int n : {3, 5}) {
        int rejected = 0;
        const auto draw = random_certified_monic(rng, n, Options{}, rejected);
        const auto rep = jac_coeff(draw.f, draw.roots);
        const auto fd = fd_jacobian(draw.f, draw.roots, 1e-6);
        const double scale = matrix_scale(rep.matrix);
        CHECK((fd - rep.matrix).cwiseAbs().maxCoeff() <= 1e-4 * scale);
    }
}

TEST_CASE("rank at roots of unity") {
    std::vector<ComplexFloat> coeffs(7, ComplexFloat(0.0));
    coeffs[0] = ComplexFloat(-1.0);
    coeffs[6] = ComplexFloat(1.0);
    const Poly<ComplexFloat> f(std::move(coeffs));
    const auto rep = jac_coeff(f, find_roots(f));
    CHECK(rep.numerical_rank == 5);
}

TEST_CASE("root-space Jacobian closed forms") {
    const std::vector<ComplexFloat> a{{0, 0}, {1, 0}, {2, 0}};
    const auto rep = jac_roots(a);
    const double expect[3][3] = {{-3, 2, 1}, {1, 0, -1}, {-1, -2, 3}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(close(rep.matrix(i, j), ComplexFloat(expect[i][j]), 1e-14));
    // D * (1,1,1)^T = 0
    CHECK(rep.kernel_residual <= 1e-14);
    REQUIRE(rep.minors.size() == 3);
    CHECK(close(rep.minors[2].value, ComplexFloat(-2.0), 1e-13));
    CHECK(close(rep.minors[2].predicted, ComplexFloat(-2.0), 1e-13));

    const std::vector<ComplexFloat> pair{{-1, 0}, {1, 0}};
    const auto rep2 = jac_roots(pair);
    CHECK(rep2.matrix(0, 0) == ComplexFloat(1.0));
    CHECK(rep2.matrix(0, 1) == ComplexFloat(-1.0));
    CHECK(rep2.matrix(1, 0) == ComplexFloat(-1.0));
    CHECK(rep2.matrix(1, 1) == ComplexFloat(1.0));
    CHECK(close(rep2.minors[1].value, ComplexFloat(1.0), 1e-14)); // empty product, c = 1

    const std::vector<ComplexFloat> degenerate{{0.5, 0}, {0.5, 0}, {1, 0}};
    CHECK_THROWS_AS(jac_roots(degenerate), ConditioningError);
}

TEST_CASE("root-space Jacobian row sums and minors on random points") {
    Rng rng(34);
    for (int n = 2; n <= 6; ++n) {
        for (int t = 0; t < 10; ++t) {
            const auto alpha = random_separated_points(rng, n, 0.25);
            const auto rep = jac_roots(alpha);
            const double scale = matrix_scale(rep.matrix);
            for (Eigen::Index i = 0; i < rep.matrix.rows(); ++i)
                CHECK(std::abs(rep.matrix.row(i).sum()) <= 1e-12 * scale);
            for (const auto& mc : rep.minors) CHECK(mc.relative_deviation <= 1e-6);
        }
    }
}

TEST_CASE("universal minor constant") {
    CHECK(rees_constant(2) == 1);
    CHECK(rees_constant(3) == -2);
    CHECK(rees_constant(4) == -6);
    CHECK(rees_constant(5) == 24);
    CHECK_THROWS_AS(rees_constant(1), DomainError);
    CHECK_THROWS_AS(rees_constant(21), DomainError);
}

TEST_CASE("numerical rank") {
    CHECK(numerical_rank(Eigen::MatrixXcd::Identity(3, 3), 1e-8).first == 3);
    CHECK(numerical_rank(Eigen::MatrixXcd::Zero(2, 2), 1e-8).first == 0);

    Eigen::MatrixXcd m(2, 2);
    m << ComplexFloat(1.0), ComplexFloat(0.0), ComplexFloat(-1.0), ComplexFloat(0.0);
    const auto [rank, sv] = numerical_rank(m, 1e-8);
    CHECK(rank == 1);
    CHECK(close(sv[0], std::sqrt(2.0), 1e-14));
    CHECK(sv[1] <= 1e-15);

    CHECK_THROWS_AS(numerical_rank(m, 0.0), DomainError);
    CHECK_THROWS_AS(numerical_rank(m, 1.5), DomainError);
    Eigen::MatrixXcd bad(1, 1);
    bad(0, 0) = ComplexFloat(std::nan(""), 0.0);
    CHECK_THROWS_AS(numerical_rank(bad, 1e-8), DomainError);
}

TEST_CASE("hypersurface residual") {
    const std::vector<ComplexFloat> y{{2, 0}, {-1, 0}, {2, 0}};
    const auto h = hypersurface_residual(y);
    CHECK(h.raw == ComplexFloat(0.0));

    const std::vector<ComplexFloat> y2{{-2, 0}, {2, 0}};
    CHECK(hypersurface_residual(y2).raw == ComplexFloat(0.0));

    const std::vector<ComplexFloat> ones{{1, 0}, {1, 0}, {1, 0}};
    const auto hn = hypersurface_residual(ones);
    CHECK(hn.raw == ComplexFloat(3.0));
    CHECK(hn.relative == 3.0);
}

TEST_CASE("root sensitivity and the chain rule") {
    const auto f = cpoly({-1, 0, 1});
    const auto rs = find_roots(f);
    const auto s = alpha_sensitivity(f, rs);
    // -a^i / f'(a): columns at roots (-1, 1) with f' = 2x
    CHECK(close(s(0, 0), ComplexFloat(0.5), 1e-14));
    CHECK(close(s(1, 0), ComplexFloat(-0.5), 1e-14));
    CHECK(close(s(0, 1), ComplexFloat(-0.5), 1e-14));
    CHECK(close(s(1, 1), ComplexFloat(-0.5), 1e-14));

    const auto f3 = cpoly({0, 2, -3, 1});
    const auto rs3 = find_roots(f3);
    const auto s3 = alpha_sensitivity(f3, rs3);
    for (int i = 0; i < 3; ++i) CHECK(close(s3(1, i), ComplexFloat(1.0), 1e-10));

    Rng rng(35);
    for (int n : {2, 4, 7}) {
        int rejected = 0;
        const auto draw = random_certified_monic(rng, n, Options{}, rejected);
        const Eigen::MatrixXcd lhs = jac_coeff(draw.f, draw.roots).matrix;
        const Eigen::MatrixXcd rhs =
            jac_roots(draw.roots.roots).matrix * alpha_sensitivity(draw.f, draw.roots);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-8 * matrix_scale(lhs));
    }
}

TEST_CASE("fiber solver") {
    {
        const std::vector<ComplexFloat> y{{2, 0}, {-1, 0}, {2, 0}};
        const std::vector<ComplexFloat> start{{0.1, 0}, {0.9, 0}, {2.1, 0}};
        const auto res = fiber_solve(y, start);
        CHECK(res.converged);
        CHECK(res.residual <= 1e-8);
        // recovered point sits on the fiber (t, 1 + t, 2 + t)
        const ComplexFloat t = res.alpha[0];
        CHECK(close(res.alpha[1], ComplexFloat(1.0) + t, 1e-7));
        CHECK(close(res.alpha[2], ComplexFloat(2.0) + t, 1e-7));
        // gauge: coordinate sum pinned at its initial value
        CHECK(close(res.alpha[0] + res.alpha[1] + res.alpha[2], ComplexFloat(3.1), 1e-9));
    }
    {
        const std::vector<ComplexFloat> y{{-2, 0}, {2, 0}};
        const std::vector<ComplexFloat> start{{0.4, 0}, {0.9, 0}};
        const auto res = fiber_solve(y, start);
        CHECK(res.converged);
        CHECK(res.residual <= 1e-10);
        CHECK(close(res.alpha[1] - res.alpha[0], ComplexFloat(2.0), 1e-10));
    }
    {
        // round trip from a perturbed start
        Rng rng(36);
        for (int n : {3, 4, 5, 6}) {
            const auto alpha = random_separated_points(rng, n, 0.3);
            const auto y = m_tilde(alpha);
            std::vector<ComplexFloat> start = alpha;
            for (auto& s : start) s += 0.05 * rng.complex_box();
            const auto res = fiber_solve(y, start);
            CHECK(res.converged);
            const auto yy = m_tilde(res.alpha);
            double err = 0.0;
            for (std::size_t i = 0; i < yy.size(); ++i)
                err = std::max(err, std::abs(yy[i] - y[i]));
            CHECK(err <= 1e-8);
        }
    }
    {
        const std::vector<ComplexFloat> off{{1, 0}, {1, 0}, {1, 0}};
        const std::vector<ComplexFloat> start{{0, 0}, {1, 0}, {2, 0}};
        CHECK_THROWS_AS(fiber_solve(off, start), DomainError);
    }
}
