#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "common.hpp"
#include "multmap/random_gen.hpp"
#include "multmap/roots.hpp"

using namespace multmap;
using multmap::testing::close;
using multmap::testing::cpoly;

namespace {

Poly<ComplexFloat> from_roots(const std::vector<ComplexFloat>& alpha) {
    Poly<ComplexFloat> f = Poly<ComplexFloat>::constant(ComplexFloat(1.0));
    for (const auto& a : alpha)
        f = f * Poly<ComplexFloat>(std::vector<ComplexFloat>{-a, ComplexFloat(1.0)});
    return f;
}

} // namespace

TEST_CASE("simple quadratic") {
    const auto rs = find_roots(cpoly({-1, 0, 1}));
    REQUIRE(rs.roots.size() == 2);
    CHECK(close(rs.roots[0], ComplexFloat(-1.0), 1e-12));
    CHECK(close(rs.roots[1], ComplexFloat(1.0), 1e-12));
    CHECK(rs.residuals[0] <= 1e-12);
    CHECK(rs.residuals[1] <= 1e-12);
    CHECK(close(rs.min_gap, 2.0, 1e-12));
}

TEST_CASE("cubic with integer roots") {
    const auto rs = find_roots(cpoly({0, 2, -3, 1}));
    REQUIRE(rs.roots.size() == 3);
    CHECK(close(rs.roots[0], ComplexFloat(0.0), 1e-10));
    CHECK(close(rs.roots[1], ComplexFloat(1.0), 1e-10));
    CHECK(close(rs.roots[2], ComplexFloat(2.0), 1e-10));
}

TEST_CASE("eighth roots of unity") {
    std::vector<ComplexFloat> coeffs(9, ComplexFloat(0.0));
    coeffs[0] = ComplexFloat(-1.0);
    coeffs[8] = ComplexFloat(1.0);
    const auto rs = find_roots(Poly<ComplexFloat>(std::move(coeffs)));
    REQUIRE(rs.roots.size() == 8);
    for (const auto& r : rs.roots) CHECK(close(std::abs(r), 1.0, 1e-10));
    CHECK(close(rs.min_gap, 2.0 * std::sin(M_PI / 8.0), 1e-9));
}

TEST_CASE("degree one shortcut") {
    const auto rs = find_roots(cpoly({3, 1}));
    REQUIRE(rs.roots.size() == 1);
    CHECK(rs.roots[0] == ComplexFloat(-3.0));
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(find_roots(cpoly({5})), DomainError);
    CHECK_THROWS_AS(find_roots(cpoly({1, 0, 2})), DomainError); // not monic
    Options bad;
    bad.tol = 0.0;
    CHECK_THROWS_AS(find_roots(cpoly({-1, 0, 1}), bad), DomainError);
}

TEST_CASE("reconstruction from well-separated roots") {
    Rng rng(21);
    for (int t = 0; t < 40; ++t) {
        const int n = 2 + static_cast<int>(rng.below(11)); // degrees 2..12
        const auto alpha = random_separated_points(rng, n, 0.25);
        const auto f = from_roots(alpha);
        const auto rs = find_roots(f);

        std::vector<ComplexFloat> expected = alpha;
        std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
            return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        });
        for (int i = 0; i < n; ++i)
            CHECK(close(rs.roots[static_cast<std::size_t>(i)],
                        expected[static_cast<std::size_t>(i)], 1e-8));

        // re-expand and compare coefficients
        const auto rebuilt = from_roots(rs.roots);
        for (int i = 0; i <= n; ++i) {
            const auto want = f.coeff(i);
            const auto got = rebuilt.coeff(i);
            CHECK(std::abs(want - got) <= 1e-8 * std::max(1.0, std::abs(want)));
        }
    }
}

TEST_CASE("permutation stability of initial guesses") {
    Rng rng(22);
    const auto alpha = random_separated_points(rng, 7, 0.3);
    const auto f = from_roots(alpha);
    const auto base = find_roots(f);

    // rotate and reverse the default circle guesses
    std::vector<ComplexFloat> guesses;
    const double radius = 1.0 + coefficient_scale(f);
    for (int k = 6; k >= 0; --k) {
        const double theta = 2.0 * M_PI * k / 7 + 1.1;
        guesses.emplace_back(radius * std::cos(theta), radius * std::sin(theta));
    }
    const auto shuffled = find_roots(f, {}, &guesses);
    for (std::size_t i = 0; i < base.roots.size(); ++i)
        CHECK(close(base.roots[i], shuffled.roots[i], 1e-10));
}

TEST_CASE("non-convergence carries the best iterate") {
    Options tight;
    tight.max_iter = 2;
    try {
        find_roots(cpoly({-1, 0, 0, 0, 0, 0, 0, 0, 1}), tight);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.best().roots.size() == 8);
        CHECK(e.best().iterations == 2);
        CHECK(e.best().residuals.size() == 8);
    }
}

TEST_CASE("certification") {
    const auto good = find_roots(cpoly({-1, 0, 1}));
    CHECK(certify_simple(good, 1e-6, 1e-6));

    // (x - 1)^2 (x + 1): double root at 1
    const auto f = cpoly({1, -1, -1, 1});
    RootSet rs;
    try {
        rs = find_roots(f);
    } catch (const ConvergenceError& e) {
        rs = e.best();
    }
    CHECK_FALSE(certify_simple(rs, 1e-6, 1e-6));

    const auto trio = find_roots(cpoly({0, 2, -3, 1}));
    CHECK(close(trio.min_gap, 1.0, 1e-9));
    CHECK(certify_simple(trio, 0.5, 1e-6));
    CHECK_THROWS_AS(certify_simple(trio, 0.0, 1e-6), DomainError);
}

TEST_CASE("conjugate pairs order by imaginary part") {
    // x^2 + 1: roots +-i share the real part
    const auto rs = find_roots(cpoly({1, 0, 1}));
    REQUIRE(rs.roots.size() == 2);
    CHECK(close(rs.roots[0], ComplexFloat(0.0, -1.0), 1e-12));
    CHECK(close(rs.roots[1], ComplexFloat(0.0, 1.0), 1e-12));
}
