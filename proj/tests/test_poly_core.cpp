#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common.hpp"
#include "multmap/poly.hpp"
#include "multmap/random_gen.hpp"

using namespace multmap;
using multmap::testing::cpoly;
using multmap::testing::fppoly;
using multmap::testing::qpoly;

namespace {

Poly<Rational> random_qpoly(Rng& rng, int max_deg) {
    std::vector<Rational> v;
    const int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg) + 1));
    for (int i = 0; i <= deg; ++i) v.emplace_back(rng.int_in(-8, 8), rng.int_in(1, 4));
    return Poly<Rational>(std::move(v));
}

} // namespace

TEST_CASE("degree bookkeeping") {
    CHECK_FALSE(qpoly({}).degree().has_value());
    CHECK_FALSE(qpoly({0, 0}).degree().has_value()); // trailing zeros trimmed
    CHECK(qpoly({5}).degree() == 0);
    CHECK(qpoly({1, 0, -2, 0, 1}).degree() == 4);
    // minus-infinity marker sorts below every real degree
    CHECK(qpoly({}).degree() < qpoly({5}).degree());
}

TEST_CASE("derivative examples") {
    CHECK(derivative(qpoly({1, 0, -2, 0, 1})) == qpoly({0, -4, 0, 4}));
    CHECK(derivative(qpoly({5})).is_zero());
    // quintic family instance: x^5 + 15x^3 + 20x^2 + 45x + 162
    CHECK(derivative(qpoly({162, 45, 20, 15, 0, 1})) == qpoly({45, 40, 45, 0, 5}));
}

TEST_CASE("derivative is linear and Leibniz") {
    Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        const auto f = random_qpoly(rng, 7);
        const auto g = random_qpoly(rng, 7);
        CHECK(derivative(f + g) == derivative(f) + derivative(g));
        CHECK(derivative(f * g) == derivative(f) * g + f * derivative(g));
    }
}

TEST_CASE("derivative reduces multipliers in characteristic p") {
    // d/dx x^7 = 7 x^6 = 0 over F_7
    const auto f = fppoly({0, 0, 0, 0, 0, 0, 0, 1}, 7);
    CHECK(derivative(f).is_zero());
}

TEST_CASE("divrem examples") {
    {
        const auto [q, r] = divrem(qpoly({1, 0, -2, 0, 1}), qpoly({-1, 0, 1}));
        CHECK(q == qpoly({-1, 0, 1}));
        CHECK(r.is_zero());
    }
    {
        const auto [q, r] = divrem(qpoly({0, 0, 0, 1}), qpoly({0, 0, 1}));
        CHECK(q == qpoly({0, 1}));
        CHECK(r.is_zero());
    }
    {
        const auto [q, r] = divrem(qpoly({1, 0, 0, 1}), qpoly({-1, 1}));
        CHECK(q == qpoly({1, 1, 1}));
        CHECK(r == qpoly({2}));
    }
    CHECK_THROWS_AS(divrem(qpoly({1, 1}), qpoly({})), DomainError);
}

TEST_CASE("divrem round-trip property") {
    Rng rng(12);
    for (int t = 0; t < 200; ++t) {
        const auto a = random_qpoly(rng, 9);
        auto b = random_qpoly(rng, 5);
        if (b.is_zero()) b = qpoly({1, 1});
        const auto [q, r] = divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
    // and over a prime field
    for (int t = 0; t < 100; ++t) {
        const auto a = random_monic_mod_p(rng, 8, 101);
        const auto b = random_monic_mod_p(rng, 3, 101);
        const auto [q, r] = divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd examples") {
    CHECK(gcd_monic(qpoly({1, 0, -2, 0, 1}), qpoly({0, -4, 0, 4})) == qpoly({-1, 0, 1}));
    CHECK(gcd_monic(qpoly({0, -1, 0, 1}), qpoly({-1, 0, 3})) == qpoly({1}));
    CHECK(gcd_monic(qpoly({0, 0, 0, 0, 1}), qpoly({0, 0, 0, 4})) == qpoly({0, 0, 0, 1}));
    CHECK_THROWS_AS(gcd_monic(cpoly({1, 1}), cpoly({1})), DomainError);
    CHECK_THROWS_AS(gcd_monic(qpoly({}), qpoly({})), DomainError);
    CHECK(gcd_monic(qpoly({}), qpoly({0, 2})) == qpoly({0, 1}));
}

TEST_CASE("gcd divides both inputs") {
    Rng rng(13);
    for (int t = 0; t < 100; ++t) {
        auto a = random_qpoly(rng, 6);
        auto b = random_qpoly(rng, 6);
        if (a.is_zero()) a = qpoly({1});
        if (b.is_zero()) b = qpoly({1});
        const auto common = random_qpoly(rng, 3);
        if (!common.is_zero()) {
            a = a * common;
            b = b * common;
        }
        const auto g = gcd_monic(a, b);
        CHECK(divrem(a, g).remainder.is_zero());
        CHECK(divrem(b, g).remainder.is_zero());
        if (!common.is_zero()) CHECK(divrem(g, common).remainder.is_zero());
    }
}

TEST_CASE("yun square-free decomposition") {
    {
        const auto factors = yun_squarefree(qpoly({1, 0, -2, 0, 1}));
        REQUIRE(factors.size() == 1);
        CHECK(factors[0].factor == qpoly({-1, 0, 1}));
        CHECK(factors[0].multiplicity == 2);
    }
    {
        const auto factors = yun_squarefree(qpoly({0, -1, 0, 1}));
        REQUIRE(factors.size() == 1);
        CHECK(factors[0].factor == qpoly({0, -1, 0, 1}));
        CHECK(factors[0].multiplicity == 1);
    }
    {
        // (x + 2)(x^2 - x + 9)^2 expanded
        const auto f = qpoly({2, 1}) * qpoly({9, -1, 1}) * qpoly({9, -1, 1});
        const auto factors = yun_squarefree(f);
        REQUIRE(factors.size() == 2);
        CHECK(factors[0].factor == qpoly({2, 1}));
        CHECK(factors[0].multiplicity == 1);
        CHECK(factors[1].factor == qpoly({9, -1, 1}));
        CHECK(factors[1].multiplicity == 2);
    }
}

TEST_CASE("yun reconstruction property") {
    Rng rng(14);
    for (int t = 0; t < 60; ++t) {
        // build f as a product of random monic factors with multiplicities
        Poly<Rational> f = qpoly({1});
        const int parts = 1 + static_cast<int>(rng.below(3));
        for (int i = 0; i < parts; ++i) {
            std::vector<Rational> v;
            const int deg = 1 + static_cast<int>(rng.below(2));
            for (int k = 0; k < deg; ++k) v.emplace_back(rng.int_in(-4, 4));
            v.emplace_back(1);
            const Poly<Rational> factor(std::move(v));
            const int mult = 1 + static_cast<int>(rng.below(3));
            f = f * poly_pow(factor, mult);
        }
        if (*f.degree() < 1) continue;
        Poly<Rational> rebuilt = qpoly({1});
        for (const auto& sf : yun_squarefree(f))
            rebuilt = rebuilt * poly_pow(sf.factor, sf.multiplicity);
        CHECK(rebuilt == monicize(f));
        // factors are pairwise coprime and square-free
        const auto factors = yun_squarefree(f);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            CHECK(*gcd_monic(factors[i].factor, derivative(factors[i].factor)).degree() == 0);
            for (std::size_t j = i + 1; j < factors.size(); ++j)
                CHECK(*gcd_monic(factors[i].factor, factors[j].factor).degree() == 0);
        }
    }
}

TEST_CASE("yun characteristic guard") {
    // deg 5 over F_5: guard must fire
    CHECK_THROWS_AS(yun_squarefree(fppoly({0, 0, 0, 0, 0, 1}, 5)), DomainError);
    // deg 4 over F_101 is fine
    const auto factors = yun_squarefree(fppoly({0, 0, 0, 0, 1}, 101));
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].multiplicity == 4);
}

TEST_CASE("bracket worked identities") {
    // f''p - f'p' = 4 f for f = p^2, p quadratic
    CHECK(bracket(qpoly({0, 0, 0, 0, 1}), qpoly({0, 0, 1})) == qpoly({0, 0, 0, 0, 4}));
    const auto p = qpoly({-1, 0, 1});
    const auto f = p * p;
    CHECK(bracket(f, p) == Rational(4) * f);
    // quintic family at d = 2: f''p - f'p' = 5x f
    const auto f5 = qpoly({162, 45, 20, 15, 0, 1});
    const auto p5 = qpoly({9, 8, 0, 1});
    CHECK(bracket(f5, p5) == qpoly({0, 5}) * f5);
}

TEST_CASE("bracket degree and leading-coefficient law") {
    Rng rng(15);
    for (int t = 0; t < 150; ++t) {
        const int n = 2 + static_cast<int>(rng.below(9));
        const int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1))); // m <= n-2
        std::vector<Rational> fc, pc;
        for (int i = 0; i < n; ++i) fc.emplace_back(rng.int_in(-6, 6), rng.int_in(1, 3));
        fc.emplace_back(1);
        for (int i = 0; i < m; ++i) pc.emplace_back(rng.int_in(-6, 6), rng.int_in(1, 3));
        pc.emplace_back(1);
        const Poly<Rational> f(std::move(fc));
        const Poly<Rational> p(std::move(pc));
        const auto r = bracket(f, p);
        REQUIRE(r.degree().has_value());
        CHECK(*r.degree() == n - 2 + m);
        CHECK(r.leading() == Rational(static_cast<long long>(n) * (n - 1 - m)));
    }
}

TEST_CASE("batch evaluation") {
    const auto f = cpoly({2, -6, 3});
    const std::vector<ComplexFloat> pts{{0, 0}, {1, 0}, {2, 0}};
    const auto vals = eval_batch(f, pts);
    CHECK(vals[0] == ComplexFloat(2.0));
    CHECK(vals[1] == ComplexFloat(-1.0));
    CHECK(vals[2] == ComplexFloat(2.0));

    const auto g = cpoly({-1, 0, 1});
    const auto gv = eval_batch(g, {{-1, 0}, {1, 0}});
    CHECK(gv[0] == ComplexFloat(0.0));
    CHECK(gv[1] == ComplexFloat(0.0));

    CHECK(eval_batch(cpoly({7}), {ComplexFloat(3.0, 1.0)})[0] == ComplexFloat(7.0));
}

TEST_CASE("taylor shift") {
    Rng rng(16);
    for (int t = 0; t < 50; ++t) {
        const auto f = random_qpoly(rng, 6);
        const Rational eps(rng.int_in(-3, 3), rng.int_in(1, 3));
        const auto g = taylor_shift(f, eps);
        // evaluation identity g(x) = f(x + eps) at sample points
        for (long long x : {-2, 0, 1, 5})
            CHECK(g.eval(Rational(x)) == f.eval(Rational(x) + eps));
        // monic inputs stay monic
        if (!f.is_zero()) CHECK(g.degree() == f.degree());
    }
}

TEST_CASE("poly parse and print round-trip") {
    const auto parse_q = [](std::string_view t) { return parse_rational(t); };
    const auto fmt = [](const Rational& x) { return x.str(); };
    const auto f = parse_poly<Rational>("1,0,-2,0,1", parse_q);
    CHECK(f == qpoly({1, 0, -2, 0, 1}));
    CHECK(poly_csv(f, fmt) == "1,0,-2,0,1");
    CHECK(poly_pretty(f, fmt) == "x^4 - 2*x^2 + 1");
    CHECK_THROWS_AS(parse_poly<Rational>("1,,2", parse_q), ParseError);
    Rng rng(17);
    for (int t = 0; t < 50; ++t) {
        const auto g = random_qpoly(rng, 8);
        if (g.is_zero()) continue;
        CHECK(parse_poly<Rational>(poly_csv(g, fmt), parse_q) == g);
    }
}
