#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "multmap/options.hpp"
#include "multmap/poly.hpp"
#include "multmap/roots.hpp"
#include "multmap/scalar_field.hpp"

namespace multmap {

// Deterministic draws: doubles come straight from the top 53 bits of the
// generator, so the stream does not depend on library distribution details.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double symmetric() { return 2.0 * unit() - 1.0; }
    ComplexFloat complex_box() {
        const double re = symmetric();
        return {re, symmetric()};
    }
    std::uint64_t below(std::uint64_t bound) { return gen_() % bound; }
    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 gen_;
};

// Monic with lower coefficients uniform in the [-1,1]^2 box.
Poly<ComplexFloat> random_monic_complex(Rng& rng, int degree);

struct CertifiedDraw {
    Poly<ComplexFloat> f;
    RootSet roots;
};

// Redraws until the roots certify simple; counts rejections.
CertifiedDraw random_certified_monic(Rng& rng, int degree, const Options& options,
                                     int& rejected);

// Points in the box with pairwise distances at least min_gap.
std::vector<ComplexFloat> random_separated_points(Rng& rng, int count, double min_gap);

// Monic with small random rational coefficients.
Poly<Rational> random_monic_rational(Rng& rng, int degree, long long num_bound,
                                     long long den_bound);

Poly<PrimeFieldElement> random_monic_mod_p(Rng& rng, int degree, std::uint64_t p);

// Square-free rejection sampling via gcd(f, f') over an exact field.
template <FieldScalar K, class Draw>
Poly<K> draw_square_free(Draw&& draw) {
    for (int tries = 0; tries < 1000; ++tries) {
        Poly<K> f = draw();
        if (*gcd_monic(f, derivative(f)).degree() == 0) return f;
    }
    throw std::logic_error("draw_square_free: rejection sampling failed");
}

} // namespace multmap
