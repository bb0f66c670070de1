#include "multmap/random_gen.hpp"

#include <cmath>

namespace multmap {

Poly<ComplexFloat> random_monic_complex(Rng& rng, int degree) {
    std::vector<ComplexFloat> coeffs;
    coeffs.reserve(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i) coeffs.push_back(rng.complex_box());
    coeffs.emplace_back(1.0);
    return Poly<ComplexFloat>(std::move(coeffs));
}

CertifiedDraw random_certified_monic(Rng& rng, int degree, const Options& options,
                                     int& rejected) {
    for (int tries = 0; tries < 1000; ++tries) {
        Poly<ComplexFloat> f = random_monic_complex(rng, degree);
        RootSet rs;
        try {
            rs = find_roots(f, options);
        } catch (const ConvergenceError&) {
            ++rejected;
            continue;
        }
        if (certify_simple(rs, options.gap_floor, options.residual_bound * coefficient_scale(f)))
            return {std::move(f), std::move(rs)};
        ++rejected;
    }
    throw std::logic_error("random_certified_monic: rejection sampling failed");
}

std::vector<ComplexFloat> random_separated_points(Rng& rng, int count, double min_gap) {
    std::vector<ComplexFloat> pts;
    pts.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(pts.size()) < count) {
        bool placed = false;
        for (int tries = 0; tries < 1000; ++tries) {
            const ComplexFloat p = rng.complex_box();
            bool ok = true;
            for (const auto& q : pts)
                if (std::abs(p - q) < min_gap) {
                    ok = false;
                    break;
                }
            if (ok) {
                pts.push_back(p);
                placed = true;
                break;
            }
        }
        if (!placed) throw std::logic_error("random_separated_points: box too crowded");
    }
    return pts;
}

Poly<Rational> random_monic_rational(Rng& rng, int degree, long long num_bound,
                                     long long den_bound) {
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i)
        coeffs.emplace_back(rng.int_in(-num_bound, num_bound), rng.int_in(1, den_bound));
    coeffs.emplace_back(1);
    return Poly<Rational>(std::move(coeffs));
}

Poly<PrimeFieldElement> random_monic_mod_p(Rng& rng, int degree, std::uint64_t p) {
    std::vector<PrimeFieldElement> coeffs;
    coeffs.reserve(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i) coeffs.emplace_back(rng.below(p), p);
    coeffs.emplace_back(1, p);
    return Poly<PrimeFieldElement>(std::move(coeffs));
}

} // namespace multmap
