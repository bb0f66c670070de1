#pragma once

#include <cmath>
#include <initializer_list>
#include <vector>

#include "multmap/poly.hpp"
#include "multmap/scalar_field.hpp"

namespace multmap::testing {

inline Poly<Rational> qpoly(std::initializer_list<long long> coeffs) {
    std::vector<Rational> v;
    for (long long c : coeffs) v.emplace_back(c);
    return Poly<Rational>(std::move(v));
}

inline Poly<GaussianRational> gpoly(std::initializer_list<long long> coeffs) {
    std::vector<GaussianRational> v;
    for (long long c : coeffs) v.emplace_back(Rational(c));
    return Poly<GaussianRational>(std::move(v));
}

inline Poly<ComplexFloat> cpoly(std::initializer_list<double> coeffs) {
    std::vector<ComplexFloat> v;
    for (double c : coeffs) v.emplace_back(c);
    return Poly<ComplexFloat>(std::move(v));
}

inline Poly<PrimeFieldElement> fppoly(std::initializer_list<long long> coeffs,
                                      std::uint64_t p) {
    std::vector<PrimeFieldElement> v;
    for (long long c : coeffs) v.push_back(PrimeFieldElement::from_int(c, p));
    return Poly<PrimeFieldElement>(std::move(v));
}

inline bool close(const ComplexFloat& a, const ComplexFloat& b, double tol) {
    return std::abs(a - b) <= tol;
}

inline bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

} // namespace multmap::testing
