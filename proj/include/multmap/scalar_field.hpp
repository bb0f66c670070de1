#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace multmap {

using ComplexFloat = std::complex<double>;

// Error families. The CLI maps them onto exit codes: parse/usage errors and
// algebraic domain violations exit 1, numerical conditioning failures exit 2.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConditioningError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1,
// den > 0, zero stored as 0/1. Equality is structural.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long n) : value_(int_to_mpz(n)) {}
    Rational(long long num, long long den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class value);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }

    // Multiplicative inverse; zero input is a domain error.
    Rational inverse() const;

    double to_double() const { return value_.get_d(); }
    std::string str() const { return value_.get_str(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }

private:
    static mpz_class int_to_mpz(long long n);
    mpq_class value_;
};

// Element of Q(i): a + b i with rational components. Invertible iff nonzero.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long long re) : re_(re) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    ComplexFloat to_complex() const { return {re_.to_double(), im_.to_double()}; }
    std::string str() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { a += b; return a; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { a -= b; return a; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { a *= b; return a; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { a /= b; return a; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

private:
    Rational re_;
    Rational im_;
};

// Element of F_p with a runtime modulus, stored reduced to [0, p). Arithmetic
// between different moduli is a hard error.
class PrimeFieldElement {
public:
    PrimeFieldElement(std::uint64_t value, std::uint64_t modulus);
    static PrimeFieldElement from_int(long long value, std::uint64_t modulus);

    std::uint64_t value() const { return value_; }
    std::uint64_t modulus() const { return modulus_; }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    PrimeFieldElement inverse() const;

    std::string str() const { return std::to_string(value_); }

    PrimeFieldElement operator-() const;
    PrimeFieldElement& operator+=(const PrimeFieldElement& o);
    PrimeFieldElement& operator-=(const PrimeFieldElement& o);
    PrimeFieldElement& operator*=(const PrimeFieldElement& o);
    PrimeFieldElement& operator/=(const PrimeFieldElement& o);

    friend PrimeFieldElement operator+(PrimeFieldElement a, const PrimeFieldElement& b) { a += b; return a; }
    friend PrimeFieldElement operator-(PrimeFieldElement a, const PrimeFieldElement& b) { a -= b; return a; }
    friend PrimeFieldElement operator*(PrimeFieldElement a, const PrimeFieldElement& b) { a *= b; return a; }
    friend PrimeFieldElement operator/(PrimeFieldElement a, const PrimeFieldElement& b) { a /= b; return a; }
    friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
        return a.value_ == b.value_ && a.modulus_ == b.modulus_;
    }
    friend bool operator!=(const PrimeFieldElement& a, const PrimeFieldElement& b) { return !(a == b); }

private:
    void check_same_modulus(const PrimeFieldElement& o) const;
    std::uint64_t value_;
    std::uint64_t modulus_;
};

// ---------------------------------------------------------------------------
// Uniform field interface used by the generic polynomial code. Prime-field
// values carry their modulus, so constants are minted "like" an existing
// element rather than from a bare default constructor.

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }
inline bool is_zero(const PrimeFieldElement& x) { return x.is_zero(); }
inline bool is_zero(const ComplexFloat& x) { return x == ComplexFloat(0.0, 0.0); }

inline Rational zero_like(const Rational&) { return {}; }
inline GaussianRational zero_like(const GaussianRational&) { return {}; }
inline PrimeFieldElement zero_like(const PrimeFieldElement& x) { return {0, x.modulus()}; }
inline ComplexFloat zero_like(const ComplexFloat&) { return {0.0, 0.0}; }

inline Rational one_like(const Rational&) { return {1}; }
inline GaussianRational one_like(const GaussianRational&) { return {1}; }
inline PrimeFieldElement one_like(const PrimeFieldElement& x) { return {1, x.modulus()}; }
inline ComplexFloat one_like(const ComplexFloat&) { return {1.0, 0.0}; }

inline Rational from_int_like(const Rational&, long long v) { return {v}; }
inline GaussianRational from_int_like(const GaussianRational&, long long v) { return {Rational(v)}; }
inline PrimeFieldElement from_int_like(const PrimeFieldElement& x, long long v) {
    return PrimeFieldElement::from_int(v, x.modulus());
}
inline ComplexFloat from_int_like(const ComplexFloat&, long long v) {
    return {static_cast<double>(v), 0.0};
}

inline Rational field_inverse(const Rational& x) { return x.inverse(); }
inline GaussianRational field_inverse(const GaussianRational& x) { return x.inverse(); }
inline PrimeFieldElement field_inverse(const PrimeFieldElement& x) { return x.inverse(); }
inline ComplexFloat field_inverse(const ComplexFloat& x) {
    if (is_zero(x)) throw DomainError("field_inverse: zero has no inverse");
    return ComplexFloat(1.0, 0.0) / x;
}

template <class K>
inline constexpr bool is_exact_field_v = true;
template <>
inline constexpr bool is_exact_field_v<ComplexFloat> = false;

inline unsigned long long characteristic_like(const Rational&) { return 0; }
inline unsigned long long characteristic_like(const GaussianRational&) { return 0; }
inline unsigned long long characteristic_like(const PrimeFieldElement& x) { return x.modulus(); }
inline unsigned long long characteristic_like(const ComplexFloat&) { return 0; }

inline std::string field_name(const Rational&) { return "Q"; }
inline std::string field_name(const GaussianRational&) { return "Q(i)"; }
inline std::string field_name(const PrimeFieldElement& x) { return "F_" + std::to_string(x.modulus()); }
inline std::string field_name(const ComplexFloat&) { return "C(float64)"; }

template <class K>
concept FieldScalar = requires(const K& a, const K& b) {
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { zero_like(a) } -> std::convertible_to<K>;
    { one_like(a) } -> std::convertible_to<K>;
    { from_int_like(a, 1LL) } -> std::convertible_to<K>;
    { field_inverse(a) } -> std::convertible_to<K>;
    { a == b } -> std::convertible_to<bool>;
};

// True iff checks that require characteristic > n may run over F_p.
bool char_guard(std::uint64_t p, int n);

// Rejects NaN and infinity at construction boundaries.
ComplexFloat checked_complex(double re, double im);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_probable_prime(std::uint64_t n);

// Text grammar: rationals "a/b" or "a"; Gaussian rationals "a/b+c/di" with
// optional signs and either part omitted; prime-field elements as integers
// reduced mod p; complex floats "1.5-2e-3i".
Rational parse_rational(std::string_view text);
GaussianRational parse_gaussian_rational(std::string_view text);
PrimeFieldElement parse_prime_field(std::string_view text, std::uint64_t modulus);
ComplexFloat parse_complex_float(std::string_view text);

std::string scalar_str(const Rational& x);
std::string scalar_str(const GaussianRational& x);
std::string scalar_str(const PrimeFieldElement& x);
std::string scalar_str(const ComplexFloat& x);

} // namespace multmap
