#include "multmap/scalar_field.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

namespace multmap {

mpz_class Rational::int_to_mpz(long long n) {
    mpz_class z;
    if (n >= 0) {
        z = mpz_class(static_cast<unsigned long>(n));
    } else {
        // avoid overflow on LLONG_MIN
        z = mpz_class(static_cast<unsigned long>(-(n + 1)));
        z += 1;
        z = -z;
    }
    return z;
}

Rational::Rational(long long num, long long den)
    : Rational(int_to_mpz(num), int_to_mpz(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw DomainError("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (sgn(mpz_class(value_.get_den())) == 0) throw DomainError("Rational: zero denominator");
    value_.canonicalize();
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("Rational: zero has no inverse");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
    return Rational(r);
}

Rational Rational::operator-() const {
    Rational r(*this);
    r.value_ = -r.value_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    const Rational n = norm();
    if (n.is_zero()) throw DomainError("GaussianRational: zero has no inverse");
    const Rational inv_n = n.inverse();
    return {re_ * inv_n, -im_ * inv_n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    const Rational re = re_ * o.re_ - im_ * o.im_;
    const Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = re;
    im_ = im;
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string imag = im_.str() + "i";
    if (re_.is_zero()) return imag;
    if (!(im_ < Rational(0))) return re_.str() + "+" + imag;
    return re_.str() + imag; // sign carried by the imaginary part
}

PrimeFieldElement::PrimeFieldElement(std::uint64_t value, std::uint64_t modulus)
    : value_(0), modulus_(modulus) {
    if (modulus < 2) throw DomainError("PrimeFieldElement: modulus must be at least 2");
    value_ = value % modulus_;
}

PrimeFieldElement PrimeFieldElement::from_int(long long value, std::uint64_t modulus) {
    if (modulus < 2) throw DomainError("PrimeFieldElement: modulus must be at least 2");
    long long r = value % static_cast<long long>(modulus);
    if (r < 0) r += static_cast<long long>(modulus);
    return {static_cast<std::uint64_t>(r), modulus};
}

void PrimeFieldElement::check_same_modulus(const PrimeFieldElement& o) const {
    if (modulus_ != o.modulus_)
        throw DomainError("PrimeFieldElement: mixed moduli " + std::to_string(modulus_) +
                          " and " + std::to_string(o.modulus_));
}

PrimeFieldElement PrimeFieldElement::operator-() const {
    return {value_ == 0 ? 0 : modulus_ - value_, modulus_};
}

PrimeFieldElement& PrimeFieldElement::operator+=(const PrimeFieldElement& o) {
    check_same_modulus(o);
    value_ += o.value_;
    if (value_ >= modulus_ || value_ < o.value_) value_ -= modulus_;
    return *this;
}

PrimeFieldElement& PrimeFieldElement::operator-=(const PrimeFieldElement& o) {
    check_same_modulus(o);
    value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + (modulus_ - o.value_);
    return *this;
}

PrimeFieldElement& PrimeFieldElement::operator*=(const PrimeFieldElement& o) {
    check_same_modulus(o);
    using u128 = unsigned __int128;
    value_ = static_cast<std::uint64_t>((static_cast<u128>(value_) * o.value_) % modulus_);
    return *this;
}

PrimeFieldElement PrimeFieldElement::inverse() const {
    if (value_ == 0) throw DomainError("PrimeFieldElement: zero has no inverse");
    // extended Euclid on (modulus, value); modulus prime by precondition.
    // 128-bit accumulators keep q * t exact for moduli up to 2^63.
    __int128 t = 0, new_t = 1;
    std::uint64_t r = modulus_, new_r = value_;
    while (new_r != 0) {
        const std::uint64_t q = r / new_r;
        const __int128 tmp_t = t - static_cast<__int128>(q) * new_t;
        t = new_t;
        new_t = tmp_t;
        const std::uint64_t tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1)
        throw DomainError("PrimeFieldElement: value not invertible; modulus " +
                          std::to_string(modulus_) + " is not prime");
    __int128 reduced = t % static_cast<__int128>(modulus_);
    if (reduced < 0) reduced += static_cast<__int128>(modulus_);
    return {static_cast<std::uint64_t>(reduced), modulus_};
}

PrimeFieldElement& PrimeFieldElement::operator/=(const PrimeFieldElement& o) {
    check_same_modulus(o);
    return *this *= o.inverse();
}

bool char_guard(std::uint64_t p, int n) {
    return n >= 0 && p > static_cast<std::uint64_t>(n);
}

ComplexFloat checked_complex(double re, double im) {
    if (!std::isfinite(re) || !std::isfinite(im))
        throw DomainError("checked_complex: non-finite component");
    return {re, im};
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    using u128 = unsigned __int128;
    return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

} // namespace

bool is_probable_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // this base set decides primality for every 64-bit integer
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

mpz_class parse_mpz(std::string_view s) {
    if (!is_integer_token(s)) throw ParseError("invalid integer '" + std::string(s) + "'");
    std::string buf(s[0] == '+' ? s.substr(1) : s);
    mpz_class z;
    if (z.set_str(buf, 10) != 0) throw ParseError("invalid integer '" + std::string(s) + "'");
    return z;
}

// Splits "a+bi" style text into (real term, imaginary term); either may be
// absent. `skip_exponent_signs` tolerates "1e-3" when parsing floats.
struct ComplexTerms {
    std::string re;
    std::string im;
    bool has_re = false;
    bool has_im = false;
};

ComplexTerms split_complex_terms(std::string_view text, bool skip_exponent_signs) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty scalar");

    std::vector<std::string> terms;
    std::size_t start = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] != '+' && s[i] != '-') continue;
        if (skip_exponent_signs && (s[i - 1] == 'e' || s[i - 1] == 'E')) continue;
        terms.emplace_back(s.substr(start, i - start));
        start = i;
    }
    terms.emplace_back(s.substr(start));
    if (terms.size() > 2) throw ParseError("too many terms in '" + std::string(text) + "'");

    ComplexTerms out;
    bool first_is_imag = false;
    for (std::size_t idx = 0; idx < terms.size(); ++idx) {
        auto& t = terms[idx];
        const bool imag = !t.empty() && (t.back() == 'i' || t.back() == 'I');
        if (idx == 0) first_is_imag = imag;
        if (imag) {
            if (out.has_im) throw ParseError("duplicate imaginary part in '" + std::string(text) + "'");
            t.pop_back();
            if (t.empty() || t == "+") t = "1";
            else if (t == "-") t = "-1";
            out.im = std::move(t);
            out.has_im = true;
        } else {
            if (out.has_re) throw ParseError("duplicate real part in '" + std::string(text) + "'");
            out.re = std::move(t);
            out.has_re = true;
        }
    }
    if (out.has_re && out.has_im && first_is_imag)
        throw ParseError("imaginary part must follow the real part in '" + std::string(text) + "'");
    return out;
}

double parse_double_token(std::string_view s) {
    if (s.empty()) throw ParseError("empty number");
    std::string_view body = s;
    double sign = 1.0;
    if (body[0] == '+' || body[0] == '-') {
        if (body[0] == '-') sign = -1.0;
        body.remove_prefix(1);
    }
    double value = 0.0;
    const auto res = std::from_chars(body.data(), body.data() + body.size(), value);
    if (res.ec != std::errc() || res.ptr != body.data() + body.size())
        throw ParseError("invalid number '" + std::string(s) + "'");
    return sign * value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view s = strip(text);
    if (s.empty()) throw ParseError("empty rational");
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_mpz(s), mpz_class(1));
    const auto num = strip(s.substr(0, slash));
    const auto den = strip(s.substr(slash + 1));
    return Rational(parse_mpz(num), parse_mpz(den));
}

GaussianRational parse_gaussian_rational(std::string_view text) {
    const auto terms = split_complex_terms(text, /*skip_exponent_signs=*/false);
    Rational re = terms.has_re ? parse_rational(terms.re) : Rational();
    Rational im = terms.has_im ? parse_rational(terms.im) : Rational();
    return {std::move(re), std::move(im)};
}

PrimeFieldElement parse_prime_field(std::string_view text, std::uint64_t modulus) {
    const std::string_view s = strip(text);
    mpz_class z = parse_mpz(s);
    mpz_class m(std::to_string(modulus));
    mpz_class r = z % m;
    if (sgn(r) < 0) r += m;
    return {r.get_ui(), modulus};
}

ComplexFloat parse_complex_float(std::string_view text) {
    const auto terms = split_complex_terms(text, /*skip_exponent_signs=*/true);
    const double re = terms.has_re ? parse_double_token(terms.re) : 0.0;
    const double im = terms.has_im ? parse_double_token(terms.im) : 0.0;
    return checked_complex(re, im);
}

std::string scalar_str(const Rational& x) { return x.str(); }
std::string scalar_str(const GaussianRational& x) { return x.str(); }
std::string scalar_str(const PrimeFieldElement& x) { return x.str(); }

std::string scalar_str(const ComplexFloat& x) {
    char buf[64];
    if (x.imag() == 0.0) {
        std::snprintf(buf, sizeof(buf), "%.17g", x.real());
        return buf;
    }
    if (x.real() == 0.0) {
        std::snprintf(buf, sizeof(buf), "%.17gi", x.imag());
        return buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", x.real(), x.imag());
    return buf;
}

} // namespace multmap
