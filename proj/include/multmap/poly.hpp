#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multmap/scalar_field.hpp"

namespace multmap {

// Dense univariate polynomial over a field scalar, coefficients indexed by
// power with no trailing zeros. The zero polynomial stores no coefficients and
// its degree is "minus infinity", reported as an empty optional; std::optional
// ordering makes comparisons against real degrees do the right thing.
template <FieldScalar K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly constant(const K& c) { return Poly(std::vector<K>{c}); }

    // c * x^k
    static Poly monomial(const K& c, int k) {
        if (multmap::is_zero(c)) return {};
        std::vector<K> v(static_cast<std::size_t>(k) + 1, zero_like(c));
        v.back() = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    std::optional<int> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }

    const std::vector<K>& coefficients() const { return coeffs_; }

    const K& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

    K coeff_or_zero(int k, const K& sample) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero_like(sample);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const K& leading() const {
        if (coeffs_.empty()) throw DomainError("Poly: zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == one_like(coeffs_.back()); }

    K eval(const K& x) const {
        K acc = zero_like(x);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly operator-() const {
        std::vector<K> v;
        v.reserve(coeffs_.size());
        for (const auto& c : coeffs_) v.push_back(-c);
        return Poly(std::move(v));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const auto& longer = a.coeffs_.size() >= b.coeffs_.size() ? a.coeffs_ : b.coeffs_;
        const auto& shorter = a.coeffs_.size() >= b.coeffs_.size() ? b.coeffs_ : a.coeffs_;
        std::vector<K> v = longer;
        for (std::size_t i = 0; i < shorter.size(); ++i) v[i] = v[i] + shorter[i];
        return Poly(std::move(v));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        const K zero = zero_like(a.coeffs_[0]);
        std::vector<K> v(a.coeffs_.size() + b.coeffs_.size() - 1, zero);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (multmap::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(v));
    }

    friend Poly operator*(const K& c, const Poly& p) {
        if (multmap::is_zero(c) || p.is_zero()) return {};
        std::vector<K> v;
        v.reserve(p.coeffs_.size());
        for (const auto& a : p.coeffs_) v.push_back(c * a);
        return Poly(std::move(v));
    }

    friend Poly operator*(const Poly& p, const K& c) { return c * p; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim() {
        while (!coeffs_.empty() && multmap::is_zero(coeffs_.back())) coeffs_.pop_back();
    }
    std::vector<K> coeffs_;
};

template <FieldScalar K>
Poly<K> derivative(const Poly<K>& f) {
    const auto& c = f.coefficients();
    if (c.size() <= 1) return {};
    std::vector<K> v;
    v.reserve(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k)
        v.push_back(from_int_like(c[k], static_cast<long long>(k)) * c[k]);
    return Poly<K>(std::move(v)); // trims terms killed by the characteristic
}

template <FieldScalar K>
struct DivRem {
    Poly<K> quotient;
    Poly<K> remainder;
};

// Division with remainder: a = q*b + r with deg r < deg b. Exact over exact
// scalar domains.
template <FieldScalar K>
DivRem<K> divrem(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) throw DomainError("divrem: division by the zero polynomial");
    if (a.is_zero() || a.degree() < b.degree()) return {Poly<K>{}, a};
    const K inv_lead = field_inverse(b.leading());
    const K zero = zero_like(b.leading());
    const int db = *b.degree();
    std::vector<K> rem = a.coefficients();
    std::vector<K> quot(rem.size() - static_cast<std::size_t>(db), zero);
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        const K c = rem[static_cast<std::size_t>(k + db)] * inv_lead;
        quot[static_cast<std::size_t>(k)] = c;
        if (is_zero(c)) continue;
        for (int j = 0; j < db; ++j)
            rem[static_cast<std::size_t>(k + j)] =
                rem[static_cast<std::size_t>(k + j)] - c * b.coeff(j);
        rem[static_cast<std::size_t>(k + db)] = zero; // vanishes by construction
    }
    rem.resize(static_cast<std::size_t>(db), zero);
    return {Poly<K>(std::move(quot)), Poly<K>(std::move(rem))};
}

template <FieldScalar K>
Poly<K> monicize(const Poly<K>& f) {
    if (f.is_zero()) throw DomainError("monicize: zero polynomial");
    if (f.is_monic()) return f;
    return field_inverse(f.leading()) * f;
}

// Monic gcd by the Euclidean algorithm. Restricted to exact scalar domains;
// there is no approximate-gcd fallback for floats.
template <FieldScalar K>
Poly<K> gcd_monic(Poly<K> a, Poly<K> b) {
    if (!is_exact_field_v<K>)
        throw DomainError("gcd_monic: not defined over a floating scalar domain");
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd_monic: both inputs are zero");
    if (a.is_zero()) return monicize(b);
    if (b.is_zero()) return monicize(a);
    a = monicize(a);
    b = monicize(b);
    while (!b.is_zero()) {
        Poly<K> r = divrem(a, b).remainder;
        a = std::move(b);
        b = r.is_zero() ? std::move(r) : monicize(r);
    }
    return a;
}

template <FieldScalar K>
struct SquareFreeFactor {
    Poly<K> factor;
    int multiplicity;
};

// Yun's square-free decomposition of the monic part: f = lead * prod s_i^i
// with pairwise coprime square-free monic s_i. Valid in characteristic 0 or
// above deg f.
template <FieldScalar K>
std::vector<SquareFreeFactor<K>> yun_squarefree(const Poly<K>& f) {
    if (!is_exact_field_v<K>)
        throw DomainError("yun_squarefree: not defined over a floating scalar domain");
    if (f.is_zero()) throw DomainError("yun_squarefree: zero polynomial");
    const int n = *f.degree();
    const auto ch = characteristic_like(f.leading());
    if (ch != 0 && !char_guard(ch, n))
        throw DomainError("yun_squarefree: characteristic must exceed the degree");
    if (n == 0) return {};

    const Poly<K> F = monicize(f);
    const Poly<K> dF = derivative(F);
    const Poly<K> g = gcd_monic(F, dF);
    if (*g.degree() == 0) return {{F, 1}};

    Poly<K> c = divrem(F, g).quotient;
    Poly<K> d = divrem(dF, g).quotient - derivative(c);
    std::vector<SquareFreeFactor<K>> out;
    for (int i = 1; *c.degree() > 0; ++i) {
        Poly<K> s = gcd_monic(c, d);
        c = divrem(c, s).quotient;
        d = divrem(d, s).quotient - derivative(c);
        if (*s.degree() > 0) out.push_back({std::move(s), i});
    }
    return out;
}

// f''p - f'p'. For monic f of degree n and monic p of degree m < n-1 this has
// degree n-2+m and leading coefficient n(n-1-m).
template <FieldScalar K>
Poly<K> bracket(const Poly<K>& f, const Poly<K>& p) {
    const Poly<K> df = derivative(f);
    return derivative(df) * p - df * derivative(p);
}

template <FieldScalar K>
std::vector<K> eval_batch(const Poly<K>& f, const std::vector<K>& points) {
    std::vector<K> out;
    out.reserve(points.size());
    for (const auto& x : points) out.push_back(f.eval(x));
    return out;
}

// f(x + t), by Horner in the shifted variable.
template <FieldScalar K>
Poly<K> taylor_shift(const Poly<K>& f, const K& t) {
    if (f.is_zero()) return f;
    const auto& c = f.coefficients();
    const Poly<K> shifted_x(std::vector<K>{t, one_like(t)});
    Poly<K> acc = Poly<K>::constant(c.back());
    for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k)
        acc = acc * shifted_x + Poly<K>::constant(c[static_cast<std::size_t>(k)]);
    return acc;
}

template <FieldScalar K>
Poly<K> poly_pow(const Poly<K>& f, int e) {
    if (e < 0) throw DomainError("poly_pow: negative exponent");
    if (e == 0) {
        if (f.is_zero()) throw DomainError("poly_pow: 0^0");
        return Poly<K>::constant(one_like(f.leading()));
    }
    Poly<K> acc = f;
    for (int i = 1; i < e; ++i) acc = acc * f;
    return acc;
}

// Comma-separated coefficients, constant term first.
template <FieldScalar K, class Parser>
Poly<K> parse_poly(std::string_view text, Parser&& parse_scalar) {
    std::vector<K> coeffs;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        const std::string_view token = text.substr(start, comma - start);
        coeffs.push_back(parse_scalar(token));
        start = comma + 1;
        if (comma == text.size()) break;
    }
    return Poly<K>(std::move(coeffs));
}

template <FieldScalar K, class Fmt>
std::string poly_csv(const Poly<K>& p, Fmt&& fmt) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += fmt(c[i]);
    }
    return out;
}

// Human-oriented rendering, highest power first, e.g. "x^2 - 1".
template <FieldScalar K, class Fmt>
std::string poly_pretty(const Poly<K>& p, Fmt&& fmt, const char* var = "x") {
    if (p.is_zero()) return "0";
    const auto& c = p.coefficients();
    std::string out;
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
        const auto& a = c[static_cast<std::size_t>(k)];
        if (multmap::is_zero(a)) continue;
        std::string cs = fmt(a);
        const bool neg = cs.size() > 1 && cs[0] == '-' &&
                         cs.find_first_of("+-", 1) == std::string::npos;
        if (out.empty()) {
            if (neg) {
                out += "-";
                cs = cs.substr(1);
            }
        } else {
            out += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        const bool composite = cs.find_first_of("+-", 1) != std::string::npos;
        if (k == 0) {
            out += composite ? "(" + cs + ")" : cs;
            continue;
        }
        if (cs == "1") {
            // coefficient 1 is implicit
        } else if (composite) {
            out += "(" + cs + ")*";
        } else {
            out += cs + "*";
        }
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

} // namespace multmap
