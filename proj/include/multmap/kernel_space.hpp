#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multmap/exact_linalg.hpp"
#include "multmap/options.hpp"
#include "multmap/poly.hpp"
#include "multmap/scalar_field.hpp"

namespace multmap {

// Outcome of the structural checks on a nontrivial divisibility kernel: a
// nonzero p of degree <= n-2 with f''p - f'p' divisible by f forces n >= 4 and
// deg p >= 2, a quadratic q with q^2 | f, divisibility of f and f' by every
// degree-2 kernel element together with two exact scalar identities, and for
// n = 4 the square law f = c p^2.
template <FieldScalar K>
struct ThmAlgebraChecks {
    bool applicable = false;
    bool degree_bounds = true;
    bool square_divisor = true;
    std::optional<Poly<K>> quadratic_divisor; // explicit witness when constructible over K
    bool quadratic_elements_divide = true;
    bool square_law = true;
    std::optional<K> square_scale;
    std::vector<std::string> failures;

    bool all_pass() const {
        return degree_bounds && square_divisor && quadratic_elements_divide && square_law;
    }

    friend bool operator==(const ThmAlgebraChecks& a, const ThmAlgebraChecks& b) {
        return a.applicable == b.applicable && a.degree_bounds == b.degree_bounds &&
               a.square_divisor == b.square_divisor &&
               a.quadratic_divisor == b.quadratic_divisor &&
               a.quadratic_elements_divide == b.quadratic_elements_divide &&
               a.square_law == b.square_law && a.square_scale == b.square_scale &&
               a.failures == b.failures;
    }
};

template <FieldScalar K>
struct KernelReport {
    std::string field;
    int n = 0;
    std::vector<Poly<K>> w_basis;  // degree <= n-2 kernel, echelon-normalized
    int w_dim = 0;
    std::vector<Poly<K>> extended_basis; // degree <= n-1 kernel; contains a multiple of f'
    ThmAlgebraChecks<K> thm_checks;

    friend bool operator==(const KernelReport& a, const KernelReport& b) {
        return a.field == b.field && a.n == b.n && a.w_basis == b.w_basis &&
               a.w_dim == b.w_dim && a.extended_basis == b.extended_basis &&
               a.thm_checks == b.thm_checks;
    }
};

namespace detail {

template <FieldScalar K>
void require_kernel_input(const Poly<K>& f) {
    if (f.is_zero() || *f.degree() < 2)
        throw DomainError("kernel: monic input of degree >= 2 required");
    if (!f.is_monic()) throw DomainError("kernel: input must be monic");
    const auto ch = characteristic_like(f.leading());
    if (ch != 0 && !char_guard(ch, *f.degree()))
        throw DomainError("kernel: characteristic must exceed the degree (have " +
                          std::to_string(ch) + ")");
}

} // namespace detail

// Coefficient columns of (f'' x^k - k f' x^{k-1}) mod f for k = 0..max_deg.
// A combination p = sum c_k x^k has f''p - f'p' divisible by f exactly when
// the matching combination of columns vanishes. Instantiable over ComplexFloat
// as well, for the floating shadow of the same system.
template <FieldScalar K>
ExactMatrix<K> divisibility_system(const Poly<K>& f, int max_deg) {
    const int n = *f.degree();
    const K zero = zero_like(f.leading());
    const K one = one_like(f.leading());
    const Poly<K> df = derivative(f);
    const Poly<K> ddf = derivative(df);

    ExactMatrix<K> rows(static_cast<std::size_t>(n),
                        std::vector<K>(static_cast<std::size_t>(max_deg) + 1, zero));
    for (int k = 0; k <= max_deg; ++k) {
        Poly<K> term = ddf * Poly<K>::monomial(one, k);
        if (k >= 1)
            term = term - from_int_like(one, k) * (df * Poly<K>::monomial(one, k - 1));
        const Poly<K> r = divrem(term, f).remainder;
        for (int i = 0; i < n; ++i)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                r.coeff_or_zero(i, zero);
    }
    return rows;
}

// Null space of the divisibility system up to the given degree, as
// echelon-normalized polynomials (monic at the top-degree pivot, ordered by
// descending degree). Exact domains only.
template <FieldScalar K>
std::vector<Poly<K>> kernel_polynomials(const Poly<K>& f, int max_deg) {
    static_assert(is_exact_field_v<K>, "kernel computations require an exact scalar domain");
    detail::require_kernel_input(f);
    auto system = divisibility_system(f, max_deg);
    auto vectors = nullspace_basis(std::move(system), max_deg + 1, f.leading());
    echelon_normalize_top(vectors);
    std::vector<Poly<K>> out;
    out.reserve(vectors.size());
    for (auto& v : vectors) out.emplace_back(std::move(v));
    return out;
}

template <FieldScalar K>
std::vector<Poly<K>> extended_kernel(const Poly<K>& f) {
    detail::require_kernel_input(f);
    return kernel_polynomials(f, *f.degree() - 1);
}

template <FieldScalar K>
KernelReport<K> w_space(const Poly<K>& f) {
    detail::require_kernel_input(f);
    const int n = *f.degree();

    KernelReport<K> rep;
    rep.field = field_name(f.leading());
    rep.n = n;
    rep.w_basis = kernel_polynomials(f, n - 2);
    rep.w_dim = static_cast<int>(rep.w_basis.size());
    rep.extended_basis = kernel_polynomials(f, n - 1);

    // soundness: every element must satisfy the divisibility definition exactly,
    // and the extended kernel must contain f'
    for (const auto* basis : {&rep.w_basis, &rep.extended_basis})
        for (const auto& q : *basis)
            if (!divrem(bracket(f, q), f).remainder.is_zero())
                throw std::logic_error("kernel: basis element fails the divisibility definition");
    {
        const K zero = zero_like(f.leading());
        const Poly<K> df = derivative(f);
        std::vector<std::vector<K>> vectors;
        for (const auto& q : rep.extended_basis) {
            std::vector<K> v;
            for (int i = 0; i < n; ++i) v.push_back(q.coeff_or_zero(i, zero));
            vectors.push_back(std::move(v));
        }
        std::vector<K> dfv;
        for (int i = 0; i < n; ++i) dfv.push_back(df.coeff_or_zero(i, zero));
        if (!in_span(vectors, std::move(dfv)))
            throw std::logic_error("kernel: extended kernel does not contain f'");
    }
    if (static_cast<int>(rep.extended_basis.size()) != rep.w_dim + 1)
        throw std::logic_error("kernel: extended kernel dimension is not 1 + dim W");
    return rep;
}

template <FieldScalar K>
ThmAlgebraChecks<K> verify_thm_algebra(const Poly<K>& f, const KernelReport<K>& report) {
    detail::require_kernel_input(f);
    const int n = *f.degree();
    ThmAlgebraChecks<K> out;
    out.applicable = report.w_dim > 0;
    if (!out.applicable) return out; // nothing to check; all claims are vacuous

    auto fail = [&](std::string msg) { out.failures.push_back(std::move(msg)); };
    const auto fmt = [](const K& x) { return scalar_str(x); };

    // degree bounds: n >= 4 and every kernel element has degree >= 2
    if (n < 4) {
        out.degree_bounds = false;
        fail("nontrivial kernel at degree n = " + std::to_string(n) + " < 4");
    }
    for (const auto& q : report.w_basis) {
        if (*q.degree() < 2) {
            out.degree_bounds = false;
            fail("kernel element of degree < 2: " + poly_csv(q, fmt));
        }
    }

    // a quadratic square divisor must exist: certified by the square part of
    // the square-free decomposition having degree >= 2
    const Poly<K> df = derivative(f);
    const Poly<K> g = gcd_monic(f, df);
    const bool g_nonconstant = *g.degree() >= 1;
    const auto factors = yun_squarefree(f);
    int square_part_degree = 0;
    for (const auto& sf : factors)
        square_part_degree += *sf.factor.degree() * (sf.multiplicity / 2);
    out.square_divisor = g_nonconstant && square_part_degree >= 2;
    if (!out.square_divisor)
        fail("no quadratic square divisor: gcd(f, f') degree " +
             std::to_string(*g.degree()) + ", square part degree " +
             std::to_string(square_part_degree));

    // explicit witness when one is constructible without factoring over K:
    // a degree-2 repeated factor, a repeated linear factor of multiplicity >= 4,
    // or two distinct repeated linear factors. Over non-closed fields a
    // higher-degree square part certifies existence without an explicit witness.
    if (out.square_divisor) {
        const Poly<K>* quadratic = nullptr;
        const Poly<K>* quartic_linear = nullptr;
        std::vector<const Poly<K>*> repeated_linear;
        for (const auto& sf : factors) {
            if (sf.multiplicity < 2) continue;
            if (*sf.factor.degree() == 2 && !quadratic) quadratic = &sf.factor;
            if (*sf.factor.degree() == 1) {
                repeated_linear.push_back(&sf.factor);
                if (sf.multiplicity >= 4 && !quartic_linear) quartic_linear = &sf.factor;
            }
        }
        if (quadratic) {
            out.quadratic_divisor = *quadratic;
        } else if (repeated_linear.size() >= 2) {
            out.quadratic_divisor = (*repeated_linear[0]) * (*repeated_linear[1]);
        } else if (quartic_linear) {
            out.quadratic_divisor = (*quartic_linear) * (*quartic_linear);
        }
        if (out.quadratic_divisor) {
            const Poly<K> sq = (*out.quadratic_divisor) * (*out.quadratic_divisor);
            if (!divrem(f, sq).remainder.is_zero()) {
                out.square_divisor = false;
                fail("witness square does not divide f: " +
                     poly_csv(*out.quadratic_divisor, fmt));
            }
        }
    }

    // every degree-2 kernel element divides f and f', with two exact scalar
    // identities pinned by comparing leading coefficients
    for (const auto& q : report.w_basis) {
        if (*q.degree() != 2) continue;
        if (!divrem(f, q).remainder.is_zero()) {
            out.quadratic_elements_divide = false;
            fail("degree-2 element does not divide f: " + poly_csv(q, fmt));
        }
        if (!divrem(df, q).remainder.is_zero()) {
            out.quadratic_elements_divide = false;
            fail("degree-2 element does not divide f': " + poly_csv(q, fmt));
        }
        const K lead = f.leading();
        const K h0 = from_int_like(lead, static_cast<long long>(n) * (n - 3));
        if (!(bracket(f, q) == h0 * f)) {
            out.quadratic_elements_divide = false;
            fail("f''q - f'q' != n(n-3) f for q = " + poly_csv(q, fmt));
        }
        const Poly<K> dddf = derivative(derivative(df));
        const K h1 = from_int_like(lead, static_cast<long long>(n - 1) * (n - 2));
        if (!(dddf * q == h1 * df)) {
            out.quadratic_elements_divide = false;
            fail("f''' q != (n-1)(n-2) f' for q = " + poly_csv(q, fmt));
        }
    }

    // n = 4: the kernel is spanned by degree-2 elements and f is a scalar
    // times a square
    if (n == 4) {
        for (const auto& q : report.w_basis) {
            if (*q.degree() != 2) {
                out.square_law = false;
                fail("n = 4 kernel element of degree != 2: " + poly_csv(q, fmt));
                continue;
            }
            const K c = f.leading() * field_inverse(q.leading() * q.leading());
            if (f == c * (q * q)) {
                if (!out.square_scale) out.square_scale = c;
            } else {
                out.square_law = false;
                fail("f != c q^2 for q = " + poly_csv(q, fmt));
            }
        }
    }
    return out;
}

template <FieldScalar K>
KernelReport<K> kernel_report(const Poly<K>& f) {
    KernelReport<K> rep = w_space(f);
    rep.thm_checks = verify_thm_algebra(f, rep);
    return rep;
}

inline Poly<ComplexFloat> to_complex_poly(const Poly<GaussianRational>& f) {
    std::vector<ComplexFloat> coeffs;
    coeffs.reserve(f.coefficients().size());
    for (const auto& c : f.coefficients()) coeffs.push_back(c.to_complex());
    return Poly<ComplexFloat>(std::move(coeffs));
}

inline Poly<GaussianRational> to_gaussian_poly(const Poly<Rational>& f) {
    std::vector<GaussianRational> coeffs;
    coeffs.reserve(f.coefficients().size());
    for (const auto& c : f.coefficients()) coeffs.emplace_back(c);
    return Poly<GaussianRational>(std::move(coeffs));
}

// Exact kernel dimension next to the numerical rank of the floating shadow.
// On square-free inputs the contract is numeric_rank = (n-1) - w_dim = n-1.
struct RankRelation {
    int n = 0;
    int exact_w_dim = 0;
    int numeric_rank = 0;
    bool contract_holds = false;

    friend bool operator==(const RankRelation& a, const RankRelation& b) {
        return a.n == b.n && a.exact_w_dim == b.exact_w_dim &&
               a.numeric_rank == b.numeric_rank && a.contract_holds == b.contract_holds;
    }
};

RankRelation rank_relation(const Poly<GaussianRational>& f, const Options& options = {});

} // namespace multmap
