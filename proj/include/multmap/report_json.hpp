#pragma once

#include <string>

#include <json.hpp>

#include "multmap/analysis.hpp"
#include "multmap/kernel_space.hpp"
#include "multmap/verify_corpus.hpp"

namespace multmap {

using Json = nlohmann::json;

// Report serialization. Conventions: snake_case keys, complex numbers as
// two-element [re, im] arrays, matrices as row-major arrays of such pairs with
// the dimension alongside, exact scalars as strings in the input grammar.
// parse(emit(report)) reproduces the report exactly.

Json emit(const Options& o);
Options parse_options(const Json& j);

Json emit(const RootSet& rs);
RootSet parse_root_set(const Json& j);

Json emit(const JacobianReport& r);
JacobianReport parse_jacobian_report(const Json& j);

Json emit(const RankRelation& r);
RankRelation parse_rank_relation(const Json& j);

Json emit(const AnalysisReport& r);
AnalysisReport parse_analysis_report(const Json& j);

Json emit(const RandomTrialsReport& r);
RandomTrialsReport parse_random_trials_report(const Json& j);

Json emit(const CorpusItem& item);

Json emit_complex(const ComplexFloat& z);
ComplexFloat parse_complex(const Json& j);

// ---------------------------------------------------------------------------
// Kernel reports are generic over the exact scalar domain.

template <FieldScalar K>
struct ScalarCodec;

template <>
struct ScalarCodec<Rational> {
    static std::string str(const Rational& x) { return x.str(); }
    static Rational parse(const std::string& s, const std::string&) { return parse_rational(s); }
};

template <>
struct ScalarCodec<GaussianRational> {
    static std::string str(const GaussianRational& x) { return x.str(); }
    static GaussianRational parse(const std::string& s, const std::string&) {
        return parse_gaussian_rational(s);
    }
};

template <>
struct ScalarCodec<PrimeFieldElement> {
    static std::string str(const PrimeFieldElement& x) { return x.str(); }
    static PrimeFieldElement parse(const std::string& s, const std::string& field) {
        if (field.rfind("F_", 0) != 0)
            throw ParseError("prime-field report without an F_p field descriptor");
        return parse_prime_field(s, std::stoull(field.substr(2)));
    }
};

template <FieldScalar K>
Json emit_poly(const Poly<K>& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(ScalarCodec<K>::str(c));
    return arr;
}

template <FieldScalar K>
Poly<K> parse_poly_json(const Json& j, const std::string& field) {
    std::vector<K> coeffs;
    for (const auto& item : j)
        coeffs.push_back(ScalarCodec<K>::parse(item.get<std::string>(), field));
    return Poly<K>(std::move(coeffs));
}

template <FieldScalar K>
Json emit(const KernelReport<K>& r) {
    Json checks;
    checks["applicable"] = r.thm_checks.applicable;
    checks["degree_bounds"] = r.thm_checks.degree_bounds;
    checks["square_divisor"] = r.thm_checks.square_divisor;
    checks["quadratic_divisor"] = r.thm_checks.quadratic_divisor
                                      ? emit_poly(*r.thm_checks.quadratic_divisor)
                                      : Json();
    checks["quadratic_elements_divide"] = r.thm_checks.quadratic_elements_divide;
    checks["square_law"] = r.thm_checks.square_law;
    checks["square_scale"] = r.thm_checks.square_scale
                                 ? Json(ScalarCodec<K>::str(*r.thm_checks.square_scale))
                                 : Json();
    checks["failures"] = r.thm_checks.failures;

    Json j;
    j["field"] = r.field;
    j["n"] = r.n;
    j["w_dim"] = r.w_dim;
    Json wb = Json::array();
    for (const auto& p : r.w_basis) wb.push_back(emit_poly(p));
    j["w_basis"] = std::move(wb);
    Json eb = Json::array();
    for (const auto& p : r.extended_basis) eb.push_back(emit_poly(p));
    j["extended_basis"] = std::move(eb);
    j["thm_checks"] = std::move(checks);
    return j;
}

template <FieldScalar K>
KernelReport<K> parse_kernel_report(const Json& j) {
    KernelReport<K> r;
    r.field = j.at("field").get<std::string>();
    r.n = j.at("n").get<int>();
    r.w_dim = j.at("w_dim").get<int>();
    for (const auto& p : j.at("w_basis")) r.w_basis.push_back(parse_poly_json<K>(p, r.field));
    for (const auto& p : j.at("extended_basis"))
        r.extended_basis.push_back(parse_poly_json<K>(p, r.field));
    const Json& checks = j.at("thm_checks");
    r.thm_checks.applicable = checks.at("applicable").get<bool>();
    r.thm_checks.degree_bounds = checks.at("degree_bounds").get<bool>();
    r.thm_checks.square_divisor = checks.at("square_divisor").get<bool>();
    if (!checks.at("quadratic_divisor").is_null())
        r.thm_checks.quadratic_divisor =
            parse_poly_json<K>(checks.at("quadratic_divisor"), r.field);
    r.thm_checks.quadratic_elements_divide = checks.at("quadratic_elements_divide").get<bool>();
    r.thm_checks.square_law = checks.at("square_law").get<bool>();
    if (!checks.at("square_scale").is_null())
        r.thm_checks.square_scale =
            ScalarCodec<K>::parse(checks.at("square_scale").get<std::string>(), r.field);
    r.thm_checks.failures = checks.at("failures").get<std::vector<std::string>>();
    return r;
}

} // namespace multmap
