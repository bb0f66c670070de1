#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "multmap/analysis.hpp"
#include "multmap/report_json.hpp"
#include "multmap/verify_corpus.hpp"

namespace {

using namespace multmap;

struct ParsedInput {
    Poly<ComplexFloat> f;
    std::optional<Poly<GaussianRational>> exact;
    std::string echo;
    bool monicized = false;
};

// Coefficients are comma separated, constant term first. Exact grammar is
// tried first ("a/b", "a/b+c/di"); decimal input falls back to floats.
ParsedInput parse_input(const std::string& text, bool allow_monicize) {
    ParsedInput in;
    in.echo = text;
    try {
        auto exact = parse_poly<GaussianRational>(
            text, [](std::string_view tok) { return parse_gaussian_rational(tok); });
        if (exact.is_zero()) throw ParseError("polynomial is zero");
        if (!exact.is_monic()) {
            if (!allow_monicize)
                throw DomainError("input is not monic; pass --monicize to normalize");
            exact = monicize(exact);
            in.monicized = true;
        }
        in.f = to_complex_poly(exact);
        in.exact = std::move(exact);
        return in;
    } catch (const ParseError&) {
        // fall through to the float grammar
    }
    auto f = parse_poly<ComplexFloat>(
        text, [](std::string_view tok) { return parse_complex_float(tok); });
    if (f.is_zero()) throw ParseError("polynomial is zero");
    if (!f.is_monic()) {
        if (!allow_monicize)
            throw DomainError("input is not monic; pass --monicize to normalize");
        std::vector<ComplexFloat> c = f.coefficients();
        const ComplexFloat lead = c.back();
        for (auto& x : c) x /= lead;
        c.back() = ComplexFloat(1.0);
        f = Poly<ComplexFloat>(std::move(c));
        in.monicized = true;
    }
    in.f = std::move(f);
    return in;
}

std::string fmt_complex(const ComplexFloat& z) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%+.12g%+.12gi", z.real(), z.imag());
    return buf;
}

void print_jacobian_table(const JacobianReport& rep, const char* title) {
    std::cout << title << ": numerical rank " << rep.numerical_rank << " (rank_tol "
              << rep.rank_tol << ")\n  singular values:";
    for (double s : rep.singular_values) std::cout << " " << s;
    std::cout << "\n  kernel residual " << rep.kernel_residual
              << ", hypersurface residual (relative) " << rep.hypersurface_residual << "\n";
    if (!rep.minors.empty()) {
        std::cout << "  principal minors vs prediction:\n";
        for (const auto& mc : rep.minors)
            std::cout << "    i=" << mc.index << "  value " << fmt_complex(mc.value)
                      << "  predicted " << fmt_complex(mc.predicted) << "  rel.dev "
                      << mc.relative_deviation << "\n";
    }
}

void print_analysis_table(const AnalysisReport& rep) {
    std::cout << "input: " << rep.input_poly << (rep.monicized ? "  (monicized)" : "")
              << (rep.exact_input ? "  [exact coefficients]" : "") << "\n";
    std::cout << "roots (" << rep.roots.roots.size() << "), " << rep.roots.iterations
              << " iterations, min gap " << rep.roots.min_gap << ":\n";
    for (std::size_t i = 0; i < rep.roots.roots.size(); ++i)
        std::cout << "  " << fmt_complex(rep.roots.roots[i]) << "   |f| = "
                  << rep.roots.residuals[i] << "\n";
    std::cout << "multipliers:";
    for (const auto& m : rep.multipliers) std::cout << " " << fmt_complex(m);
    std::cout << "\n";
    print_jacobian_table(rep.jacobian_coefficient, "coefficient-space Jacobian");
    print_jacobian_table(rep.jacobian_root, "root-space Jacobian");
    if (rep.rank_rel)
        std::cout << "rank relation: exact w_dim " << rep.rank_rel->exact_w_dim
                  << ", numeric rank " << rep.rank_rel->numeric_rank << ", contract "
                  << (rep.rank_rel->contract_holds ? "holds" : "VIOLATED") << "\n";
    for (const auto& w : rep.warnings) std::cout << "warning: " << w << "\n";
}

template <FieldScalar K>
void print_kernel_table(const KernelReport<K>& rep) {
    const auto fmt = [](const K& x) { return scalar_str(x); };
    std::cout << "field " << rep.field << ", degree " << rep.n << "\n";
    std::cout << "w_dim = " << rep.w_dim << "\n";
    for (const auto& q : rep.w_basis)
        std::cout << "  w basis: " << poly_pretty(q, fmt) << "   [" << poly_csv(q, fmt)
                  << "]\n";
    std::cout << "extended kernel (dim " << rep.extended_basis.size() << "):\n";
    for (const auto& q : rep.extended_basis)
        std::cout << "  " << poly_pretty(q, fmt) << "\n";
    const auto& tc = rep.thm_checks;
    if (!tc.applicable) {
        std::cout << "structure checks: vacuous (w_dim = 0)\n";
        return;
    }
    std::cout << "structure checks: degree_bounds " << (tc.degree_bounds ? "PASS" : "FAIL")
              << ", square_divisor " << (tc.square_divisor ? "PASS" : "FAIL");
    if (tc.quadratic_divisor)
        std::cout << " (witness " << poly_pretty(*tc.quadratic_divisor, fmt) << ")";
    std::cout << ", quadratic_elements_divide "
              << (tc.quadratic_elements_divide ? "PASS" : "FAIL") << ", square_law "
              << (tc.square_law ? "PASS" : "FAIL");
    if (tc.square_scale) std::cout << " (c = " << scalar_str(*tc.square_scale) << ")";
    std::cout << "\n";
    for (const auto& msg : tc.failures) std::cout << "  counterexample: " << msg << "\n";
}

int run_analyze(const std::string& poly_text, bool monicize_flag, bool json,
                const Options& opts) {
    ParsedInput in = parse_input(poly_text, monicize_flag);
    const AnalysisReport rep = analyze(in.f, in.exact, opts, in.echo, in.monicized);
    if (json)
        std::cout << emit(rep).dump(2) << "\n";
    else
        print_analysis_table(rep);
    return 0;
}

int run_kernel(const std::string& poly_text, std::optional<std::uint64_t> characteristic,
               bool monicize_flag, bool json) {
    const auto normalize = [&](auto f) {
        if (!f.is_zero() && !f.is_monic()) {
            if (!monicize_flag)
                throw DomainError("input is not monic; pass --monicize to normalize");
            f = monicize(f);
        }
        return f;
    };
    if (characteristic) {
        if (!is_probable_prime(*characteristic))
            throw ParseError("--char must be prime, got " + std::to_string(*characteristic));
        const std::uint64_t p = *characteristic;
        auto f = normalize(parse_poly<PrimeFieldElement>(
            poly_text, [p](std::string_view tok) { return parse_prime_field(tok, p); }));
        const auto rep = kernel_report(f);
        if (json)
            std::cout << emit(rep).dump(2) << "\n";
        else
            print_kernel_table(rep);
        return 0;
    }
    auto g = normalize(parse_poly<GaussianRational>(
        poly_text, [](std::string_view tok) { return parse_gaussian_rational(tok); }));
    bool all_real = true;
    for (const auto& c : g.coefficients()) all_real = all_real && c.im().is_zero();
    if (all_real) {
        std::vector<Rational> coeffs;
        for (const auto& c : g.coefficients()) coeffs.push_back(c.re());
        const auto rep = kernel_report(Poly<Rational>(std::move(coeffs)));
        if (json)
            std::cout << emit(rep).dump(2) << "\n";
        else
            print_kernel_table(rep);
        return 0;
    }
    const auto rep = kernel_report(g);
    if (json)
        std::cout << emit(rep).dump(2) << "\n";
    else
        print_kernel_table(rep);
    return 0;
}

int run_verify(const std::string& filter, const std::string& fault_name, bool json) {
    InjectedFault fault = InjectedFault::none;
    if (fault_name == "rees-sign") fault = InjectedFault::rees_sign_flip;
    else if (!fault_name.empty()) throw ParseError("unknown fault '" + fault_name + "'");

    const auto items = run_verify_corpus(filter, fault);
    if (items.empty()) throw ParseError("filter '" + filter + "' matches no items");

    std::vector<std::string> failed;
    if (json) {
        Json arr = Json::array();
        for (const auto& item : items) {
            arr.push_back(emit(item));
            if (!item.passed) failed.push_back(item.name);
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& item : items) {
            std::cout << (item.passed ? "PASS" : "FAIL") << "  " << item.name << "  ("
                      << item.detail << ")\n";
            if (!item.passed) failed.push_back(item.name);
        }
        std::cout << (items.size() - failed.size()) << "/" << items.size() << " passed\n";
    }
    if (!failed.empty()) {
        std::cerr << "failed items:";
        for (const auto& name : failed) std::cerr << " " << name;
        std::cerr << "\n";
        return 3;
    }
    return 0;
}

int run_random(int n, int trials, std::uint64_t seed, bool json, const Options& opts) {
    const RandomTrialsReport rep = run_random_trials(n, trials, seed, opts);
    if (json) {
        std::cout << emit(rep).dump(2) << "\n";
        return 0;
    }
    std::cout << "degree " << rep.n << ", " << rep.trials << " trials, seed " << rep.seed
              << " (" << rep.rejected_draws << " rejected draws)\n";
    std::cout << "rank histogram:";
    for (const auto& [rank, count] : rep.rank_histogram)
        std::cout << "  " << rank << " -> " << count;
    std::cout << "\nmax kernel residual " << rep.max_kernel_residual
              << ", max hypersurface residual " << rep.max_hypersurface_residual << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiplier-map analysis for monic complex polynomials"};
    app.require_subcommand(1);

    const char* env_format = std::getenv("MULTMAP_FORMAT");
    const bool json_default = env_format && std::string(env_format) == "json";

    Options opts;
    std::string poly_text;
    bool monicize_flag = false;
    bool json_analyze = json_default;
    bool json_kernel = json_default;
    bool json_verify = json_default;
    bool json_random = json_default;

    auto* analyze_cmd = app.add_subcommand(
        "analyze", "roots, multipliers, Jacobians by both routes, rank");
    analyze_cmd->add_option("--poly", poly_text, "coefficients, constant term first")
        ->required();
    analyze_cmd->add_flag("--monicize", monicize_flag, "divide by the leading coefficient");
    analyze_cmd->add_flag("--json", json_analyze, "JSON report");
    analyze_cmd->add_option("--tol", opts.tol, "root iteration tolerance");
    analyze_cmd->add_option("--max-iter", opts.max_iter, "root iteration cap");
    analyze_cmd->add_option("--gap-floor", opts.gap_floor, "certification gap floor");
    analyze_cmd->add_option("--residual-bound", opts.residual_bound,
                            "certification residual bound");
    analyze_cmd->add_option("--rank-tol", opts.rank_tol, "numerical rank tolerance");

    std::optional<std::uint64_t> characteristic;
    auto* kernel_cmd =
        app.add_subcommand("kernel", "exact divisibility kernel W(f) and structure checks");
    kernel_cmd->add_option("--poly", poly_text, "exact coefficients, constant term first")
        ->required();
    kernel_cmd->add_option("--char", characteristic, "prime characteristic for F_p input");
    kernel_cmd->add_flag("--monicize", monicize_flag, "divide by the leading coefficient");
    kernel_cmd->add_flag("--json", json_kernel, "JSON report");

    std::string filter;
    std::string fault_name;
    auto* verify_cmd =
        app.add_subcommand("verify-paper", "run the built-in verification corpus");
    verify_cmd->add_option("--filter", filter, "run only items whose name contains this");
    verify_cmd->add_option("--inject-fault", fault_name,
                           "self-test hook; 'rees-sign' breaks the minor-law items");
    verify_cmd->add_flag("--json", json_verify, "JSON report");

    int random_n = 0;
    int random_trials = 20;
    std::uint64_t random_seed = 0;
    auto* random_cmd =
        app.add_subcommand("random", "randomized rank statistics on certified draws");
    random_cmd->add_option("--n", random_n, "degree, between 2 and 12")->required();
    random_cmd->add_option("--trials", random_trials, "number of certified draws");
    random_cmd->add_option("--seed", random_seed, "RNG seed");
    random_cmd->add_flag("--json", json_random, "JSON report");
    random_cmd->add_option("--tol", opts.tol, "root iteration tolerance");
    random_cmd->add_option("--gap-floor", opts.gap_floor, "certification gap floor");
    random_cmd->add_option("--rank-tol", opts.rank_tol, "numerical rank tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(analyze_cmd))
            return run_analyze(poly_text, monicize_flag, json_analyze, opts);
        if (app.got_subcommand(kernel_cmd))
            return run_kernel(poly_text, characteristic, monicize_flag, json_kernel);
        if (app.got_subcommand(verify_cmd)) return run_verify(filter, fault_name, json_verify);
        if (app.got_subcommand(random_cmd))
            return run_random(random_n, random_trials, random_seed, json_random, opts);
    } catch (const ConditioningError& e) {
        std::cerr << "conditioning error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
