#include "multmap/report_json.hpp"

namespace multmap {

Json emit_complex(const ComplexFloat& z) { return Json::array({z.real(), z.imag()}); }

ComplexFloat parse_complex(const Json& j) {
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

Json emit(const Options& o) {
    Json j;
    j["tol"] = o.tol;
    j["max_iter"] = o.max_iter;
    j["gap_floor"] = o.gap_floor;
    j["residual_bound"] = o.residual_bound;
    j["rank_tol"] = o.rank_tol;
    return j;
}

Options parse_options(const Json& j) {
    Options o;
    o.tol = j.at("tol").get<double>();
    o.max_iter = j.at("max_iter").get<int>();
    o.gap_floor = j.at("gap_floor").get<double>();
    o.residual_bound = j.at("residual_bound").get<double>();
    o.rank_tol = j.at("rank_tol").get<double>();
    return o;
}

Json emit(const RootSet& rs) {
    Json j;
    Json values = Json::array();
    for (const auto& r : rs.roots) values.push_back(emit_complex(r));
    j["values"] = std::move(values);
    j["residuals"] = rs.residuals;
    j["min_gap"] = rs.min_gap;
    j["iterations"] = rs.iterations;
    return j;
}

RootSet parse_root_set(const Json& j) {
    RootSet rs;
    for (const auto& v : j.at("values")) rs.roots.push_back(parse_complex(v));
    rs.residuals = j.at("residuals").get<std::vector<double>>();
    rs.min_gap = j.at("min_gap").get<double>();
    rs.iterations = j.at("iterations").get<int>();
    return rs;
}

Json emit(const JacobianReport& r) {
    Json j;
    j["route"] = r.route == JacobianRoute::coefficient_space ? "coefficient-space"
                                                             : "root-space";
    j["n"] = static_cast<int>(r.matrix.rows());
    Json m = Json::array();
    for (Eigen::Index row = 0; row < r.matrix.rows(); ++row)
        for (Eigen::Index col = 0; col < r.matrix.cols(); ++col)
            m.push_back(emit_complex(r.matrix(row, col)));
    j["matrix"] = std::move(m);
    j["singular_values"] = r.singular_values;
    j["numerical_rank"] = r.numerical_rank;
    j["rank_tol"] = r.rank_tol;
    j["kernel_residual"] = r.kernel_residual;
    Json minors = Json::array();
    for (const auto& mc : r.minors) {
        Json e;
        e["index"] = mc.index;
        e["value"] = emit_complex(mc.value);
        e["predicted"] = emit_complex(mc.predicted);
        e["relative_deviation"] = mc.relative_deviation;
        minors.push_back(std::move(e));
    }
    j["minors"] = std::move(minors);
    j["hypersurface_residual"] = r.hypersurface_residual;
    return j;
}

JacobianReport parse_jacobian_report(const Json& j) {
    JacobianReport r;
    r.route = j.at("route").get<std::string>() == "coefficient-space"
                  ? JacobianRoute::coefficient_space
                  : JacobianRoute::root_space;
    const int n = j.at("n").get<int>();
    r.matrix.resize(n, n);
    const Json& m = j.at("matrix");
    for (int row = 0; row < n; ++row)
        for (int col = 0; col < n; ++col)
            r.matrix(row, col) = parse_complex(m.at(static_cast<std::size_t>(row) * n + col));
    r.singular_values = j.at("singular_values").get<std::vector<double>>();
    r.numerical_rank = j.at("numerical_rank").get<int>();
    r.rank_tol = j.at("rank_tol").get<double>();
    r.kernel_residual = j.at("kernel_residual").get<double>();
    for (const auto& e : j.at("minors")) {
        MinorCheck mc;
        mc.index = e.at("index").get<int>();
        mc.value = parse_complex(e.at("value"));
        mc.predicted = parse_complex(e.at("predicted"));
        mc.relative_deviation = e.at("relative_deviation").get<double>();
        r.minors.push_back(mc);
    }
    r.hypersurface_residual = j.at("hypersurface_residual").get<double>();
    return r;
}

Json emit(const RankRelation& r) {
    Json j;
    j["n"] = r.n;
    j["exact_w_dim"] = r.exact_w_dim;
    j["numeric_rank"] = r.numeric_rank;
    j["contract_holds"] = r.contract_holds;
    return j;
}

RankRelation parse_rank_relation(const Json& j) {
    RankRelation r;
    r.n = j.at("n").get<int>();
    r.exact_w_dim = j.at("exact_w_dim").get<int>();
    r.numeric_rank = j.at("numeric_rank").get<int>();
    r.contract_holds = j.at("contract_holds").get<bool>();
    return r;
}

Json emit(const AnalysisReport& r) {
    Json j;
    Json input;
    input["poly"] = r.input_poly;
    input["monicized"] = r.monicized;
    input["exact"] = r.exact_input;
    j["input"] = std::move(input);
    j["options"] = emit(r.options);
    j["roots"] = emit(r.roots);
    j["certified"] = r.certified;
    Json mult = Json::array();
    for (const auto& m : r.multipliers) mult.push_back(emit_complex(m));
    j["multipliers"] = std::move(mult);
    j["jacobian_coefficient"] = emit(r.jacobian_coefficient);
    j["jacobian_root"] = emit(r.jacobian_root);
    j["rank_relation"] = r.rank_rel ? emit(*r.rank_rel) : Json();
    j["warnings"] = r.warnings;
    return j;
}

AnalysisReport parse_analysis_report(const Json& j) {
    AnalysisReport r;
    const Json& input = j.at("input");
    r.input_poly = input.at("poly").get<std::string>();
    r.monicized = input.at("monicized").get<bool>();
    r.exact_input = input.at("exact").get<bool>();
    r.options = parse_options(j.at("options"));
    r.roots = parse_root_set(j.at("roots"));
    r.certified = j.at("certified").get<bool>();
    for (const auto& m : j.at("multipliers")) r.multipliers.push_back(parse_complex(m));
    r.jacobian_coefficient = parse_jacobian_report(j.at("jacobian_coefficient"));
    r.jacobian_root = parse_jacobian_report(j.at("jacobian_root"));
    if (!j.at("rank_relation").is_null())
        r.rank_rel = parse_rank_relation(j.at("rank_relation"));
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
}

Json emit(const RandomTrialsReport& r) {
    Json j;
    j["n"] = r.n;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["options"] = emit(r.options);
    Json hist = Json::object();
    for (const auto& [rank, count] : r.rank_histogram) hist[std::to_string(rank)] = count;
    j["rank_histogram"] = std::move(hist);
    j["max_kernel_residual"] = r.max_kernel_residual;
    j["max_hypersurface_residual"] = r.max_hypersurface_residual;
    j["rejected_draws"] = r.rejected_draws;
    return j;
}

RandomTrialsReport parse_random_trials_report(const Json& j) {
    RandomTrialsReport r;
    r.n = j.at("n").get<int>();
    r.trials = j.at("trials").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.options = parse_options(j.at("options"));
    for (const auto& [key, value] : j.at("rank_histogram").items())
        r.rank_histogram[std::stoi(key)] = value.get<int>();
    r.max_kernel_residual = j.at("max_kernel_residual").get<double>();
    r.max_hypersurface_residual = j.at("max_hypersurface_residual").get<double>();
    r.rejected_draws = j.at("rejected_draws").get<int>();
    return r;
}

Json emit(const CorpusItem& item) {
    Json j;
    j["name"] = item.name;
    j["passed"] = item.passed;
    j["detail"] = item.detail;
    return j;
}

} // namespace multmap
