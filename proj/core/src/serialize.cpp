#include "netfit/serialize.hpp"

#include <fstream>

#include "netfit/error.hpp"

namespace netfit {

namespace {

template <typename T>
T field(const Json& object, const char* key) {
    auto it = object.find(key);
    if (it == object.end()) throw ParseError(std::string("missing field '") + key + "'");
    try {
        return it->get<T>();
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad field '") + key + "': " + e.what());
    }
}

Json params_body(const ModelParams& params) {
    return std::visit(
        [](const auto& p) -> Json {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, WsParams>) {
                return {{"n", p.n}, {"K", p.degree}, {"p", p.p}};
            } else if constexpr (std::is_same_v<T, CbaParams>) {
                return {{"n", p.n}, {"m", p.m}, {"p", p.p}};
            } else if constexpr (std::is_same_v<T, DdParams>) {
                return {{"n", p.n}, {"p", p.p}};
            } else if constexpr (std::is_same_v<T, CommunityParams>) {
                return {{"sizes", p.sizes}, {"p_in", p.p_in}, {"p_out", p.p_out}};
            } else {
                Json rows = Json::array();
                for (const auto& [key, count] : p.jdm.entries) rows.push_back({key.first, key.second, count});
                return {{"jdm", rows}};
            }
        },
        params);
}

}  // namespace

Json model_params_json(const ModelParams& params) {
    return {{"model", model_name(params)}, {"params", params_body(params)}};
}

Json model_params_json(const ModelParams& params, Seed seed) {
    auto json = model_params_json(params);
    json["seed"] = seed;
    return json;
}

ModelParams model_params_from_json(const Json& json) {
    if (!json.is_object()) throw ParseError("model parameters must be a JSON object");
    const auto model = field<std::string>(json, "model");
    const auto it = json.find("params");
    if (it == json.end() || !it->is_object()) throw ParseError("missing object 'params'");
    const Json& p = *it;
    if (model == "WS" || model == "WS_STD")
        return WsParams{field<std::size_t>(p, "n"), field<std::size_t>(p, "K"), field<double>(p, "p")};
    if (model == "CBA")
        return CbaParams{field<std::size_t>(p, "n"), field<std::size_t>(p, "m"), field<double>(p, "p")};
    if (model == "DD") return DdParams{field<std::size_t>(p, "n"), field<double>(p, "p")};
    if (model == "Com")
        return CommunityParams{field<std::vector<std::size_t>>(p, "sizes"), field<double>(p, "p_in"),
                               field<double>(p, "p_out")};
    if (model == "2K") {
        TwoKParams out;
        for (const auto& row : field<std::vector<std::vector<std::size_t>>>(p, "jdm")) {
            if (row.size() != 3) throw ParseError("jdm rows must be [k, l, count]");
            out.jdm.add(row[0], row[1], row[2]);
        }
        return out;
    }
    throw ParseError("unknown model '" + model + "'");
}

Json fit_report_json(const FitReport& report) {
    Json json{{"model", report.model},
              {"params", params_body(report.params)},
              {"objective_value", report.objective_value},
              {"evaluations", report.evaluations},
              {"replicates_per_eval", report.replicates_per_eval},
              {"master_seed", report.master_seed}};
    if (!report.notes.empty()) json["notes"] = report.notes;
    return json;
}

FitReport fit_report_from_json(const Json& json) {
    FitReport report;
    report.model = field<std::string>(json, "model");
    report.params = model_params_from_json(json);
    report.objective_value = field<double>(json, "objective_value");
    report.evaluations = field<std::size_t>(json, "evaluations");
    report.replicates_per_eval = field<std::size_t>(json, "replicates_per_eval");
    report.master_seed = field<Seed>(json, "master_seed");
    if (json.contains("notes")) report.notes = field<std::vector<std::string>>(json, "notes");
    return report;
}

Json eval_report_json(const EvalReport& report) {
    Json hyper = Json::object();
    for (const auto& [key, value] : report.hyperparameters) hyper[key] = value;
    Json importance = Json::object();
    for (std::size_t i = 0; i < report.feature_names.size(); ++i)
        importance[report.feature_names[i]] = report.split_counts[i];

    Json json{{"task", report.task},
              {"classifier", report.classifier},
              {"domain", report.domain},
              {"classes", report.class_names},
              {"folds", report.folds},
              {"seed", report.seed},
              {"hyperparameters", hyper},
              {"fold_accuracy", report.fold_accuracy},
              {"accuracy", report.accuracy},
              {"mean_fold_accuracy", report.mean_fold_accuracy},
              {"confusion", report.confusion},
              {"split_counts", importance}};
    if (report.auc) {
        json["auc"] = *report.auc;
        json["fold_auc"] = report.fold_auc;
        json["mean_fold_auc"] = report.mean_fold_auc ? Json(*report.mean_fold_auc) : Json(nullptr);
    }
    return json;
}

std::string dump_json(const Json& json) { return json.dump(2) + "\n"; }

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace netfit
