#pragma once

#include <string>

#include <json.hpp>

#include "netfit/classify.hpp"
#include "netfit/fitting.hpp"
#include "netfit/generators.hpp"
#include "netfit/rng.hpp"

namespace netfit {

using Json = nlohmann::json;

/// {"model": name, "params": {...}}. 2K stores its matrix as [[k, l, count], ...].
Json model_params_json(const ModelParams& params);
/// Adds "seed" to model_params_json.
Json model_params_json(const ModelParams& params, Seed seed);
/// Accepts the objects written above; "WS_STD" reads as WS parameters.
/// Throws ParseError on unknown models or missing fields.
ModelParams model_params_from_json(const Json& json);

Json fit_report_json(const FitReport& report);
FitReport fit_report_from_json(const Json& json);

Json eval_report_json(const EvalReport& report);

/// Two-space indentation with a trailing newline.
std::string dump_json(const Json& json);
Json load_json_file(const std::string& path);

}  // namespace netfit
