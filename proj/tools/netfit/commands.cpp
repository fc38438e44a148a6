#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "files.hpp"
#include "netfit/classify.hpp"
#include "netfit/dataset.hpp"
#include "netfit/error.hpp"
#include "netfit/fitting.hpp"
#include "netfit/gof.hpp"
#include "netfit/metrics.hpp"
#include "netfit/parallel.hpp"
#include "netfit/serialize.hpp"
#include "netfit/stability.hpp"

namespace fs = std::filesystem;

namespace netfit::cli {

namespace {

void warn(const std::string& message) { std::cerr << "netfit: " << message << '\n'; }

/// Writes to `path`, or to stdout when it is empty.
void emit(const fs::path& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
    } else {
        write_text(path, content);
    }
}

const std::vector<std::string> kFitModels{"WS", "WS_STD", "CBA", "DD", "Com", "2K"};

FitReport fit_one(const Graph& g, const std::string& model, const FitBudget& budget) {
    FitReport report;
    if (model == "WS") report = fit_ws(g, WsTarget::clustering, budget);
    else if (model == "WS_STD") report = fit_ws(g, WsTarget::degree_std, budget);
    else if (model == "CBA") report = fit_cba(g, budget);
    else if (model == "DD") report = fit_dd(g, budget);
    else if (model == "Com") report = fit_community(g, budget.seed);
    else if (model == "2K") report = fit_2k(g);
    else throw ParameterError("unknown model '" + model + "'");
    report.master_seed = budget.seed;
    return report;
}

std::vector<std::string> selected_models(const std::string& flag) {
    if (flag.empty() || flag == "all") return kFitModels;
    std::vector<std::string> out;
    std::stringstream list(flag);
    std::string item;
    while (std::getline(list, item, ',')) {
        if (std::find(kFitModels.begin(), kFitModels.end(), item) == kFitModels.end())
            throw ParameterError("unknown model '" + item + "'");
        out.push_back(item);
    }
    return out;
}

DatasetTable load_dataset(const fs::path& path) {
    std::istringstream in(read_text(path));
    try {
        return read_dataset_csv(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::string to_text(const std::function<void(std::ostream&)>& writer) {
    std::ostringstream out;
    writer(out);
    return out.str();
}

}  // namespace

Seed resolve_seed(const std::optional<Seed>& seed) {
    if (seed) return *seed;
    std::random_device device;
    const Seed fresh = (static_cast<Seed>(device()) << 32) ^ device();
    std::cerr << "netfit: seed " << fresh << '\n';
    return fresh;
}

int cmd_measure(const std::vector<fs::path>& inputs, const Options& options) {
    DatasetTable table;
    std::map<std::string, int> used;
    int failures = 0;
    for (const auto& path : inputs) {
        try {
            const auto g = read_edge_list(path);
            DatasetRow row;
            row.name = file_stem_for(path.stem().string());
            if (const int n = used[row.name]++; n > 0) row.name += "-" + std::to_string(n + 1);
            row.features = feature_vector(g);
            table.rows.push_back(std::move(row));
        } catch (const Error& e) {
            warn(e.what());
            ++failures;
        }
    }
    emit(options.out, to_text([&](std::ostream& out) { write_dataset_csv(out, table); }));
    return failures ? 1 : 0;
}

int cmd_fit(const fs::path& input, const Options& options) {
    const auto g = read_edge_list(input);
    FitBudget budget;
    budget.seed = resolve_seed(options.seed);
    if (options.replicates) budget.replicates = options.replicates;

    Json reports = Json::array();
    int failures = 0;
    for (const auto& model : selected_models(options.model)) {
        try {
            reports.push_back(fit_report_json(fit_one(g, model, budget)));
        } catch (const Error& e) {
            warn(input.string() + ": " + model + ": " + e.what());
            ++failures;
        }
    }
    emit(options.out, dump_json(reports));
    return failures ? 1 : 0;
}

int cmd_generate(const fs::path& params_path, const Options& options) {
    const auto json = load_json_file(params_path.string());
    const auto params = model_params_from_json(json);
    std::optional<Seed> seed = options.seed;
    if (!seed && json.contains("seed")) seed = json.at("seed").get<Seed>();
    const auto g = generate(params, resolve_seed(seed));
    emit(options.out, to_edge_list(g));
    return 0;
}

namespace {

struct GraphOutcome {
    std::vector<DatasetRow> rows;
    Json fits = Json::array();
    std::vector<std::pair<std::string, std::string>> graphs;  // file name, edge list
    std::vector<std::string> failures;
};

GraphOutcome run_one(const ManifestEntry& entry, Seed master, std::size_t replicates) {
    GraphOutcome outcome;
    auto fail = [&](const std::string& what) { outcome.failures.push_back(entry.name + ": " + what); };

    Graph g;
    try {
        g = read_edge_list(entry.path);
        outcome.rows.push_back({entry.name, feature_vector(g), entry.domain, "real", "Real"});
    } catch (const Error& e) {
        fail(e.what());
        return outcome;
    }

    const Seed name_seed = derive_seed(master, fnv1a64(entry.name));
    FitBudget budget;
    budget.seed = name_seed;
    if (replicates) budget.replicates = replicates;
    const std::string stem = file_stem_for(entry.name);

    for (const auto& model : kFitModels) {
        try {
            const auto report = fit_one(g, model, budget);
            outcome.fits.push_back(fit_report_json(report));
            const auto counterpart = generate(report.params, derive_seed(name_seed, fnv1a64(model)));
            outcome.graphs.emplace_back(stem + "." + model + ".edges", to_edge_list(counterpart));
            outcome.rows.push_back({entry.name, feature_vector(counterpart), entry.domain, "model", model});
        } catch (const Error& e) {
            fail(model + ": " + e.what());
        }
    }
    return outcome;
}

}  // namespace

int cmd_pipeline(const fs::path& manifest, const Options& options) {
    if (options.out.empty()) throw ParameterError("pipeline needs --out");
    const auto entries = read_manifest(manifest);
    const Seed seed = resolve_seed(options.seed);

    std::vector<GraphOutcome> outcomes(entries.size());
    parallel_for(entries.size(), options.jobs,
                 [&](std::size_t i) { outcomes[i] = run_one(entries[i], seed, options.replicates); });

    DatasetTable table;
    Json failures = Json::array();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        auto& outcome = outcomes[i];
        for (auto& row : outcome.rows) table.rows.push_back(std::move(row));
        for (const auto& f : outcome.failures) {
            warn(f);
            failures.push_back(f);
        }
        if (!outcome.fits.empty())
            write_text(options.out / "fits" / (file_stem_for(entries[i].name) + ".json"), dump_json(outcome.fits));
        for (const auto& [file, text] : outcome.graphs) write_text(options.out / "graphs" / file, text);
    }
    table.validate();
    write_text(options.out / "dataset.csv", to_text([&](std::ostream& out) { write_dataset_csv(out, table); }));

    Json summary{{"seed", seed},
                 {"graphs", entries.size()},
                 {"rows", table.rows.size()},
                 {"replicates_per_eval", options.replicates ? options.replicates : FitBudget{}.replicates},
                 {"failures", failures}};
    write_text(options.out / "summary.json", dump_json(summary));
    return failures.empty() ? 0 : 1;
}

int cmd_gof(const fs::path& dataset, const Options& options) {
    if (options.out.empty()) throw ParameterError("gof needs --out");
    const auto table = load_dataset(dataset);

    const auto distances = mean_distance_matrix(table);
    for (const auto& name : distances.unmatched) warn("no counterpart for " + name);
    write_text(options.out / "distances.csv", to_text([&](std::ostream& out) { write_distance_csv(out, distances); }));

    int failures = 0;
    auto correlation = [&](const std::optional<std::string>& domain, const std::string& file) {
        try {
            const auto matrix = correlation_matrix(table, domain);
            write_text(options.out / file, to_text([&](std::ostream& out) { write_correlation_csv(out, matrix); }));
        } catch (const DomainError& e) {
            warn("correlation " + domain.value_or("all") + ": " + e.what());
            ++failures;
        }
    };
    correlation(std::nullopt, "correlation.csv");
    for (auto domain : kDomains) {
        const bool present = std::any_of(table.rows.begin(), table.rows.end(),
                                         [&](const DatasetRow& r) { return r.domain == domain; });
        if (present) correlation(std::string(domain), "correlation_" + std::string(domain) + ".csv");
    }

    try {
        const auto pca = pca_project(table);
        write_text(options.out / "pca.csv", to_text([&](std::ostream& out) { write_pca_csv(out, table, pca); }));
    } catch (const DomainError& e) {
        warn(std::string("pca: ") + e.what());
        ++failures;
    }
    return failures ? 1 : 0;
}

int cmd_stability(const fs::path& input, const Options& options) {
    if (options.out.empty()) throw ParameterError("stability needs --out");
    const Seed seed = resolve_seed(options.seed);
    const std::size_t replicates = options.replicates ? options.replicates : 30;
    const auto models = selected_models(options.model);

    std::vector<FitReport> fits;
    if (input.extension() == ".json") {
        const auto json = load_json_file(input.string());
        for (const auto& item : json.is_array() ? json : Json::array({json})) {
            auto report = fit_report_from_json(item);
            if (std::find(models.begin(), models.end(), report.model) != models.end())
                fits.push_back(std::move(report));
        }
    } else {
        const auto g = read_edge_list(input);
        FitBudget budget;
        budget.seed = derive_seed(seed, fnv1a64("fit"));
        for (const auto& model : models) fits.push_back(fit_one(g, model, budget));
    }
    if (fits.empty()) throw ParameterError("no fits selected");

    const auto summary = stability_run(fits, replicates, seed, options.jobs);
    write_text(options.out / "stability.csv", to_text([&](std::ostream& out) { write_stability_csv(out, summary); }));

    Json fit_json = Json::array();
    std::size_t failures = 0;
    Json messages = Json::array();
    for (const auto& f : fits) fit_json.push_back(fit_report_json(f));
    for (const auto& m : summary.models) {
        failures += m.failures;
        for (const auto& msg : m.failure_messages) {
            warn(m.model + ": " + msg);
            messages.push_back(m.model + ": " + msg);
        }
    }
    Json meta{{"input", input.filename().string()},
              {"replicates", replicates},
              {"seed", seed},
              {"failures", messages},
              {"fits", fit_json}};
    write_text(options.out / "stability_meta.json", dump_json(meta));
    return failures ? 1 : 0;
}

int cmd_classify(const fs::path& dataset, const Options& options) {
    if (options.out.empty()) throw ParameterError("classify needs --out");
    const auto table = load_dataset(dataset);
    const Task task = parse_task(options.task);
    const Classifier classifier = parse_classifier(options.model.empty() ? "forest" : options.model);
    const Seed seed = resolve_seed(options.seed);

    std::vector<std::optional<std::string>> scopes;
    if (!options.domain.empty()) {
        scopes.emplace_back(options.domain);
    } else if (task == Task::domain) {
        scopes.emplace_back(std::nullopt);
    } else {
        for (auto domain : kDomains)
            if (std::any_of(table.rows.begin(), table.rows.end(),
                            [&](const DatasetRow& r) { return r.domain == domain; }))
                scopes.emplace_back(std::string(domain));
    }

    int failures = 0;
    for (const auto& scope : scopes) {
        std::string stem = to_string(task);
        if (scope) stem += "_" + *scope;
        stem += "_" + to_string(classifier);
        try {
            const auto report = run_task(table, task, classifier, options.folds, seed, scope, options.jobs);
            write_text(options.out / ("eval_" + stem + ".json"), dump_json(eval_report_json(report)));
            write_text(options.out / ("confusion_" + stem + ".csv"),
                       to_text([&](std::ostream& out) { write_confusion_csv(out, report); }));
        } catch (const ParameterError& e) {
            warn(stem + ": " + e.what());
            ++failures;
        }
    }
    return failures ? 1 : 0;
}

}  // namespace netfit::cli
