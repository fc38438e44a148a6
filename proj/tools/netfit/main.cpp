#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "netfit/error.hpp"

namespace fs = std::filesystem;
using namespace netfit::cli;

namespace {

void add_seed(CLI::App* cmd, Options& o) {
    cmd->add_option("--seed", o.seed, "Master seed (omit to draw one and print it)");
}
void add_jobs(CLI::App* cmd, Options& o) {
    cmd->add_option("--jobs", o.jobs, "Worker threads, 0 = hardware concurrency");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fit random-graph models to networks and compare them"};
    app.set_config("--config", "", "Key = value file with option defaults");
    app.require_subcommand(1);

    Options o;
    std::vector<fs::path> inputs;
    fs::path input;

    auto* measure = app.add_subcommand("measure", "Feature CSV for edge-list files");
    measure->add_option("files", inputs, "Edge lists")->required();
    measure->add_option("--out", o.out, "Output CSV (default stdout)");

    auto* fit = app.add_subcommand("fit", "Fit models to one graph; JSON fit reports");
    fit->add_option("graph", input, "Edge list")->required();
    fit->add_option("--model", o.model, "all or a comma list of WS,WS_STD,CBA,DD,Com,2K");
    fit->add_option("--replicates", o.replicates, "Graphs per candidate parameter (default 5)");
    fit->add_option("--out", o.out, "Output JSON (default stdout)");
    add_seed(fit, o);

    auto* gen = app.add_subcommand("generate", "Edge list from a parameter or fit JSON");
    gen->add_option("params", input, "JSON with model and params")->required();
    gen->add_option("--out", o.out, "Output edge list (default stdout)");
    add_seed(gen, o);

    auto* pipeline = app.add_subcommand("pipeline", "Measure, fit and regenerate every graph of a manifest");
    pipeline->add_option("manifest", input, "CSV with name,path,domain")->required();
    pipeline->add_option("--out", o.out, "Output directory")->required();
    pipeline->add_option("--replicates", o.replicates, "Graphs per candidate parameter (default 5)");
    add_seed(pipeline, o);
    add_jobs(pipeline, o);

    auto* gof = app.add_subcommand("gof", "Canberra distances, correlations and PCA of a dataset");
    gof->add_option("dataset", input, "Dataset CSV")->required();
    gof->add_option("--out", o.out, "Output directory")->required();

    auto* stability = app.add_subcommand("stability", "Replicate spread of every fitted model");
    stability->add_option("input", input, "Edge list, or fit JSON from 'fit'")->required();
    stability->add_option("--out", o.out, "Output directory")->required();
    stability->add_option("--replicates", o.replicates, "Graphs per model (default 30)");
    stability->add_option("--model", o.model, "all or a comma list of models");
    add_seed(stability, o);
    add_jobs(stability, o);

    auto* classify = app.add_subcommand("classify", "Cross-validated tree or forest on a dataset");
    classify->add_option("dataset", input, "Dataset CSV")->required();
    classify->add_option("--out", o.out, "Output directory")->required();
    classify->add_option("--task", o.task, "domain, category or subcategory")->capture_default_str();
    classify->add_option("--model", o.model, "tree or forest (default forest)");
    classify->add_option("--folds", o.folds, "Cross-validation folds")->capture_default_str();
    classify->add_option("--domain", o.domain, "Restrict to one domain");
    add_seed(classify, o);
    add_jobs(classify, o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*measure) return cmd_measure(inputs, o);
        if (*fit) return cmd_fit(input, o);
        if (*gen) return cmd_generate(input, o);
        if (*pipeline) return cmd_pipeline(input, o);
        if (*gof) return cmd_gof(input, o);
        if (*stability) return cmd_stability(input, o);
        if (*classify) return cmd_classify(input, o);
    } catch (const std::exception& e) {
        std::cerr << "netfit: error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
