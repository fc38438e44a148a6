#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "netfit/rng.hpp"

namespace netfit::cli {

/// Flags shared by the subcommands; each one reads what it needs.
struct Options {
    std::optional<Seed> seed;
    std::size_t jobs = 0;  // 0: hardware concurrency
    std::filesystem::path out;
    std::size_t replicates = 0;  // 0: the command's default
    std::size_t folds = 5;
    std::string model;
    std::string task = "subcategory";
    std::string domain;
};

/// The explicit seed, or a fresh one from the OS that is echoed to stderr.
Seed resolve_seed(const std::optional<Seed>& seed);

// Each command returns the process exit code: 0 when every item succeeded,
// 1 when some items failed. Fatal errors propagate as exceptions.
int cmd_measure(const std::vector<std::filesystem::path>& inputs, const Options& options);
int cmd_fit(const std::filesystem::path& input, const Options& options);
int cmd_generate(const std::filesystem::path& params, const Options& options);
int cmd_pipeline(const std::filesystem::path& manifest, const Options& options);
int cmd_gof(const std::filesystem::path& dataset, const Options& options);
int cmd_stability(const std::filesystem::path& input, const Options& options);
int cmd_classify(const std::filesystem::path& dataset, const Options& options);

}  // namespace netfit::cli
