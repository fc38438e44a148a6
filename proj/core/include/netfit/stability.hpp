#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "netfit/fitting.hpp"
#include "netfit/metrics.hpp"

namespace netfit {

/// Five-number summary plus mean and sample standard deviation.
struct MetricSummary {
    double mean = 0;
    double std = 0;
    double min = 0;
    double q1 = 0;
    double median = 0;
    double q3 = 0;
    double max = 0;
};

/// Quartiles by linear interpolation between order statistics (type 7).
/// Throws DomainError on empty input.
MetricSummary summarize(std::span<const double> values);

struct ModelStability {
    std::string model;
    /// Indexed like FeatureVector::names.
    std::array<MetricSummary, 8> metrics{};
    std::size_t replicates = 0;
    std::size_t failures = 0;
    std::vector<std::string> failure_messages;

    const MetricSummary& metric(std::string_view name) const;
};

struct StabilitySummary {
    std::vector<ModelStability> models;
    std::size_t replicates = 0;
    Seed seed = 0;

    const ModelStability& model(std::string_view name) const;
};

/// Generates `replicates` graphs from every fit and summarises their feature
/// vectors. Replicate seeds depend on (seed, model name, replicate index) only,
/// so neither fit order nor `jobs` changes the result. Failed replicates are
/// excluded and counted; more than half failing raises Error.
StabilitySummary stability_run(std::span<const FitReport> fits, std::size_t replicates, Seed seed,
                               std::size_t jobs = 1);

/// CSV columns: model, metric, mean, std, min, q1, median, q3, max, failures.
void write_stability_csv(std::ostream& out, const StabilitySummary& summary);

}  // namespace netfit
