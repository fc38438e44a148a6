#include "netfit/stability.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>

#include "netfit/dataset.hpp"
#include "netfit/error.hpp"
#include "netfit/parallel.hpp"

namespace netfit {

MetricSummary summarize(std::span<const double> values) {
    if (values.empty()) throw DomainError("cannot summarise an empty sample");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();

    auto quantile = [&](double q) {
        const double h = (static_cast<double>(n) - 1.0) * q;
        const auto lo = static_cast<std::size_t>(std::floor(h));
        const std::size_t hi = std::min(lo + 1, n - 1);
        return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
    };

    MetricSummary s;
    if (sorted.front() == sorted.back()) {
        s.mean = s.min = s.q1 = s.median = s.q3 = s.max = sorted.front();
        return s;
    }
    double total = 0.0;
    for (double v : sorted) total += v;
    s.mean = total / static_cast<double>(n);
    double spread = 0.0;
    for (double v : sorted) spread += (v - s.mean) * (v - s.mean);
    s.std = n > 1 ? std::sqrt(spread / static_cast<double>(n - 1)) : 0.0;
    s.min = sorted.front();
    s.q1 = quantile(0.25);
    s.median = quantile(0.5);
    s.q3 = quantile(0.75);
    s.max = sorted.back();
    return s;
}

const MetricSummary& ModelStability::metric(std::string_view name) const {
    for (std::size_t i = 0; i < FeatureVector::names.size(); ++i)
        if (FeatureVector::names[i] == name) return metrics[i];
    throw ParameterError("unknown metric " + std::string(name));
}

const ModelStability& StabilitySummary::model(std::string_view name) const {
    for (const auto& m : models)
        if (m.model == name) return m;
    throw ParameterError("no stability summary for model " + std::string(name));
}

StabilitySummary stability_run(std::span<const FitReport> fits, std::size_t replicates, Seed seed, std::size_t jobs) {
    if (replicates < 2) throw ParameterError("stability needs at least two replicates");

    StabilitySummary summary;
    summary.replicates = replicates;
    summary.seed = seed;

    for (const auto& fit : fits) {
        const Seed model_seed = derive_seed(seed, fnv1a64(fit.model));
        std::vector<std::optional<FeatureVector>> features(replicates);
        std::vector<std::string> errors(replicates);
        parallel_for(replicates, jobs, [&](std::size_t r) {
            try {
                features[r] = feature_vector(generate(fit.params, derive_seed(model_seed, r)));
            } catch (const std::exception& e) {
                errors[r] = e.what();
            }
        });

        ModelStability entry;
        entry.model = fit.model;
        entry.replicates = replicates;
        std::array<std::vector<double>, 8> columns;
        for (std::size_t r = 0; r < replicates; ++r) {
            if (!features[r]) {
                ++entry.failures;
                entry.failure_messages.push_back(errors[r]);
                continue;
            }
            const auto values = features[r]->values();
            for (std::size_t i = 0; i < 8; ++i) columns[i].push_back(values[i]);
        }
        if (2 * entry.failures > replicates)
            throw Error("stability: " + fit.model + " failed in " + std::to_string(entry.failures) + " of " +
                        std::to_string(replicates) + " replicates");
        for (std::size_t i = 0; i < 8; ++i) entry.metrics[i] = summarize(columns[i]);
        summary.models.push_back(std::move(entry));
    }
    return summary;
}

void write_stability_csv(std::ostream& out, const StabilitySummary& summary) {
    out << "model,metric,mean,std,min,q1,median,q3,max,failures\n";
    for (const auto& m : summary.models) {
        for (std::size_t i = 0; i < FeatureVector::names.size(); ++i) {
            const auto& s = m.metrics[i];
            out << m.model << ',' << FeatureVector::names[i] << ',' << format_number(s.mean) << ','
                << format_number(s.std) << ',' << format_number(s.min) << ',' << format_number(s.q1) << ','
                << format_number(s.median) << ',' << format_number(s.q3) << ',' << format_number(s.max) << ','
                << m.failures << '\n';
        }
    }
}

}  // namespace netfit
