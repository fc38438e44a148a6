#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netfit/dataset.hpp"
#include "netfit/linalg.hpp"

namespace netfit {

/// Sum of |p_i - q_i| / (|p_i| + |q_i|), with 0/0 terms counted as 0.
/// Throws ParameterError on a length mismatch or empty vectors.
double canberra_distance(std::span<const double> p, std::span<const double> q);

/// Mean Canberra distances between subcategories of one domain, pairing rows
/// that share a name.
struct DistanceMatrix {
    std::string domain;
    std::vector<std::string> subcategories;
    /// mean[i][j] is empty when no name has both subcategories.
    std::vector<std::vector<std::optional<double>>> mean;
    std::vector<std::vector<std::size_t>> pairs;

    std::optional<double> at(std::string_view a, std::string_view b) const;
};

struct DistanceReport {
    std::vector<DistanceMatrix> domains;
    /// "name/subcategory" of rows with no partner sharing their name.
    std::vector<std::string> unmatched;
};

/// Distances use FeatureVector::topology() (size is excluded).
DistanceReport mean_distance_matrix(const DatasetTable& table);

struct CorrelationMatrix {
    std::string domain;  // empty: all rows
    std::size_t rows = 0;
    std::array<std::array<double, 7>, 7> values{};
    /// Columns with zero variance; their off-diagonal entries are 0.
    std::array<bool, 7> zero_variance{};
};

/// Pearson correlations between the seven topology columns. Throws
/// DomainError when fewer than three rows survive the filter.
CorrelationMatrix correlation_matrix(const DatasetTable& table, std::optional<std::string> domain = {});

struct PcaResult {
    std::vector<std::array<double, 2>> scores;
    std::array<std::array<double, 7>, 2> loadings{};
    std::array<double, 2> explained_variance{};
    /// Column means and population standard deviations used for scaling.
    std::array<double, 7> mean{};
    std::array<double, 7> scale{};
};

/// Projects standardised rows onto the two leading principal axes. Each axis
/// is oriented so its largest-magnitude loading is positive. Throws
/// DomainError for fewer than three rows or all-constant data.
PcaResult pca_project(std::span<const std::array<double, 7>> rows);
PcaResult pca_project(const DatasetTable& table);

void write_distance_csv(std::ostream& out, const DistanceReport& report);
void write_correlation_csv(std::ostream& out, const CorrelationMatrix& matrix);
void write_pca_csv(std::ostream& out, const DatasetTable& table, const PcaResult& pca);

}  // namespace netfit
