#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "netfit/metrics.hpp"

namespace netfit {

inline constexpr std::array<std::string_view, 4> kDomains{"social", "food", "brain", "chems"};
inline constexpr std::array<std::string_view, 2> kCategories{"real", "model"};
inline constexpr std::array<std::string_view, 7> kSubcategories{"Real", "2K", "CBA", "WS", "WS_STD", "DD", "Com"};

/// One measured graph. Model counterparts carry the name of the real graph
/// they were fitted to, so (name, subcategory) identifies a row.
struct DatasetRow {
    std::string name;
    FeatureVector features;
    std::string domain;       // optional
    std::string category;     // optional
    std::string subcategory;  // optional
};

struct DatasetTable {
    std::vector<DatasetRow> rows;

    /// Throws ParseError on duplicate (name, subcategory), unknown labels or
    /// non-finite metrics.
    void validate() const;
};

/// Header of the feature CSV, in column order.
inline constexpr std::array<std::string_view, 12> kDatasetColumns{
    "name", "size", "density", "assort", "avg_clust", "avg_deg", "max_eigenv_c",
    "avg_path_length", "skew_deg_dist", "domain", "category", "subcategory"};

/// Shortest round-trip decimal form; identical bytes for identical doubles.
std::string format_number(double value);

void write_dataset_csv(std::ostream& out, const DatasetTable& table);

/// Reads a feature CSV. Columns are matched by header name; a missing metric
/// or name column raises ParseError listing every missing column. The three
/// label columns may be absent.
DatasetTable read_dataset_csv(std::istream& in);

std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace netfit
