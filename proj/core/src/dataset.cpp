#include "netfit/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include "netfit/error.hpp"

namespace netfit {

namespace {

template <std::size_t N>
bool allowed(std::string_view value, const std::array<std::string_view, N>& options) {
    return value.empty() || std::find(options.begin(), options.end(), value) != options.end();
}

double parse_number(const std::string& text, std::size_t line) {
    double value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) throw ParseError("not a number: '" + text + "'", line);
    return value;
}

}  // namespace

void DatasetTable::validate() const {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& row : rows) {
        if (row.name.empty() || row.name.find(',') != std::string::npos)
            throw ParseError("row name must be non-empty and comma-free: '" + row.name + "'");
        if (!seen.emplace(row.name, row.subcategory).second)
            throw ParseError("duplicate row " + row.name + "/" + row.subcategory);
        if (!allowed(row.domain, kDomains)) throw ParseError("unknown domain '" + row.domain + "'");
        if (!allowed(row.category, kCategories)) throw ParseError("unknown category '" + row.category + "'");
        if (!allowed(row.subcategory, kSubcategories))
            throw ParseError("unknown subcategory '" + row.subcategory + "'");
        for (double v : row.features.values())
            if (!std::isfinite(v)) throw ParseError("non-finite metric in row " + row.name);
    }
}

std::string format_number(double value) {
    if (value == 0.0) return "0";  // folds -0
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, ptr);
}

void write_dataset_csv(std::ostream& out, const DatasetTable& table) {
    for (std::size_t i = 0; i < kDatasetColumns.size(); ++i) out << (i ? "," : "") << kDatasetColumns[i];
    out << '\n';
    for (const auto& row : table.rows) {
        out << row.name;
        for (double v : row.features.values()) out << ',' << format_number(v);
        out << ',' << row.domain << ',' << row.category << ',' << row.subcategory << '\n';
    }
}

std::vector<std::string> split_csv_line(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.emplace_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

DatasetTable read_dataset_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("dataset CSV is empty");
    const auto header = split_csv_line(line);
    std::map<std::string, std::size_t> column;
    for (std::size_t i = 0; i < header.size(); ++i) column[header[i]] = i;

    std::string missing;
    for (std::size_t i = 0; i < 9; ++i) {
        if (!column.contains(std::string(kDatasetColumns[i]))) {
            if (!missing.empty()) missing += ", ";
            missing += kDatasetColumns[i];
        }
    }
    if (!missing.empty()) throw ParseError("dataset CSV is missing columns: " + missing);

    DatasetTable table;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != header.size()) throw ParseError("wrong number of fields", line_no);
        auto field = [&](std::string_view name) -> std::string {
            auto it = column.find(std::string(name));
            return it == column.end() ? std::string() : fields[it->second];
        };
        DatasetRow row;
        row.name = field("name");
        auto& f = row.features;
        f.size = parse_number(field("size"), line_no);
        f.density = parse_number(field("density"), line_no);
        f.assort = parse_number(field("assort"), line_no);
        f.avg_clust = parse_number(field("avg_clust"), line_no);
        f.avg_deg = parse_number(field("avg_deg"), line_no);
        f.max_eigenv_c = parse_number(field("max_eigenv_c"), line_no);
        f.avg_path_length = parse_number(field("avg_path_length"), line_no);
        f.skew_deg_dist = parse_number(field("skew_deg_dist"), line_no);
        row.domain = field("domain");
        row.category = field("category");
        row.subcategory = field("subcategory");
        table.rows.push_back(std::move(row));
    }
    table.validate();
    return table;
}

}  // namespace netfit
