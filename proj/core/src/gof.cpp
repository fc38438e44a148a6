#include "netfit/gof.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

#include "netfit/error.hpp"

namespace netfit {

double canberra_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) throw ParameterError("canberra: dimension mismatch");
    if (p.empty()) throw ParameterError("canberra: empty vectors");
    double total = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double denominator = std::abs(p[i]) + std::abs(q[i]);
        if (denominator > 0.0) total += std::abs(p[i] - q[i]) / denominator;
    }
    return total;
}

std::optional<double> DistanceMatrix::at(std::string_view a, std::string_view b) const {
    auto index = [&](std::string_view s) -> std::optional<std::size_t> {
        auto it = std::find(subcategories.begin(), subcategories.end(), s);
        if (it == subcategories.end()) return std::nullopt;
        return static_cast<std::size_t>(it - subcategories.begin());
    };
    const auto i = index(a);
    const auto j = index(b);
    if (!i || !j) return std::nullopt;
    return mean[*i][*j];
}

DistanceReport mean_distance_matrix(const DatasetTable& table) {
    DistanceReport report;

    // domain -> name -> subcategory -> row
    std::map<std::string, std::map<std::string, std::map<std::string, const DatasetRow*>>> grouped;
    std::vector<std::string> domain_order;
    for (const auto& row : table.rows) {
        if (!grouped.contains(row.domain)) domain_order.push_back(row.domain);
        grouped[row.domain][row.name][row.subcategory] = &row;
    }

    for (const auto& domain : domain_order) {
        const auto& by_name = grouped.at(domain);
        DistanceMatrix matrix;
        matrix.domain = domain;
        for (auto sub : kSubcategories) {
            for (const auto& [name, subs] : by_name) {
                if (subs.contains(std::string(sub))) {
                    matrix.subcategories.emplace_back(sub);
                    break;
                }
            }
        }
        const std::size_t s = matrix.subcategories.size();
        std::vector<std::vector<double>> sums(s, std::vector<double>(s, 0.0));
        matrix.pairs.assign(s, std::vector<std::size_t>(s, 0));
        for (const auto& [name, subs] : by_name) {
            if (subs.size() < 2) {
                for (const auto& [sub, row] : subs) report.unmatched.push_back(name + "/" + sub);
            }
            for (std::size_t i = 0; i < s; ++i) {
                auto a = subs.find(matrix.subcategories[i]);
                if (a == subs.end()) continue;
                for (std::size_t j = 0; j < s; ++j) {
                    auto b = subs.find(matrix.subcategories[j]);
                    if (b == subs.end()) continue;
                    const auto pa = a->second->features.topology();
                    const auto pb = b->second->features.topology();
                    sums[i][j] += canberra_distance(pa, pb);
                    ++matrix.pairs[i][j];
                }
            }
        }
        matrix.mean.assign(s, std::vector<std::optional<double>>(s));
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j)
                if (matrix.pairs[i][j] > 0) matrix.mean[i][j] = sums[i][j] / static_cast<double>(matrix.pairs[i][j]);
        report.domains.push_back(std::move(matrix));
    }
    return report;
}

namespace {

std::vector<std::array<double, 7>> topology_rows(const DatasetTable& table, const std::optional<std::string>& domain) {
    std::vector<std::array<double, 7>> rows;
    for (const auto& row : table.rows)
        if (!domain || row.domain == *domain) rows.push_back(row.features.topology());
    return rows;
}

struct ColumnStats {
    std::array<double, 7> mean{};
    std::array<double, 7> stddev{};
};

ColumnStats column_stats(std::span<const std::array<double, 7>> rows) {
    ColumnStats stats;
    const double count = static_cast<double>(rows.size());
    for (const auto& r : rows)
        for (std::size_t c = 0; c < 7; ++c) stats.mean[c] += r[c];
    for (auto& m : stats.mean) m /= count;
    for (const auto& r : rows)
        for (std::size_t c = 0; c < 7; ++c) {
            const double d = r[c] - stats.mean[c];
            stats.stddev[c] += d * d;
        }
    for (auto& s : stats.stddev) s = std::sqrt(s / count);
    return stats;
}

// Relative threshold below which a column counts as constant.
bool is_constant(double stddev, double mean) { return stddev <= 1e-12 * std::max(1.0, std::abs(mean)); }

}  // namespace

CorrelationMatrix correlation_matrix(const DatasetTable& table, std::optional<std::string> domain) {
    const auto rows = topology_rows(table, domain);
    if (rows.size() < 3) throw DomainError("correlation needs at least three rows");
    const auto stats = column_stats(rows);

    CorrelationMatrix out;
    out.domain = domain.value_or("");
    out.rows = rows.size();
    for (std::size_t c = 0; c < 7; ++c) out.zero_variance[c] = is_constant(stats.stddev[c], stats.mean[c]);
    for (std::size_t a = 0; a < 7; ++a) {
        out.values[a][a] = 1.0;
        for (std::size_t b = a + 1; b < 7; ++b) {
            double value = 0.0;
            if (!out.zero_variance[a] && !out.zero_variance[b]) {
                double cross = 0.0;
                for (const auto& r : rows) cross += (r[a] - stats.mean[a]) * (r[b] - stats.mean[b]);
                value = cross / static_cast<double>(rows.size()) / (stats.stddev[a] * stats.stddev[b]);
                value = std::clamp(value, -1.0, 1.0);
            }
            out.values[a][b] = out.values[b][a] = value;
        }
    }
    return out;
}

PcaResult pca_project(std::span<const std::array<double, 7>> rows) {
    if (rows.size() < 3) throw DomainError("PCA needs at least three rows");
    const auto stats = column_stats(rows);

    PcaResult out;
    out.mean = stats.mean;
    bool any_variance = false;
    for (std::size_t c = 0; c < 7; ++c) {
        const bool constant = is_constant(stats.stddev[c], stats.mean[c]);
        out.scale[c] = constant ? 0.0 : stats.stddev[c];
        any_variance = any_variance || !constant;
    }
    if (!any_variance) throw DomainError("PCA: every column is constant");

    std::vector<std::array<double, 7>> z(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < 7; ++c)
            z[r][c] = out.scale[c] > 0 ? (rows[r][c] - stats.mean[c]) / out.scale[c] : 0.0;

    std::vector<std::vector<double>> covariance(7, std::vector<double>(7, 0.0));
    for (const auto& row : z)
        for (std::size_t a = 0; a < 7; ++a)
            for (std::size_t b = 0; b < 7; ++b) covariance[a][b] += row[a] * row[b];
    for (auto& line : covariance)
        for (auto& x : line) x /= static_cast<double>(rows.size());

    const auto eigen = jacobi_eigen(covariance);
    for (std::size_t k = 0; k < 2; ++k) {
        std::size_t largest = 0;
        for (std::size_t i = 1; i < 7; ++i)
            if (std::abs(eigen.vectors[i][k]) > std::abs(eigen.vectors[largest][k]) + 1e-12) largest = i;
        const double sign = eigen.vectors[largest][k] < 0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < 7; ++i) out.loadings[k][i] = sign * eigen.vectors[i][k];
        out.explained_variance[k] = std::max(0.0, eigen.values[k]);
    }

    out.scores.resize(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t k = 0; k < 2; ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i < 7; ++i) s += z[r][i] * out.loadings[k][i];
            out.scores[r][k] = s;
        }
    return out;
}

PcaResult pca_project(const DatasetTable& table) {
    const auto rows = topology_rows(table, std::nullopt);
    return pca_project(rows);
}

void write_distance_csv(std::ostream& out, const DistanceReport& report) {
    for (const auto& matrix : report.domains) {
        out << "domain,subcategory";
        for (const auto& s : matrix.subcategories) out << ',' << s;
        out << '\n';
        for (std::size_t i = 0; i < matrix.subcategories.size(); ++i) {
            out << matrix.domain << ',' << matrix.subcategories[i];
            for (const auto& cell : matrix.mean[i]) {
                out << ',';
                if (cell) out << format_number(*cell);
            }
            out << '\n';
        }
    }
}

void write_correlation_csv(std::ostream& out, const CorrelationMatrix& matrix) {
    out << "metric";
    for (auto name : kTopologyNames) out << ',' << name;
    out << '\n';
    for (std::size_t a = 0; a < 7; ++a) {
        out << kTopologyNames[a];
        for (std::size_t b = 0; b < 7; ++b) out << ',' << format_number(matrix.values[a][b]);
        out << '\n';
    }
}

void write_pca_csv(std::ostream& out, const DatasetTable& table, const PcaResult& pca) {
    out << "name,domain,pc1,pc2\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        out << row.name << ',' << row.domain << ',' << format_number(pca.scores[r][0])
            << ',' << format_number(pca.scores[r][1]) << '\n';
    }
}

}  // namespace netfit
