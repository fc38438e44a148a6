#include "oracles.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <limits>

namespace oracle {

Matrix adjacency(const netfit::Graph& g) {
    const std::size_t n = g.node_count();
    Matrix a(n, std::vector<int>(n, 0));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
    return a;
}

namespace {

std::vector<int> degrees(const Matrix& a) {
    std::vector<int> d(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int x : a[i]) d[i] += x;
    return d;
}

int edge_total(const Matrix& a) {
    int m = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) m += a[i][j];
    return m;
}

}  // namespace

double density(const Matrix& a) {
    const double n = static_cast<double>(a.size());
    return 2.0 * edge_total(a) / (n * (n - 1));
}

double average_degree(const Matrix& a) { return 2.0 * edge_total(a) / static_cast<double>(a.size()); }

double assortativity(const Matrix& a) {
    const auto d = degrees(a);
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i][j]) {
                xs.push_back(d[i]);
                ys.push_back(d[j]);
            }
    const double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx < 1e-12 || syy < 1e-12) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

double average_clustering(const Matrix& a) {
    const std::size_t n = a.size();
    double total = 0;
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<std::size_t> nb;
        for (std::size_t u = 0; u < n; ++u)
            if (a[v][u]) nb.push_back(u);
        if (nb.size() < 2) continue;
        int closed = 0;
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) closed += a[nb[i]][nb[j]];
        total += closed / (nb.size() * (nb.size() - 1) / 2.0);
    }
    return total / static_cast<double>(n);
}

double max_eigenvector_centrality(const Matrix& a) {
    const auto n = static_cast<Eigen::Index>(a.size());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a[i][j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    Eigen::VectorXd v = solver.eigenvectors().col(n - 1).cwiseAbs();
    return v.maxCoeff() / v.norm();
}

double average_path_length_normalized(const Matrix& a) {
    const std::size_t n = a.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
    for (std::size_t i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (a[i][j]) d[i][j] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    double sum = 0;
    double pairs = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && d[i][j] < inf) {
                sum += d[i][j];
                pairs += 1;
            }
    if (pairs == 0) return 0.0;
    return sum / pairs / static_cast<double>(n - 1);
}

double degree_skewness(const Matrix& a) {
    const auto d = degrees(a);
    const double n = static_cast<double>(d.size());
    double mean = 0;
    for (int x : d) mean += x;
    mean /= n;
    double m2 = 0, m3 = 0;
    for (int x : d) {
        m2 += std::pow(x - mean, 2);
        m3 += std::pow(x - mean, 3);
    }
    m2 /= n;
    m3 /= n;
    if (m2 < 1e-12) return 0.0;
    return m3 / std::pow(m2, 1.5);
}

double modularity(const Matrix& a, const std::vector<std::uint32_t>& community) {
    const auto k = degrees(a);
    const double two_m = 2.0 * edge_total(a);
    double q = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (community[i] == community[j]) q += a[i][j] - k[i] * k[j] / two_m;
    return q / two_m;
}

std::vector<std::uint32_t> best_partition(const Matrix& a) {
    const std::size_t n = a.size();
    std::vector<std::uint32_t> current(n, 0), best(n, 0);
    double best_q = -std::numeric_limits<double>::infinity();
    // Restricted growth strings enumerate each set partition once.
    std::function<void(std::size_t, std::uint32_t)> visit = [&](std::size_t i, std::uint32_t used) {
        if (i == n) {
            const double q = modularity(a, current);
            if (q > best_q + 1e-12) {
                best_q = q;
                best = current;
            }
            return;
        }
        for (std::uint32_t c = 0; c <= used; ++c) {
            current[i] = c;
            visit(i + 1, c == used ? used + 1 : used);
        }
    };
    visit(0, 0);
    return best;
}

}  // namespace oracle
