#include "netfit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "netfit/error.hpp"
#include "netfit/linalg.hpp"

namespace netfit {

double density(const Graph& g) {
    const double n = static_cast<double>(g.node_count());
    if (g.node_count() < 2) throw DomainError("density needs at least two nodes");
    return static_cast<double>(g.edge_count()) / (n * (n - 1) / 2.0);
}

double average_degree(const Graph& g) {
    if (g.node_count() == 0) return 0.0;
    return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
}

Assortativity assortativity(const Graph& g) {
    if (g.edge_count() == 0) throw DomainError("assortativity needs at least one edge");

    // Each undirected edge contributes (q_u, q_v) and (q_v, q_u), so both
    // marginals share one mean and one variance. The moments are exact
    // integers, which makes the result a function of the joint degree matrix
    // alone (edge order cannot perturb the last bits).
    __extension__ using int128 = __int128;
    int128 first = 0, second = 0, product = 0;
    for (auto [u, v] : g.edges()) {
        const auto a = static_cast<int128>(g.degree(u)) - 1;
        const auto b = static_cast<int128>(g.degree(v)) - 1;
        first += a + b;
        second += a * a + b * b;
        product += 2 * a * b;
    }
    const auto instances = static_cast<int128>(2 * g.edge_count());
    const int128 spread = instances * second - first * first;
    if (spread == 0) return {0.0, true};
    const int128 cross = instances * product - first * first;
    return {std::clamp(static_cast<double>(cross) / static_cast<double>(spread), -1.0, 1.0), false};
}

double local_clustering(const Graph& g, NodeId v) {
    const auto row = g.neighbors(v);
    const std::size_t d = row.size();
    if (d < 2) return 0.0;
    std::size_t links = 0;
    for (NodeId u : row) {
        // Sorted rows: count common neighbours by merging.
        const auto other = g.neighbors(u);
        auto a = row.begin();
        auto b = other.begin();
        while (a != row.end() && b != other.end()) {
            if (*a < *b) {
                ++a;
            } else if (*b < *a) {
                ++b;
            } else {
                ++links;
                ++a;
                ++b;
            }
        }
    }
    links /= 2;
    return static_cast<double>(links) / (static_cast<double>(d) * static_cast<double>(d - 1) / 2.0);
}

double average_clustering(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) return 0.0;

    std::vector<std::uint8_t> marked(n, 0);
    double total = 0.0;
    for (NodeId v = 0; v < n; ++v) {
        const auto row = g.neighbors(v);
        const std::size_t d = row.size();
        if (d < 2) continue;
        for (NodeId u : row) marked[u] = 1;
        std::size_t links = 0;
        for (NodeId u : row)
            for (NodeId w : g.neighbors(u)) links += marked[w];
        for (NodeId u : row) marked[u] = 0;
        total += static_cast<double>(links / 2) /
                 (static_cast<double>(d) * static_cast<double>(d - 1) / 2.0);
    }
    return total / static_cast<double>(n);
}

namespace {

// y = (A + I) x
void shifted_product(const Graph& g, const std::vector<double>& x, std::vector<double>& y) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
        double acc = x[v];
        for (NodeId w : g.neighbors(v)) acc += x[w];
        y[v] = acc;
    }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Explicitly restarted Lanczos on A + I with full reorthogonalisation,
// started from the stalled power iterate. Converges with the square root of
// the relative spectral gap instead of the gap itself.
std::optional<std::vector<double>> lanczos_principal(const Graph& g, std::vector<double> x, double tolerance) {
    const std::size_t n = g.node_count();
    const std::size_t steps = std::min<std::size_t>(n, 64);
    std::vector<double> w(n);
    for (std::size_t restart = 0; restart < 200; ++restart) {
        std::vector<std::vector<double>> basis;
        std::vector<double> alpha;
        std::vector<double> beta;
        const double start_norm = std::sqrt(dot(x, x));
        for (auto& v : x) v /= start_norm;
        basis.push_back(x);
        for (std::size_t j = 0; j < steps; ++j) {
            shifted_product(g, basis[j], w);
            alpha.push_back(dot(basis[j], w));
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& q : basis) {
                    const double c = dot(q, w);
                    for (std::size_t i = 0; i < n; ++i) w[i] -= c * q[i];
                }
            const double b = std::sqrt(dot(w, w));
            if (j + 1 == steps || b <= 1e-12 * std::abs(alpha.back())) break;
            beta.push_back(b);
            for (auto& v : w) v /= b;
            basis.push_back(w);
        }

        const std::size_t m = alpha.size();
        std::vector<std::vector<double>> t(m, std::vector<double>(m, 0.0));
        for (std::size_t i = 0; i < m; ++i) {
            t[i][i] = alpha[i];
            if (i + 1 < m) t[i][i + 1] = t[i + 1][i] = beta[i];
        }
        const auto ritz = jacobi_eigen(std::move(t));
        std::fill(x.begin(), x.end(), 0.0);
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t i = 0; i < n; ++i) x[i] += ritz.vectors[k][0] * basis[k][i];
        const double norm = std::sqrt(dot(x, x));
        for (auto& v : x) v /= norm;

        shifted_product(g, x, w);
        const double theta = dot(x, w);
        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) residual += (w[i] - theta * x[i]) * (w[i] - theta * x[i]);
        if (std::sqrt(residual) < tolerance * std::max(1.0, theta)) {
            if (std::accumulate(x.begin(), x.end(), 0.0) < 0)
                for (auto& v : x) v = -v;
            return x;
        }
    }
    return std::nullopt;
}

}  // namespace

double max_eigenvector_centrality(const Graph& g, EigenvectorOptions options) {
    if (g.edge_count() == 0) throw DomainError("eigenvector centrality needs at least one edge");
    const std::size_t n = g.node_count();

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);
    double residual = std::numeric_limits<double>::infinity();
    for (std::size_t iter = 0; iter < options.max_iterations; ++iter) {
        shifted_product(g, x, y);
        const double scale = 1.0 / std::sqrt(dot(y, y));
        residual = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            y[v] *= scale;
            const double diff = y[v] - x[v];
            residual += diff * diff;
        }
        residual = std::sqrt(residual);
        x.swap(y);
        if (residual < options.tolerance) return *std::max_element(x.begin(), x.end());
    }
    if (options.lanczos_fallback) {
        if (auto v = lanczos_principal(g, std::move(x), options.tolerance)) return *std::max_element(v->begin(), v->end());
    }
    throw ConvergenceError("eigenvector power iteration did not converge", residual);
}

double average_path_length_normalized(const Graph& g) {
    const std::size_t n = g.node_count();
    std::uint64_t total = 0;
    std::uint64_t pairs = 0;

    constexpr auto unseen = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> dist(n, unseen);
    std::vector<NodeId> queue(n);
    for (NodeId source = 0; source < n; ++source) {
        std::size_t head = 0;
        std::size_t tail = 0;
        queue[tail++] = source;
        dist[source] = 0;
        while (head < tail) {
            const NodeId v = queue[head++];
            for (NodeId w : g.neighbors(v)) {
                if (dist[w] == unseen) {
                    dist[w] = dist[v] + 1;
                    total += dist[w];
                    queue[tail++] = w;
                }
            }
        }
        pairs += tail - 1;
        for (std::size_t i = 0; i < tail; ++i) dist[queue[i]] = unseen;
    }
    if (pairs == 0) throw DomainError("average path length needs a connected pair");
    const double mean = static_cast<double>(total) / static_cast<double>(pairs);
    return mean / static_cast<double>(n - 1);
}

namespace {

struct Moments {
    double m2 = 0;
    double m3 = 0;
};

// Central moments from exact integer power sums: n^2 m2 = n S2 - S1^2 and
// n^3 m3 = n^2 S3 - 3 n S1 S2 + 2 S1^3. Only the degree multiset matters.
Moments degree_moments(const Graph& g) {
    const std::size_t n = g.node_count();
    Moments out;
    if (n == 0) return out;
    __extension__ using int128 = __int128;
    int128 s1 = 0, s2 = 0, s3 = 0;
    for (NodeId v = 0; v < n; ++v) {
        const auto d = static_cast<int128>(g.degree(v));
        s1 += d;
        s2 += d * d;
        s3 += d * d * d;
    }
    const auto count = static_cast<int128>(n);
    const int128 c2 = count * s2 - s1 * s1;
    const int128 c3 = count * count * s3 - 3 * count * s1 * s2 + 2 * s1 * s1 * s1;
    const double nd = static_cast<double>(n);
    out.m2 = static_cast<double>(c2) / (nd * nd);
    out.m3 = static_cast<double>(c3) / (nd * nd * nd);
    return out;
}

}  // namespace

double degree_skewness(const Graph& g) {
    const auto [m2, m3] = degree_moments(g);
    if (m2 == 0.0) return 0.0;
    return m3 / std::pow(m2, 1.5);
}

double degree_std(const Graph& g) { return std::sqrt(degree_moments(g).m2); }

FeatureVector feature_vector(const Graph& g) {
    if (g.node_count() < 2 || g.edge_count() == 0)
        throw DomainError("feature vector needs n >= 2 and at least one edge");
    FeatureVector f;
    f.size = static_cast<double>(g.node_count());
    f.density = density(g);
    const auto r = assortativity(g);
    f.assort = r.value;
    f.assort_degenerate = r.degenerate;
    f.avg_clust = average_clustering(g);
    f.avg_deg = average_degree(g);
    f.max_eigenv_c = max_eigenvector_centrality(g);
    f.avg_path_length = average_path_length_normalized(g);
    f.skew_deg_dist = degree_skewness(g);
    return f;
}

}  // namespace netfit
