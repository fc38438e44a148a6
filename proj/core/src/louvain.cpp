#include "netfit/louvain.hpp"

#include <algorithm>
#include <numeric>

namespace netfit {

std::size_t Partition::count() const {
    if (community.empty()) return 0;
    return static_cast<std::size_t>(*std::max_element(community.begin(), community.end())) + 1;
}

std::vector<std::size_t> Partition::sizes() const {
    std::vector<std::size_t> out(count(), 0);
    for (auto c : community) ++out[c];
    return out;
}

double modularity(const Graph& g, std::span<const std::uint32_t> community) {
    const double m = static_cast<double>(g.edge_count());
    if (m == 0) return 0.0;
    const std::size_t groups =
        community.empty() ? 0 : *std::max_element(community.begin(), community.end()) + std::size_t{1};
    std::vector<double> internal(groups, 0.0);
    std::vector<double> degree_sum(groups, 0.0);
    for (NodeId v = 0; v < g.node_count(); ++v) degree_sum[community[v]] += static_cast<double>(g.degree(v));
    for (auto [u, v] : g.edges())
        if (community[u] == community[v]) internal[community[u]] += 1.0;
    double q = 0.0;
    for (std::size_t c = 0; c < groups; ++c) {
        const double share = degree_sum[c] / (2.0 * m);
        q += internal[c] / m - share * share;
    }
    return q;
}

namespace {

struct WeightedLevel {
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adjacency;  // no self-loops
    std::vector<double> strength;                                         // includes self-loop weight
};

WeightedLevel from_graph(const Graph& g) {
    WeightedLevel level;
    level.adjacency.resize(g.node_count());
    level.strength.resize(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
        for (NodeId w : g.neighbors(v)) level.adjacency[v].emplace_back(w, 1.0);
        level.strength[v] = static_cast<double>(g.degree(v));
    }
    return level;
}

// One round of local moves. Returns true if any node changed community;
// `assignment` ends up with dense ids in first-appearance order.
bool local_moves(const WeightedLevel& level, double total_weight, Rng& rng,
                 std::vector<std::uint32_t>& assignment) {
    const std::size_t n = level.adjacency.size();
    assignment.resize(n);
    std::iota(assignment.begin(), assignment.end(), 0u);
    std::vector<double> community_strength = level.strength;

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    rng.shuffle(order.begin(), order.end());

    std::vector<double> link_weight(n, -1.0);
    std::vector<std::uint32_t> touched;
    bool moved_any = false;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::uint32_t v : order) {
            const std::uint32_t home = assignment[v];
            const double k = level.strength[v];
            community_strength[home] -= k;

            touched.clear();
            link_weight[home] = 0.0;
            touched.push_back(home);
            for (auto [w, weight] : level.adjacency[v]) {
                const std::uint32_t c = assignment[w];
                if (link_weight[c] < 0.0) {
                    link_weight[c] = 0.0;
                    touched.push_back(c);
                }
                link_weight[c] += weight;
            }

            std::uint32_t best = home;
            double best_gain = link_weight[home] - community_strength[home] * k / total_weight;
            for (std::uint32_t c : touched) {
                const double gain = link_weight[c] - community_strength[c] * k / total_weight;
                if (gain > best_gain + 1e-12) {
                    best_gain = gain;
                    best = c;
                }
            }
            for (std::uint32_t c : touched) link_weight[c] = -1.0;

            community_strength[best] += k;
            if (best != home) {
                assignment[v] = best;
                moved = true;
                moved_any = true;
            }
        }
    }

    std::vector<std::uint32_t> dense(n, static_cast<std::uint32_t>(-1));
    std::uint32_t next = 0;
    for (auto& c : assignment) {
        if (dense[c] == static_cast<std::uint32_t>(-1)) dense[c] = next++;
        c = dense[c];
    }
    return moved_any;
}

WeightedLevel aggregate(const WeightedLevel& level, const std::vector<std::uint32_t>& assignment) {
    const std::size_t groups = *std::max_element(assignment.begin(), assignment.end()) + std::size_t{1};
    WeightedLevel next;
    next.adjacency.resize(groups);
    next.strength.assign(groups, 0.0);

    std::vector<std::vector<std::pair<std::uint32_t, double>>> raw(groups);
    for (std::size_t v = 0; v < level.adjacency.size(); ++v) {
        next.strength[assignment[v]] += level.strength[v];
        for (auto [w, weight] : level.adjacency[v])
            if (assignment[v] != assignment[w]) raw[assignment[v]].emplace_back(assignment[w], weight);
    }
    for (std::size_t c = 0; c < groups; ++c) {
        auto& row = raw[c];
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [d, weight] : row) {
            if (!next.adjacency[c].empty() && next.adjacency[c].back().first == d)
                next.adjacency[c].back().second += weight;
            else
                next.adjacency[c].emplace_back(d, weight);
        }
    }
    return next;
}

}  // namespace

Partition louvain(const Graph& g, Seed seed) {
    const std::size_t n = g.node_count();
    Partition result;
    result.community.resize(n);
    std::iota(result.community.begin(), result.community.end(), 0u);
    if (g.edge_count() == 0) {
        result.modularity = modularity(g, result.community);
        return result;
    }

    Rng rng(seed);
    const double total_weight = 2.0 * static_cast<double>(g.edge_count());
    WeightedLevel level = from_graph(g);
    std::vector<std::uint32_t> assignment;
    while (true) {
        const bool moved = local_moves(level, total_weight, rng, assignment);
        if (!moved) break;
        for (auto& c : result.community) c = assignment[c];
        level = aggregate(level, assignment);
        if (level.adjacency.size() == 1) break;
    }
    result.modularity = modularity(g, result.community);
    return result;
}

}  // namespace netfit
