#include "corpus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "netfit/error.hpp"
#include "netfit/fitting.hpp"
#include "netfit/metrics.hpp"
#include "netfit/parallel.hpp"

namespace corpus {

using netfit::Edge;
using netfit::Graph;

Graph giant_component(const Graph& g) {
    const auto comps = netfit::connected_components(g);
    const auto biggest = static_cast<std::uint32_t>(
        std::max_element(comps.component_sizes.begin(), comps.component_sizes.end()) - comps.component_sizes.begin());
    std::vector<std::int64_t> index(g.node_count(), -1);
    std::size_t next = 0;
    for (std::size_t v = 0; v < g.node_count(); ++v)
        if (comps.label[v] == biggest) index[v] = static_cast<std::int64_t>(next++);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0)
            edges.emplace_back(static_cast<netfit::NodeId>(index[u]), static_cast<netfit::NodeId>(index[v]));
    return netfit::graph_from_edges(next, edges);
}

Graph social_proxy(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::pair<double, double>> pos(n);
    for (auto& p : pos) p = {unit(rng), unit(rng)};
    const double target_degree = 6.0 + 4.0 * unit(rng);
    const double radius = std::sqrt(target_degree / (3.14159265358979 * static_cast<double>(n)));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = pos[i].first - pos[j].first;
            const double dy = pos[i].second - pos[j].second;
            if (dx * dx + dy * dy < radius * radius) edges.emplace_back(i, j);
        }
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < n / 20 + 1; ++k) edges.emplace_back(pick(rng), pick(rng));
    return giant_component(netfit::graph_from_edges(n, edges));
}

Graph food_proxy(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double connectance = 0.08 + 0.1 * unit(rng);
    const double beta = 1.0 / (2.0 * connectance) - 1.0;
    std::gamma_distribution<double> ga(1.0, 1.0);
    std::gamma_distribution<double> gb(beta, 1.0);
    std::vector<double> niche(n), range(n), centre(n);
    for (std::size_t i = 0; i < n; ++i) {
        niche[i] = unit(rng);
        const double a = ga(rng);
        const double b = gb(rng);
        range[i] = niche[i] * a / (a + b);
        centre[i] = range[i] / 2 + unit(rng) * (niche[i] - range[i] / 2);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && std::abs(niche[j] - centre[i]) <= range[i] / 2) edges.emplace_back(i, j);
    return giant_component(netfit::graph_from_edges(n, edges));
}

Graph brain_proxy(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t modules = std::max<std::size_t>(2, n / 40);
    const std::size_t half_width = 3 + static_cast<std::size_t>(unit(rng) * 3);
    std::vector<Edge> edges;
    std::vector<std::size_t> start(modules + 1);
    for (std::size_t m = 0; m <= modules; ++m) start[m] = m * n / modules;
    for (std::size_t m = 0; m < modules; ++m) {
        const std::size_t size = start[m + 1] - start[m];
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t s = 1; s <= half_width && s < size; ++s)
                if (unit(rng) < 0.85) edges.emplace_back(start[m] + i, start[m] + (i + s) % size);
    }
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < n / 4; ++k) edges.emplace_back(pick(rng), pick(rng));
    // A few hub regions, as in cortical connectomes.
    for (std::size_t h = 0; h < modules; ++h) {
        const std::size_t hub = pick(rng);
        for (std::size_t k = 0; k < 10; ++k) edges.emplace_back(hub, pick(rng));
    }
    return giant_component(netfit::graph_from_edges(n, edges));
}

Graph chems_proxy(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    // Honeycomb as a brick wall: rows of w nodes, vertical links alternate.
    const std::size_t w = std::max<std::size_t>(4, static_cast<std::size_t>(std::sqrt(static_cast<double>(n))));
    const std::size_t h = (n + w - 1) / w;
    auto id = [w](std::size_t r, std::size_t c) { return r * w + c; };
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < h; ++r)
        for (std::size_t c = 0; c < w; ++c) {
            if (id(r, c) >= n) continue;
            if (c + 1 < w && id(r, c + 1) < n) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < h && (r + c) % 2 == 0 && id(r + 1, c) < n) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    std::shuffle(edges.begin(), edges.end(), rng);
    const double drop = 0.05 + 0.1 * unit(rng);
    edges.resize(static_cast<std::size_t>(static_cast<double>(edges.size()) * (1.0 - drop)));
    // Pendant groups hang off random atoms; keep degrees at most 4.
    auto g = netfit::graph_from_edges(n, edges);
    std::vector<std::size_t> degree(n);
    for (std::size_t v = 0; v < n; ++v) degree[v] = g.degree(static_cast<netfit::NodeId>(v));
    std::vector<Edge> extra(edges);
    std::size_t next = n;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < n / 6; ++k) {
        const std::size_t v = pick(rng);
        if (degree[v] >= 4) continue;
        ++degree[v];
        extra.emplace_back(v, next++);
    }
    return giant_component(netfit::graph_from_edges(next, extra));
}

Graph proxy(const std::string& domain, std::size_t n, std::uint64_t seed) {
    if (domain == "social") return social_proxy(n, seed);
    if (domain == "food") return food_proxy(n, seed);
    if (domain == "brain") return brain_proxy(n, seed);
    return chems_proxy(n, seed);
}

std::vector<Member> build(std::size_t per_domain, std::size_t min_n, std::size_t max_n, std::uint64_t seed,
                          const std::vector<std::string>& domains) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size(min_n, max_n);
    std::vector<Member> out;
    for (const auto& domain : domains)
        for (std::size_t i = 0; i < per_domain; ++i) {
            const std::size_t n = size(rng);
            const std::uint64_t graph_seed = rng();
            out.push_back({domain + "_" + std::to_string(i), domain, proxy(domain, n, graph_seed)});
        }
    return out;
}

netfit::DatasetTable fit_and_measure(const std::vector<Member>& members, std::uint64_t seed, std::size_t jobs,
                                     std::size_t* failures) {
    std::vector<std::vector<netfit::DatasetRow>> rows(members.size());
    std::vector<std::size_t> failed(members.size(), 0);
    netfit::parallel_for(members.size(), jobs, [&](std::size_t i) {
        const auto& m = members[i];
        rows[i].push_back({m.name, netfit::feature_vector(m.graph), m.domain, "real", "Real"});
        netfit::FitBudget budget;
        budget.seed = netfit::derive_seed(seed, netfit::fnv1a64(m.name));
        std::vector<netfit::FitReport> fits;
        try {
            fits = netfit::fit_all(m.graph, budget);
        } catch (const netfit::Error&) {
            ++failed[i];
            return;
        }
        for (const auto& fit : fits) {
            try {
                const auto g = netfit::generate(fit.params, netfit::derive_seed(budget.seed, netfit::fnv1a64(fit.model)));
                rows[i].push_back({m.name, netfit::feature_vector(g), m.domain, "model", fit.model});
            } catch (const netfit::Error&) {
                ++failed[i];
            }
        }
    });
    netfit::DatasetTable table;
    for (auto& r : rows)
        for (auto& row : r) table.rows.push_back(std::move(row));
    if (failures) {
        *failures = 0;
        for (std::size_t f : failed) *failures += f;
    }
    return table;
}

}  // namespace corpus
