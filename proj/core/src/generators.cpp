#include "netfit/generators.hpp"

#include <algorithm>
#include <numeric>

#include "netfit/error.hpp"

namespace netfit {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) throw ParameterError(std::string(what) + " must lie in [0,1]");
}

}  // namespace

std::string model_name(const ModelParams& params) {
    return std::visit(overloaded{
                          [](const WsParams&) { return std::string("WS"); },
                          [](const CbaParams&) { return std::string("CBA"); },
                          [](const DdParams&) { return std::string("DD"); },
                          [](const CommunityParams&) { return std::string("Com"); },
                          [](const TwoKParams&) { return std::string("2K"); },
                      },
                      params);
}

std::size_t model_size(const ModelParams& params) {
    return std::visit(overloaded{
                          [](const WsParams& p) { return p.n; },
                          [](const CbaParams& p) { return p.n; },
                          [](const DdParams& p) { return p.n; },
                          [](const CommunityParams& p) {
                              return std::accumulate(p.sizes.begin(), p.sizes.end(), std::size_t{0});
                          },
                          [](const TwoKParams& p) {
                              std::size_t n = 0;
                              for (const auto& [k, count] : validate_jdm(p.jdm).degree_counts) n += count;
                              return n;
                          },
                      },
                      params);
}

void validate(const WsParams& params) {
    if (params.degree < 2 || params.degree % 2 != 0) throw ParameterError("WS: K must be even and >= 2");
    if (params.n <= params.degree) throw ParameterError("WS: requires n > K");
    check_probability(params.p, "WS: p");
}

void validate(const CbaParams& params) {
    if (params.m < 1) throw ParameterError("CBA: m must be >= 1");
    if (params.m >= params.n) throw ParameterError("CBA: requires m < n");
    check_probability(params.p, "CBA: p");
}

void validate(const DdParams& params) {
    if (params.n < 2) throw ParameterError("DD: requires n >= 2");
    if (!(params.p > 0.0 && params.p <= 1.0)) throw ParameterError("DD: p must lie in (0,1]");
}

void validate(const CommunityParams& params) {
    if (params.sizes.empty()) throw ParameterError("Com: at least one community required");
    for (std::size_t s : params.sizes)
        if (s == 0) throw ParameterError("Com: community sizes must be >= 1");
    check_probability(params.p_in, "Com: p_in");
    check_probability(params.p_out, "Com: p_out");
}

void validate(const TwoKParams& params) {
    const auto report = validate_jdm(params.jdm);
    if (!report.valid) {
        std::string message = "2K: invalid joint degree matrix";
        for (const auto& v : report.violations) message += "; " + v;
        throw ParameterError(message);
    }
    if (params.jdm.entries.empty()) throw ParameterError("2K: empty joint degree matrix");
}

Graph generate_ws(const WsParams& params, Seed seed) {
    validate(params);
    const std::size_t n = params.n;
    const std::size_t half = params.degree / 2;
    Rng rng(seed);

    GraphBuilder builder(n);
    std::vector<Edge> ring;
    ring.reserve(n * half);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t s = 1; s <= half; ++s) {
            const auto u = static_cast<NodeId>(i);
            const auto v = static_cast<NodeId>((i + s) % n);
            builder.add_edge(u, v);
            ring.emplace_back(u, v);
        }
    }

    std::vector<NodeId> allowed;
    for (auto [u, v] : ring) {
        if (!rng.bernoulli(params.p)) continue;
        // The edge (u,v) itself is in u's row, so v is never a candidate.
        const std::size_t free_slots = n - 1 - builder.degree(u);
        if (free_slots == 0) continue;
        NodeId target;
        if (free_slots * 4 >= n) {
            do {
                target = static_cast<NodeId>(rng.uniform_index(n));
            } while (target == u || builder.has_edge(u, target));
        } else {
            allowed.clear();
            for (NodeId w = 0; w < n; ++w)
                if (w != u && !builder.has_edge(u, w)) allowed.push_back(w);
            target = allowed[rng.uniform_index(allowed.size())];
        }
        builder.remove_edge(u, v);
        builder.add_edge(u, target);
    }
    return builder.build();
}

Graph generate_cba(const CbaParams& params, Seed seed) {
    validate(params);
    const std::size_t n = params.n;
    const std::size_t m = params.m;
    Rng rng(seed);

    GraphBuilder builder(n);
    // One entry per edge end, so a uniform draw is degree-proportional.
    std::vector<NodeId> stubs;
    stubs.reserve(2 * (m * (m - 1) / 2 + (n - m) * m));
    for (NodeId u = 0; u < m; ++u) {
        for (NodeId v = u + 1; v < m; ++v) {
            builder.add_edge(u, v);
            stubs.push_back(u);
            stubs.push_back(v);
        }
    }

    std::vector<NodeId> chosen;
    std::vector<NodeId> attached_by_pa;
    std::vector<NodeId> triad_pool;
    for (auto v = static_cast<NodeId>(m); v < n; ++v) {
        chosen.clear();
        attached_by_pa.clear();

        auto preferential = [&]() {
            if (stubs.empty()) return NodeId{0};  // m = 1 with the lone seed node
            NodeId u;
            do {
                u = stubs[rng.uniform_index(stubs.size())];
            } while (builder.has_edge(v, u));
            return u;
        };

        for (std::size_t link = 0; link < m; ++link) {
            NodeId target;
            bool by_triad = false;
            if (link > 0) {
                triad_pool.clear();
                for (NodeId u : attached_by_pa)
                    for (NodeId w : builder.neighbors(u))
                        if (w != v && !builder.has_edge(v, w)) triad_pool.push_back(w);
                std::sort(triad_pool.begin(), triad_pool.end());
                triad_pool.erase(std::unique(triad_pool.begin(), triad_pool.end()), triad_pool.end());
                if (!triad_pool.empty() && rng.bernoulli(params.p)) {
                    target = triad_pool[rng.uniform_index(triad_pool.size())];
                    by_triad = true;
                }
            }
            if (!by_triad) {
                target = preferential();
                attached_by_pa.push_back(target);
            }
            builder.add_edge(v, target);
            chosen.push_back(target);
        }
        for (NodeId u : chosen) {
            stubs.push_back(u);
            stubs.push_back(v);
        }
    }
    return builder.build();
}

Graph generate_dd(const DdParams& params, Seed seed) {
    validate(params);
    const std::size_t n = params.n;
    Rng rng(seed);

    GraphBuilder builder(2);
    builder.add_edge(0, 1);

    const std::size_t failure_budget = 10'000 * n;
    std::size_t failures = 0;
    std::vector<NodeId> kept;
    std::vector<NodeId> row;
    while (builder.node_count() < n) {
        const auto target = static_cast<NodeId>(rng.uniform_index(builder.node_count()));
        row.assign(builder.neighbors(target).begin(), builder.neighbors(target).end());
        std::sort(row.begin(), row.end());
        kept.clear();
        for (NodeId w : row)
            if (rng.bernoulli(params.p)) kept.push_back(w);
        if (kept.empty()) {
            if (++failures > failure_budget)
                throw ConstructionError("DD: exceeded the duplication retry budget");
            continue;
        }
        const NodeId replica = builder.add_node();
        for (NodeId w : kept) builder.add_edge(replica, w);
    }
    return builder.build();
}

Graph generate_community(const CommunityParams& params, Seed seed) {
    validate(params);
    Rng rng(seed);

    const std::size_t n = std::accumulate(params.sizes.begin(), params.sizes.end(), std::size_t{0});
    std::vector<std::uint32_t> group(n);
    {
        std::size_t next = 0;
        for (std::size_t c = 0; c < params.sizes.size(); ++c)
            for (std::size_t i = 0; i < params.sizes[c]; ++i) group[next++] = static_cast<std::uint32_t>(c);
    }

    GraphBuilder builder(n);
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            const double p = group[u] == group[v] ? params.p_in : params.p_out;
            if (rng.bernoulli(p)) builder.add_edge(u, v);
        }
    }
    return builder.build();
}

Graph generate(const ModelParams& params, Seed seed) {
    return std::visit(overloaded{
                          [&](const WsParams& p) { return generate_ws(p, seed); },
                          [&](const CbaParams& p) { return generate_cba(p, seed); },
                          [&](const DdParams& p) { return generate_dd(p, seed); },
                          [&](const CommunityParams& p) { return generate_community(p, seed); },
                          [&](const TwoKParams& p) { return generate_2k(p, seed); },
                      },
                      params);
}

}  // namespace netfit
