#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "netfit/graph.hpp"
#include "netfit/rng.hpp"

namespace netfit {

struct Partition {
    /// Dense community ids 0..count()-1.
    std::vector<std::uint32_t> community;
    double modularity = 0;

    std::size_t count() const;
    std::vector<std::size_t> sizes() const;
};

/// Newman modularity at resolution 1: sum over communities of e_c/m - (d_c/2m)^2.
double modularity(const Graph& g, std::span<const std::uint32_t> community);

/// Multi-level modularity optimisation (local moves, then aggregation, until a
/// level makes no move). The node sweep order of every level is shuffled by
/// `seed`. Graphs without edges come back as all-singleton partitions.
Partition louvain(const Graph& g, Seed seed);

}  // namespace netfit
