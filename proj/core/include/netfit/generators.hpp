#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "netfit/graph.hpp"
#include "netfit/jdm.hpp"
#include "netfit/rng.hpp"

namespace netfit {

/// Watts-Strogatz: ring of n nodes, each linked to `degree`/2 neighbours per side.
struct WsParams {
    std::size_t n = 0;
    std::size_t degree = 2;  // K, even
    double p = 0;
    friend bool operator==(const WsParams&, const WsParams&) = default;
};

/// Clustering Barabasi-Albert (Holme-Kim).
struct CbaParams {
    std::size_t n = 0;
    std::size_t m = 1;
    double p = 0;  // triad formation probability
    friend bool operator==(const CbaParams&, const CbaParams&) = default;
};

/// Duplication-divergence.
struct DdParams {
    std::size_t n = 0;
    double p = 1;  // edge activation probability
    friend bool operator==(const DdParams&, const DdParams&) = default;
};

/// Planted partition with arbitrary group sizes.
struct CommunityParams {
    std::vector<std::size_t> sizes;
    double p_in = 0;
    double p_out = 0;
    friend bool operator==(const CommunityParams&, const CommunityParams&) = default;
};

/// Prescribed joint degree matrix.
struct TwoKParams {
    JointDegreeMatrix jdm;
    friend bool operator==(const TwoKParams&, const TwoKParams&) = default;
};

using ModelParams = std::variant<WsParams, CbaParams, DdParams, CommunityParams, TwoKParams>;

/// "WS", "CBA", "DD", "Com" or "2K".
std::string model_name(const ModelParams& params);

/// Node count the parameters produce.
std::size_t model_size(const ModelParams& params);

/// Throws ParameterError when the parameters violate the model's invariants.
void validate(const WsParams& params);
void validate(const CbaParams& params);
void validate(const DdParams& params);
void validate(const CommunityParams& params);
void validate(const TwoKParams& params);

Graph generate_ws(const WsParams& params, Seed seed);
Graph generate_cba(const CbaParams& params, Seed seed);

/// Gives up with ConstructionError after 10'000 * n consecutive-or-not failed
/// duplication attempts.
Graph generate_dd(const DdParams& params, Seed seed);
Graph generate_community(const CommunityParams& params, Seed seed);

/// 2K-Simple construction: a simple graph whose joint degree matrix equals
/// `params.jdm` exactly. Nodes are numbered by ascending degree.
Graph generate_2k(const TwoKParams& params, Seed seed);

Graph generate(const ModelParams& params, Seed seed);

}  // namespace netfit
