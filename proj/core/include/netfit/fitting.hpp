#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "netfit/generators.hpp"
#include "netfit/graph.hpp"
#include "netfit/louvain.hpp"
#include "netfit/rng.hpp"

namespace netfit {

/// Controls the stochastic argmin searches.
struct FitBudget {
    /// Graphs generated per candidate parameter; the objective is their mean.
    std::size_t replicates = 5;
    /// Candidate parameters evaluated per fit (grid plus refinement).
    std::size_t max_evaluations = 60;
    Seed seed = 0;
};

struct FitReport {
    /// "WS", "WS_STD", "CBA", "DD", "Com" or "2K".
    std::string model;
    ModelParams params;
    double objective_value = 0;
    std::size_t evaluations = 0;
    std::size_t replicates_per_eval = 0;
    Seed master_seed = 0;
    /// Rounding and degenerate-denominator remarks.
    std::vector<std::string> notes;
};

enum class WsTarget { clustering, degree_std };

/// Result of minimising a one-dimensional objective.
struct SearchResult {
    double argmin = 0;
    double value = 0;
    std::size_t evaluations = 0;
};

/// Evaluates every grid point (ascending), then golden-section refines inside
/// the bracket around the best one until `max_evaluations` is used up or the
/// bracket is narrower than `min_width`. Ties go to the smaller argument.
SearchResult grid_then_golden(const std::function<double(double)>& objective, const std::vector<double>& grid,
                              std::size_t max_evaluations, double min_width = 1e-4);

/// Seed of replicate `index` for a fit driven by `master`. Shared by every
/// candidate parameter so the smoothed objective is deterministic.
Seed replicate_seed(Seed master, std::size_t index);

/// Nearest even integer to the average degree, at least 2.
std::size_t ws_ring_degree(const Graph& g);
/// Nearest integer to |E|/|V|, at least 1.
std::size_t cba_links_per_node(const Graph& g);

/// Fits p over [0.001, 1] for WS with n = |V| and K = ws_ring_degree(g).
/// `clustering` matches the average clustering coefficient (reported as
/// "WS"); `degree_std` matches the degree standard deviation ("WS_STD").
FitReport fit_ws(const Graph& g, WsTarget target, const FitBudget& budget = {});

/// Fits the triad formation probability over [0, 1] against average clustering.
FitReport fit_cba(const Graph& g, const FitBudget& budget = {});

/// Fits the activation probability over (0, 1] against density.
FitReport fit_dd(const Graph& g, const FitBudget& budget = {});

struct CommunityEstimate {
    CommunityParams params;
    bool p_in_undefined = false;   // every community is a singleton
    bool p_out_undefined = false;  // a single community
};

/// p_in and p_out of a fixed partition; an empty denominator gives 0 and sets the flag.
CommunityEstimate community_parameters(const Graph& g, const Partition& partition);

/// Partition by louvain(g, seed), then community_parameters.
FitReport fit_community(const Graph& g, Seed seed);

/// Exact: the joint degree matrix of g.
FitReport fit_2k(const Graph& g);

/// The six fits of the pipeline in order WS, WS_STD, CBA, DD, Com, 2K.
std::vector<FitReport> fit_all(const Graph& g, const FitBudget& budget = {});

}  // namespace netfit
