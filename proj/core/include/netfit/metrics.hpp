#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "netfit/graph.hpp"

namespace netfit {

/// The topological summary of one graph, one field per reported attribute.
struct FeatureVector {
    double size = 0;
    double density = 0;
    double assort = 0;
    double avg_clust = 0;
    double avg_deg = 0;
    double max_eigenv_c = 0;
    double avg_path_length = 0;
    double skew_deg_dist = 0;

    /// Set when assortativity hit the zero-variance convention.
    bool assort_degenerate = false;

    static constexpr std::array<std::string_view, 8> names{
        "size", "density", "assort", "avg_clust", "avg_deg",
        "max_eigenv_c", "avg_path_length", "skew_deg_dist"};

    std::array<double, 8> values() const {
        return {size, density, assort, avg_clust, avg_deg, max_eigenv_c, avg_path_length, skew_deg_dist};
    }

    /// Everything except size; the vector compared by goodness-of-fit scoring.
    std::array<double, 7> topology() const {
        return {density, assort, avg_clust, avg_deg, max_eigenv_c, avg_path_length, skew_deg_dist};
    }
};

inline constexpr std::array<std::string_view, 7> kTopologyNames{
    "density", "assort", "avg_clust", "avg_deg", "max_eigenv_c", "avg_path_length", "skew_deg_dist"};

struct Assortativity {
    double value = 0;
    bool degenerate = false;
};

struct EigenvectorOptions {
    double tolerance = 1e-10;
    std::size_t max_iterations = 10'000;
    /// Hand a stalled power iteration to restarted Lanczos before giving up.
    bool lanczos_fallback = true;
};

/// m / C(n,2). Throws DomainError for n < 2.
double density(const Graph& g);

/// 2m / n; 0 for the empty graph.
double average_degree(const Graph& g);

/// Degree correlation over both orientations of every edge. Returns 0 with
/// `degenerate` set when every edge end has the same degree.
Assortativity assortativity(const Graph& g);

/// Local clustering of one node; 0 when deg(v) < 2.
double local_clustering(const Graph& g, NodeId v);
double average_clustering(const Graph& g);

/// Largest entry of the unit-norm principal eigenvector of the adjacency matrix.
///
/// Power iteration on A + I from the uniform vector; the shift leaves the
/// eigenvectors alone but removes the -lambda_max twin of bipartite graphs,
/// which would otherwise make the iteration oscillate. Near-lattice graphs
/// have tiny spectral gaps and can stall at the cap; Lanczos then finishes the
/// job (unless disabled). Throws ConvergenceError, carrying the last power
/// step size, when neither converges.
double max_eigenvector_centrality(const Graph& g, EigenvectorOptions options = {});

/// Mean within-component shortest-path distance over ordered pairs, divided by n-1.
double average_path_length_normalized(const Graph& g);

/// Population skewness of the degree sequence; 0 for regular graphs.
double degree_skewness(const Graph& g);

/// Population standard deviation of the degree sequence.
double degree_std(const Graph& g);

/// Requires n >= 2 and m >= 1.
FeatureVector feature_vector(const Graph& g);

}  // namespace netfit
