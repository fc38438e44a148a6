#pragma once

// Brute-force reference implementations. They work on a dense 0/1 adjacency
// matrix and share no code with the library.

#include <cstdint>
#include <vector>

#include "netfit/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

Matrix adjacency(const netfit::Graph& g);

double density(const Matrix& a);
double average_degree(const Matrix& a);
/// Pearson correlation of endpoint degrees over both orientations of every
/// edge; 0 when either side has zero variance.
double assortativity(const Matrix& a);
/// Triangle enumeration over neighbour pairs.
double average_clustering(const Matrix& a);
/// Dense symmetric eigen-solver (Eigen); max entry of the unit principal vector.
double max_eigenvector_centrality(const Matrix& a);
/// Floyd-Warshall; mean over reachable ordered pairs divided by n-1.
double average_path_length_normalized(const Matrix& a);
/// g1 = m3 / m2^1.5 from raw degree moments; 0 when m2 = 0.
double degree_skewness(const Matrix& a);

/// Q = (1/2m) sum_ij [A_ij - k_i k_j / 2m] delta(c_i, c_j).
double modularity(const Matrix& a, const std::vector<std::uint32_t>& community);

/// Best modularity over every set partition of the nodes (n <= 10).
std::vector<std::uint32_t> best_partition(const Matrix& a);

}  // namespace oracle
