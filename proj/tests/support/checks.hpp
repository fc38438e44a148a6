#pragma once

// Property probes shared by the unit suite and the acceptance runner. Each
// returns the number of violations and a note on the first few.

#include <cstdint>
#include <string>
#include <vector>

#include "netfit/graph.hpp"

namespace checks {

struct Outcome {
    std::size_t trials = 0;
    std::size_t violations = 0;
    double worst = 0;  // largest deviation seen, where meaningful
    std::vector<std::string> notes;

    bool ok() const { return trials > 0 && violations == 0; }
    void fail(std::string note);
    std::string summary() const;
};

/// Largest |library - oracle| over the seven topology metrics of each graph.
Outcome metric_oracles(const std::vector<netfit::Graph>& graphs, double tolerance);

/// Every connected graph on 2..7 nodes, one per isomorphism class.
std::vector<netfit::Graph> connected_graphs_up_to(std::size_t max_n);

/// fit_2k -> generate_2k keeps the degree sequence and the JDM-determined
/// metrics. Isolated nodes of the inputs are dropped first.
Outcome twok_exactness(const std::vector<netfit::Graph>& graphs, double tolerance, std::uint64_t seed);

/// Non-negativity, identity, symmetry and the triangle inequality of the
/// Canberra distance on random nonnegative triples.
Outcome canberra_axioms(std::size_t trials, std::uint64_t seed);

/// First principal axis captures at least as much standardised variance as
/// any random unit direction.
Outcome pca_dominance(std::size_t directions, std::uint64_t seed);

Outcome ws_edge_law(std::size_t seeds);
Outcome cba_edge_law(std::size_t seeds);
/// Mean edge count within 3 standard errors; single draws within 3 sigma
/// except for at most 1% of seeds.
Outcome community_edge_law(std::size_t seeds);

}  // namespace checks
