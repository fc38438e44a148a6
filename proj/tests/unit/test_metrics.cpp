#include <doctest.h>

#include <cmath>
#include <random>

#include "graphs.hpp"
#include "netfit/error.hpp"
#include "netfit/metrics.hpp"
#include "oracles.hpp"

using namespace netfit;
using doctest::Approx;

namespace {

void check_against_oracles(const Graph& g) {
    const auto a = oracle::adjacency(g);
    const auto f = feature_vector(g);
    CHECK(f.density == Approx(oracle::density(a)).epsilon(1e-12));
    CHECK(f.avg_deg == Approx(oracle::average_degree(a)).epsilon(1e-12));
    CHECK(std::abs(f.assort - oracle::assortativity(a)) < 1e-8);
    CHECK(std::abs(f.avg_clust - oracle::average_clustering(a)) < 1e-8);
    CHECK(std::abs(f.max_eigenv_c - oracle::max_eigenvector_centrality(a)) < 1e-8);
    CHECK(std::abs(f.avg_path_length - oracle::average_path_length_normalized(a)) < 1e-8);
    CHECK(std::abs(f.skew_deg_dist - oracle::degree_skewness(a)) < 1e-8);
}

}  // namespace

TEST_CASE("density") {
    CHECK(density(testgraphs::complete(4)) == 1.0);
    CHECK(density(testgraphs::path(3)) == Approx(2.0 / 3.0));
    CHECK(density(testgraphs::star(3)) == 0.5);
    CHECK_THROWS_AS(density(graph_from_edges(1, {})), DomainError);
}

TEST_CASE("average degree") {
    CHECK(average_degree(testgraphs::triangle()) == 2.0);
    CHECK(average_degree(testgraphs::path(3)) == Approx(4.0 / 3.0));
    CHECK(average_degree(graph_from_edges(5, {})) == 0.0);
}

TEST_CASE("assortativity") {
    CHECK(assortativity(testgraphs::path(3)).value == Approx(-1.0));
    for (std::size_t leaves = 2; leaves < 8; ++leaves)
        CHECK(assortativity(testgraphs::star(leaves)).value == Approx(-1.0));
    const auto c5 = assortativity(testgraphs::cycle(5));
    CHECK(c5.value == 0.0);
    CHECK(c5.degenerate);
    CHECK_FALSE(assortativity(testgraphs::path(5)).degenerate);
}

TEST_CASE("clustering") {
    CHECK(average_clustering(testgraphs::triangle()) == 1.0);
    CHECK(average_clustering(testgraphs::star(3)) == 0.0);
    const auto k4_minus = testgraphs::make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(average_clustering(k4_minus) == Approx(5.0 / 6.0));
    CHECK(average_clustering(k4_minus) == Approx(oracle::average_clustering(oracle::adjacency(k4_minus))));
    CHECK(local_clustering(k4_minus, 0) == Approx(2.0 / 3.0));
    CHECK(local_clustering(k4_minus, 2) == 1.0);
}

TEST_CASE("eigenvector centrality") {
    CHECK(max_eigenvector_centrality(testgraphs::triangle()) == Approx(1.0 / std::sqrt(3.0)));
    CHECK(max_eigenvector_centrality(testgraphs::path(3)) == Approx(std::sqrt(2.0) / 2.0));
    CHECK(max_eigenvector_centrality(testgraphs::complete(4)) == Approx(0.5));
    CHECK_THROWS_AS(max_eigenvector_centrality(graph_from_edges(3, {})), DomainError);
    // Bipartite graphs have -lambda_max in the spectrum; the shift handles them.
    const auto k23 = testgraphs::complete_bipartite(2, 3);
    CHECK(max_eigenvector_centrality(k23) == Approx(oracle::max_eigenvector_centrality(oracle::adjacency(k23))));
}

TEST_CASE("eigenvector centrality: cap without fallback reports the residual") {
    EigenvectorOptions options;
    options.max_iterations = 3;
    options.lanczos_fallback = false;
    try {
        max_eigenvector_centrality(testgraphs::path(9), options);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.residual() > options.tolerance);
    }
    options.lanczos_fallback = true;
    CHECK(max_eigenvector_centrality(testgraphs::path(9), options) ==
          Approx(oracle::max_eigenvector_centrality(oracle::adjacency(testgraphs::path(9)))).epsilon(1e-9));
}

TEST_CASE("eigenvector centrality: long cycle with a chord needs the fallback") {
    // A ring with one shortcut has a tiny spectral gap.
    std::vector<Edge> edges;
    const std::size_t n = 1500;
    for (std::size_t i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, (i + 2) % n);
    }
    edges.emplace_back(0, n / 2);
    const auto g = graph_from_edges(n, edges);
    const double value = max_eigenvector_centrality(g);
    CHECK(value > 1.0 / std::sqrt(static_cast<double>(n)));
    CHECK(value <= 1.0);
}

TEST_CASE("average path length") {
    CHECK(average_path_length_normalized(testgraphs::complete(4)) == Approx(1.0 / 3.0));
    CHECK(average_path_length_normalized(testgraphs::path(3)) == Approx(2.0 / 3.0));
    CHECK(average_path_length_normalized(testgraphs::make(4, {{0, 1}, {2, 3}})) == Approx(1.0 / 3.0));
}

TEST_CASE("degree skewness") {
    CHECK(degree_skewness(testgraphs::cycle(6)) == 0.0);
    CHECK(degree_skewness(testgraphs::path(3)) == Approx(1.0 / std::sqrt(2.0)));
    CHECK(degree_skewness(testgraphs::star(3)) == Approx(2.0 / std::sqrt(3.0)));
}

TEST_CASE("feature vectors of named graphs") {
    const auto tri = feature_vector(testgraphs::triangle());
    CHECK(tri.values() == std::array<double, 8>{3, 1, 0, 1, 2, tri.max_eigenv_c, 0.5, 0});
    CHECK(tri.max_eigenv_c == Approx(0.57735).epsilon(1e-5));
    CHECK(tri.assort_degenerate);

    const auto k4 = feature_vector(testgraphs::complete(4));
    CHECK(k4.size == 4);
    CHECK(k4.density == 1.0);
    CHECK(k4.avg_deg == 3.0);
    CHECK(k4.max_eigenv_c == Approx(0.5));
    CHECK(k4.avg_path_length == Approx(1.0 / 3.0));

    const auto p3 = feature_vector(testgraphs::path(3));
    CHECK(p3.density == Approx(2.0 / 3.0));
    CHECK(p3.assort == Approx(-1.0));
    CHECK(p3.avg_clust == 0.0);
    CHECK(p3.avg_deg == Approx(4.0 / 3.0));
    CHECK(p3.max_eigenv_c == Approx(0.70711).epsilon(1e-5));
    CHECK(p3.avg_path_length == Approx(2.0 / 3.0));
    CHECK(p3.skew_deg_dist == Approx(0.70711).epsilon(1e-5));
}

TEST_CASE("oracle agreement on small connected graphs") {
    for (std::size_t n = 2; n <= 5; ++n)
        for (const auto& g : testgraphs::graphs_up_to_isomorphism(n))
            if (g.edge_count() > 0 && testgraphs::is_connected(g)) check_against_oracles(g);
}

TEST_CASE("oracle agreement on random graphs") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = 5 + static_cast<std::size_t>(rng() % 30);
        check_against_oracles(testgraphs::random_connected(n, 0.05 + 0.3 * (i % 4) / 3.0, rng));
    }
}

TEST_CASE("feature vector preconditions") {
    CHECK_THROWS_AS(feature_vector(graph_from_edges(1, {})), DomainError);
    CHECK_THROWS_AS(feature_vector(graph_from_edges(3, {})), DomainError);
}
