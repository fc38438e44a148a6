#include <doctest.h>

#include <cmath>

#include "corpus.hpp"
#include "graphs.hpp"
#include "netfit/error.hpp"
#include "netfit/fitting.hpp"
#include "netfit/metrics.hpp"

using namespace netfit;
using doctest::Approx;

namespace {

template <typename P>
const P& params_of(const FitReport& r) {
    return std::get<P>(r.params);
}

// Mean of `metric` over the replicate seeds the fit itself used.
template <typename Metric>
double replay(const FitReport& r, Metric metric) {
    double total = 0;
    for (std::size_t i = 0; i < r.replicates_per_eval; ++i)
        total += metric(generate(r.params, replicate_seed(r.master_seed, i)));
    return total / static_cast<double>(r.replicates_per_eval);
}

}  // namespace

TEST_CASE("grid then golden finds an interior minimum") {
    const auto f = [](double x) { return (x - 0.37) * (x - 0.37); };
    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i) grid.push_back(i / 10.0);
    const auto r = grid_then_golden(f, grid, 60);
    CHECK(r.argmin == Approx(0.37).epsilon(1e-3));
    CHECK(r.evaluations <= 60);

    const auto capped = grid_then_golden(f, grid, 11);
    CHECK(capped.evaluations == 11);
    CHECK(capped.argmin == Approx(0.4));
}

TEST_CASE("grid then golden breaks ties toward the smaller argument") {
    const auto flat = [](double) { return 1.0; };
    const auto r = grid_then_golden(flat, {0.0, 0.5, 1.0}, 20);
    CHECK(r.argmin == 0.0);
}

TEST_CASE("rounding rules") {
    CHECK(ws_ring_degree(testgraphs::complete(4)) == 4);
    CHECK(ws_ring_degree(testgraphs::path(20)) == 2);
    CHECK(cba_links_per_node(testgraphs::complete(4)) == 2);
    CHECK(cba_links_per_node(testgraphs::path(20)) == 1);
}

TEST_CASE("WS self-recovery in clustering mode") {
    const auto target = generate_ws({500, 6, 0.05}, 77);
    FitBudget budget;
    budget.seed = 5;
    const auto fit = fit_ws(target, WsTarget::clustering, budget);
    CHECK(fit.model == "WS");
    CHECK(params_of<WsParams>(fit).degree == 6);
    CHECK(params_of<WsParams>(fit).n == 500);
    CHECK(std::abs(params_of<WsParams>(fit).p - 0.05) <= 0.05);
    CHECK(fit.objective_value < 0.02);
    CHECK(fit.evaluations <= budget.max_evaluations);
    // The reported objective is exactly the replayed gap.
    CHECK(std::abs(std::abs(average_clustering(target) - replay(fit, average_clustering)) - fit.objective_value) <
          1e-12);
}

TEST_CASE("WS on a lattice ring sits on the lower boundary") {
    const auto ring = generate_ws({10, 4, 0.0}, 1);
    const auto fit = fit_ws(ring, WsTarget::clustering);
    CHECK(params_of<WsParams>(fit).p == 0.001);
}

TEST_CASE("WS degree-std mode") {
    const auto target = generate_ws({300, 4, 0.3}, 9);
    const auto fit = fit_ws(target, WsTarget::degree_std);
    CHECK(fit.model == "WS_STD");
    CHECK(std::abs(std::abs(degree_std(target) - replay(fit, degree_std)) - fit.objective_value) < 1e-12);
    CHECK(fit.objective_value < 0.1);
}

TEST_CASE("WS clustering mode fits clustering at least as well as degree-std mode") {
    const auto members = corpus::build(2, 60, 120, 31);
    double clustering_mode = 0, std_mode = 0;
    for (const auto& m : members) {
        FitBudget budget;
        budget.seed = 3;
        const double goal = average_clustering(m.graph);
        clustering_mode += fit_ws(m.graph, WsTarget::clustering, budget).objective_value;
        std_mode += std::abs(goal - replay(fit_ws(m.graph, WsTarget::degree_std, budget), average_clustering));
    }
    CHECK(clustering_mode <= std_mode);
}

TEST_CASE("WS rejects unfittable graphs") {
    CHECK_THROWS_AS(fit_ws(graph_from_edges(4, std::vector<Edge>{{0, 1}}), WsTarget::clustering), ParameterError);
    CHECK_THROWS_AS(fit_ws(testgraphs::complete(4), WsTarget::clustering), ParameterError);
}

TEST_CASE("CBA on a tree fits p = 0") {
    std::vector<Edge> edges;
    for (NodeId v = 1; v < 200; ++v) edges.emplace_back((v - 1) / 2, v);
    const auto fit = fit_cba(graph_from_edges(200, edges));
    CHECK(params_of<CbaParams>(fit).p == 0.0);
    CHECK(fit.objective_value == 0.0);
}

TEST_CASE("CBA self-recovery") {
    const auto target = generate_cba({400, 3, 0.6}, 21);
    FitBudget budget;
    budget.seed = 8;
    const auto fit = fit_cba(target, budget);
    CHECK(params_of<CbaParams>(fit).m == 3);
    CHECK(params_of<CbaParams>(fit).p >= 0.45);
    CHECK(params_of<CbaParams>(fit).p <= 0.75);
    CHECK(fit.objective_value < 0.03);
}

TEST_CASE("CBA on K4 rounds m") {
    const auto fit = fit_cba(testgraphs::complete(4));
    CHECK(params_of<CbaParams>(fit).n == 4);
    CHECK(params_of<CbaParams>(fit).m == 2);
    CHECK_FALSE(fit.notes.empty());
}

TEST_CASE("DD fits") {
    const auto target = generate_dd({300, 0.4}, 3);
    const auto fit = fit_dd(target);
    CHECK(fit.objective_value < 0.25 * density(target));
    CHECK(std::abs(std::abs(density(target) - replay(fit, density)) - fit.objective_value) < 1e-12);
    CHECK(fit.evaluations <= FitBudget{}.max_evaluations);

    CHECK(params_of<DdParams>(fit_dd(testgraphs::complete(4))).p == 1.0);

    const auto edge = fit_dd(testgraphs::path(2));
    CHECK(params_of<DdParams>(edge).n == 2);
    CHECK(edge.objective_value == 0.0);
}

TEST_CASE("community parameters") {
    Partition split;
    split.community = {0, 0, 0, 1, 1, 1};
    const auto disjoint = community_parameters(testgraphs::make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}), split);
    CHECK(disjoint.params.p_in == 1.0);
    CHECK(disjoint.params.p_out == 0.0);

    const auto bridged = community_parameters(testgraphs::barbell_triangles(), split);
    CHECK(bridged.params.p_in == 1.0);
    CHECK(bridged.params.p_out == Approx(1.0 / 9.0));

    Partition singletons;
    for (std::uint32_t v = 0; v < 8; ++v) singletons.community.push_back(v);
    const auto k44 = community_parameters(testgraphs::complete_bipartite(4, 4), singletons);
    CHECK(k44.p_in_undefined);
    CHECK(k44.params.p_in == 0.0);
    CHECK(k44.params.p_out == Approx(16.0 / 28.0));

    Partition one;
    one.community.assign(3, 0);
    const auto whole = community_parameters(testgraphs::triangle(), one);
    CHECK(whole.p_out_undefined);
    CHECK(whole.params.p_in == 1.0);
}

TEST_CASE("community fit keeps the node count") {
    const auto g = testgraphs::barbell_triangles();
    const auto fit = fit_community(g, 1);
    const auto& p = params_of<CommunityParams>(fit);
    CHECK(p.sizes.size() == 2);
    CHECK(model_size(fit.params) == 6);
    CHECK(p.p_in == 1.0);
    CHECK(p.p_out == Approx(1.0 / 9.0));
}

TEST_CASE("2K fit is the joint degree matrix") {
    const auto tri = fit_2k(testgraphs::triangle());
    CHECK(params_of<TwoKParams>(tri).jdm.at(2, 2) == 3);
    const auto p3 = fit_2k(testgraphs::path(3));
    CHECK(params_of<TwoKParams>(p3).jdm.at(1, 2) == 2);
    std::mt19937_64 rng(4);
    const auto g = testgraphs::random_connected(60, 0.08, rng);
    CHECK(density(generate(fit_2k(g).params, 3)) == density(g));
}

TEST_CASE("fit_all is deterministic and complete") {
    const auto g = corpus::brain_proxy(120, 6);
    FitBudget budget;
    budget.seed = 44;
    budget.replicates = 2;
    const auto a = fit_all(g, budget);
    const auto b = fit_all(g, budget);
    REQUIRE(a.size() == 6);
    const char* names[] = {"WS", "WS_STD", "CBA", "DD", "Com", "2K"};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(a[i].model == names[i]);
        CHECK(a[i].params == b[i].params);
        CHECK(a[i].objective_value == b[i].objective_value);
        CHECK(model_size(a[i].params) == g.node_count());
    }
}
