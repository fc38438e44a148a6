// 2K-Simple construction with Neighbour Switch.
//
// Degree classes are wired one (k,l) entry at a time. A random pair of
// non-adjacent nodes from the two classes is connected; when one of them has
// no free stub left, a Neighbour Switch moves one of its edges (x,t) onto a
// same-degree node x' that still has a free stub, which leaves every JDM entry
// unchanged and frees a stub on x.

#include <algorithm>
#include <set>
#include <tuple>

#include "netfit/error.hpp"
#include "netfit/generators.hpp"

namespace netfit {

namespace {

constexpr NodeId kNoNode = static_cast<NodeId>(-1);

class TwoKBuilder {
public:
    TwoKBuilder(const std::map<std::size_t, std::size_t>& degree_counts) {
        std::size_t total = 0;
        for (const auto& [k, count] : degree_counts) total += count;
        builder_ = GraphBuilder(total);
        residual_.resize(total);
        NodeId next = 0;
        for (const auto& [k, count] : degree_counts) {
            auto& members = members_[k];
            auto& open = unsaturated_[k];
            for (std::size_t i = 0; i < count; ++i, ++next) {
                members.push_back(next);
                open.insert(next);
                residual_[next] = k;
            }
        }
    }

    void wire(std::size_t k, std::size_t l, std::size_t count, Rng& rng) {
        const auto& from = members_.at(k);
        const auto& to = members_.at(l);
        std::size_t misses = 0;
        while (count > 0) {
            NodeId v = from[rng.uniform_index(from.size())];
            NodeId w = to[rng.uniform_index(to.size())];
            if (v == w || builder_.has_edge(v, w)) {
                // Dense class pairs: stop sampling blindly and draw from the
                // remaining non-adjacent pairs instead.
                if (++misses < 32) continue;
                std::tie(v, w) = pick_open_pair(from, to, k == l, rng);
            }
            misses = 0;
            if (residual_[v] == 0) neighbour_switch(v, k, kNoNode);
            if (residual_[w] == 0) neighbour_switch(w, l, k == l ? v : kNoNode);
            connect(v, w, k, l);
            --count;
        }
    }

    Graph finish() const {
        for (std::size_t r : residual_)
            if (r != 0) throw ConstructionError("2K: stubs left unmatched");
        return builder_.build();
    }

private:
    std::pair<NodeId, NodeId> pick_open_pair(const std::vector<NodeId>& from, const std::vector<NodeId>& to,
                                             bool same_class, Rng& rng) const {
        std::vector<std::pair<NodeId, NodeId>> open;
        for (NodeId v : from)
            for (NodeId w : to) {
                if (same_class && w <= v) continue;
                if (v != w && !builder_.has_edge(v, w)) open.emplace_back(v, w);
            }
        if (open.empty()) throw ConstructionError("2K: no non-adjacent pair left in a degree class pair");
        return open[rng.uniform_index(open.size())];
    }

    void connect(NodeId v, NodeId w, std::size_t k, std::size_t l) {
        builder_.add_edge(v, w);
        if (--residual_[v] == 0) unsaturated_[k].erase(v);
        if (--residual_[w] == 0) unsaturated_[l].erase(w);
    }

    // Frees one stub on the saturated node x of degree class k. `avoid` is the
    // partner about to be connected to x; it may not be used as the switch
    // partner if that would consume its last free stub.
    void neighbour_switch(NodeId x, std::size_t k, NodeId avoid) {
        auto& open = unsaturated_[k];
        NodeId partner = kNoNode;
        for (NodeId candidate : open) {
            if (candidate == avoid && residual_[avoid] <= 1) continue;
            partner = candidate;
            break;
        }
        if (partner == kNoNode) throw ConstructionError("2K: no same-degree node with a free stub");

        std::vector<NodeId> row(builder_.neighbors(x).begin(), builder_.neighbors(x).end());
        std::sort(row.begin(), row.end());
        for (NodeId t : row) {
            if (t == partner || builder_.has_edge(partner, t)) continue;
            builder_.remove_edge(x, t);
            builder_.add_edge(partner, t);
            ++residual_[x];
            open.insert(x);
            if (--residual_[partner] == 0) open.erase(partner);
            return;
        }
        throw ConstructionError("2K: neighbour switch found no movable edge");
    }

    GraphBuilder builder_;
    std::vector<std::size_t> residual_;
    std::map<std::size_t, std::vector<NodeId>> members_;
    std::map<std::size_t, std::set<NodeId>> unsaturated_;
};

}  // namespace

Graph generate_2k(const TwoKParams& params, Seed seed) {
    validate(params);
    const auto counts = validate_jdm(params.jdm).degree_counts;
    Rng rng(seed);
    TwoKBuilder construction(counts);

    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> classes;
    for (const auto& [key, count] : params.jdm.entries)
        if (count > 0) classes.emplace_back(key.first, key.second, count);
    std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        const auto [ka, la, ca] = a;
        const auto [kb, lb, cb] = b;
        if (ka + la != kb + lb) return ka + la > kb + lb;
        return ka > kb;
    });

    for (const auto& [k, l, count] : classes) construction.wire(k, l, count, rng);
    return construction.finish();
}

}  // namespace netfit
