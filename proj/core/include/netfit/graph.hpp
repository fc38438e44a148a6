#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace netfit {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Simple undirected unweighted graph, frozen after construction.
///
/// Adjacency is stored in compressed rows with each row sorted ascending, so
/// neighbour scans are cache-friendly and `has_edge` is a binary search.
/// Optional string labels map dense ids back to the tokens of the source file.
class Graph {
public:
    Graph() = default;

    std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return targets_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId v) const noexcept {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(NodeId u, NodeId v) const noexcept;

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::string label(NodeId v) const;

    /// Every edge once as (u, v) with u < v, in ascending order.
    std::vector<Edge> edges() const;

    /// Copy with node v renamed to permutation[v]. Labels are dropped.
    Graph relabeled(std::span<const NodeId> permutation) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
    }

private:
    friend class GraphBuilder;

    std::vector<std::size_t> offsets_;
    std::vector<NodeId> targets_;
    std::vector<std::string> labels_;
};

/// Mutable, single-owner graph under construction. Rejects self-loops and
/// parallel edges so whatever it freezes into satisfies the Graph invariants.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t node_count = 0) : adjacency_(node_count) {}

    NodeId add_node();
    std::size_t node_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_keys_.size(); }

    /// Returns false (and changes nothing) for self-loops and existing edges.
    bool add_edge(NodeId u, NodeId v);
    bool remove_edge(NodeId u, NodeId v);
    bool has_edge(NodeId u, NodeId v) const;

    std::size_t degree(NodeId v) const { return adjacency_[v].size(); }
    /// Current neighbours, in insertion order (perturbed by removals).
    std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[v]; }

    void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

    Graph build() const;

private:
    static std::uint64_t key(NodeId u, NodeId v) noexcept {
        if (u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(u) << 32) | v;
    }

    std::vector<std::vector<NodeId>> adjacency_;
    std::unordered_set<std::uint64_t> edge_keys_;
    std::vector<std::string> labels_;
};

/// Graph on `node_count` nodes holding the given edges (loops and repeats dropped).
Graph graph_from_edges(std::size_t node_count, std::span<const Edge> edges);

struct ComponentLabeling {
    std::vector<std::uint32_t> label;
    std::vector<std::size_t> component_sizes;

    std::size_t count() const noexcept { return component_sizes.size(); }
};

/// Reads a whitespace-separated edge list. '#' and '%' start comment lines;
/// columns after the second are ignored. Throws ParseError.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph read_edge_list(const std::filesystem::path& path);

/// One "u v" line per edge using the original labels when present.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

ComponentLabeling connected_components(const Graph& g);
std::vector<std::size_t> degree_sequence(const Graph& g);

}  // namespace netfit
