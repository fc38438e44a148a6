#include "netfit/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "netfit/error.hpp"

namespace netfit {

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
    if (u >= node_count() || v >= node_count()) return false;
    if (degree(u) > degree(v)) std::swap(u, v);
    const auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

std::string Graph::label(NodeId v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (NodeId u = 0; u < node_count(); ++u)
        for (NodeId v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::relabeled(std::span<const NodeId> permutation) const {
    GraphBuilder builder(node_count());
    for (auto [u, v] : edges()) builder.add_edge(permutation[u], permutation[v]);
    return builder.build();
}

NodeId GraphBuilder::add_node() {
    adjacency_.emplace_back();
    return static_cast<NodeId>(adjacency_.size() - 1);
}

bool GraphBuilder::add_edge(NodeId u, NodeId v) {
    if (u == v) return false;
    if (!edge_keys_.insert(key(u, v)).second) return false;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    return true;
}

bool GraphBuilder::remove_edge(NodeId u, NodeId v) {
    if (edge_keys_.erase(key(u, v)) == 0) return false;
    auto drop = [](std::vector<NodeId>& row, NodeId x) {
        auto it = std::find(row.begin(), row.end(), x);
        *it = row.back();
        row.pop_back();
    };
    drop(adjacency_[u], v);
    drop(adjacency_[v], u);
    return true;
}

bool GraphBuilder::has_edge(NodeId u, NodeId v) const {
    return u != v && edge_keys_.contains(key(u, v));
}

Graph GraphBuilder::build() const {
    Graph g;
    const std::size_t n = adjacency_.size();
    g.offsets_.resize(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + adjacency_[v].size();
    g.targets_.resize(g.offsets_[n]);
    for (std::size_t v = 0; v < n; ++v) {
        auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        std::copy(adjacency_[v].begin(), adjacency_[v].end(), first);
        std::sort(first, first + static_cast<std::ptrdiff_t>(adjacency_[v].size()));
    }
    if (labels_.size() == n) g.labels_ = labels_;
    return g;
}

Graph graph_from_edges(std::size_t node_count, std::span<const Edge> edges) {
    GraphBuilder builder(node_count);
    for (auto [u, v] : edges) {
        if (u >= node_count || v >= node_count)
            throw ParameterError("edge endpoint out of range");
        builder.add_edge(u, v);
    }
    return builder.build();
}

namespace {

bool is_comment_or_blank(std::string_view line) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return true;
    return line[first] == '#' || line[first] == '%';
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::string> labels;
    std::vector<Edge> edges;

    auto intern = [&](const std::string& token) {
        auto [it, inserted] = ids.try_emplace(token, static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(token);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    std::size_t data_lines = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        ++data_lines;
        std::istringstream fields(line);
        std::string a, b;
        if (!(fields >> a >> b))
            throw ParseError("expected two node tokens", line_no);
        if (a == b) continue;  // self-loop
        const NodeId u = intern(a);
        const NodeId v = intern(b);
        edges.emplace_back(u, v);
    }
    if (data_lines == 0) throw ParseError("empty edge list");
    if (edges.empty()) throw ParseError("edge list contains only self-loops");

    GraphBuilder builder(labels.size());
    for (auto [u, v] : edges) builder.add_edge(u, v);
    builder.set_labels(std::move(labels));
    return builder.build();
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

Graph read_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return parse_edge_list(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

ComponentLabeling connected_components(const Graph& g) {
    const std::size_t n = g.node_count();
    constexpr auto unset = static_cast<std::uint32_t>(-1);
    ComponentLabeling result;
    result.label.assign(n, unset);
    std::vector<NodeId> stack;
    for (NodeId root = 0; root < n; ++root) {
        if (result.label[root] != unset) continue;
        const auto id = static_cast<std::uint32_t>(result.component_sizes.size());
        std::size_t size = 0;
        result.label[root] = id;
        stack.push_back(root);
        while (!stack.empty()) {
            const NodeId v = stack.back();
            stack.pop_back();
            ++size;
            for (NodeId w : g.neighbors(v)) {
                if (result.label[w] == unset) {
                    result.label[w] = id;
                    stack.push_back(w);
                }
            }
        }
        result.component_sizes.push_back(size);
    }
    return result;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
    std::vector<std::size_t> degrees(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) degrees[v] = g.degree(v);
    return degrees;
}

}  // namespace netfit
