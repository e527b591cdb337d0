#ifndef EVC_GRAPH_HPP
#define EVC_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace evc {

// Structural validation failure (self-loop, bad endpoint, duplicate edge, ...).
struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

// Edge-list text that does not conform to the input format. `line` is 1-based
// and counts every line of the input, comments included; 0 means the failure
// is not tied to a line (e.g. an unreadable file).
struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& what, int line_no)
        : std::runtime_error(line_no > 0 ? what + " at line " + std::to_string(line_no) : what),
          line(line_no) {}
};

// Input outside the class the algorithms handle (disconnected, empty,
// or containing a block that is neither an edge, a cycle nor chordal).
struct UnsupportedGraphError : std::runtime_error {
    explicit UnsupportedGraphError(const std::string& what) : std::runtime_error(what) {}
};

struct DisconnectedError : UnsupportedGraphError {
    int component_count;
    explicit DisconnectedError(int components)
        : UnsupportedGraphError("graph is disconnected (" + std::to_string(components) +
                                " components)"),
          component_count(components) {}
};

// Immutable simple undirected graph. Vertices are dense 0-based ids.
// Edges are stored normalized (u < v) in sorted order; adjacency lists are
// sorted. Instances never change after construction and are safe to share
// across threads.
class Graph {
public:
    Graph() = default;

    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list) : n_(vertex_count) {
        if (vertex_count < 0) throw GraphError("negative vertex count");
        edges_ = std::move(edge_list);
        for (auto& [u, v] : edges_) {
            if (u < 0 || v < 0 || u >= n_ || v >= n_)
                throw GraphError("edge endpoint out of range: " + std::to_string(u) + " " +
                                 std::to_string(v));
            if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw GraphError("duplicate edge");
        build_adjacency();
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::span<const int> neighbors(int v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

    int component_count() const {
        if (n_ == 0) return 0;
        std::vector<char> seen(n_, 0);
        std::vector<int> stack;
        int components = 0;
        for (int s = 0; s < n_; ++s) {
            if (seen[s]) continue;
            ++components;
            seen[s] = 1;
            stack.push_back(s);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : neighbors(v))
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
        }
        return components;
    }

    bool is_connected() const { return component_count() <= 1; }

    // Subgraph induced by `vertices`; local ids follow the given order.
    // Ids must be distinct and in range.
    Graph induced(const std::vector<int>& vertices) const {
        std::vector<int> local(n_, -1);
        for (size_t i = 0; i < vertices.size(); ++i) {
            int v = vertices[i];
            if (v < 0 || v >= n_) throw GraphError("induced: vertex out of range");
            if (local[v] != -1) throw GraphError("induced: duplicate vertex");
            local[v] = static_cast<int>(i);
        }
        std::vector<std::pair<int, int>> sub_edges;
        for (int v : vertices)
            for (int w : neighbors(v))
                if (v < w && local[w] != -1) sub_edges.emplace_back(local[v], local[w]);
        return Graph(static_cast<int>(vertices.size()), std::move(sub_edges));
    }

    // G_x^+: a copy with one extra vertex (id = vertex_count()) adjacent only to x.
    Graph with_pendant(int x) const {
        if (x < 0 || x >= n_) throw GraphError("with_pendant: vertex out of range");
        auto augmented = edges_;
        augmented.emplace_back(x, n_);
        return Graph(n_ + 1, std::move(augmented));
    }

    // Canonical edge-list text: "n m" then one "u v" line per edge with u < v,
    // edges sorted. Round-trips bit-exactly through parse_edge_list.
    std::string serialize() const {
        std::string out = std::to_string(n_) + " " + std::to_string(edge_count()) + "\n";
        for (auto [u, v] : edges_)
            out += std::to_string(u) + " " + std::to_string(v) + "\n";
        return out;
    }

private:
    void build_adjacency() {
        offsets_.assign(n_ + 1, 0);
        for (auto [u, v] : edges_) {
            ++offsets_[u + 1];
            ++offsets_[v + 1];
        }
        for (int i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
        adj_.resize(2 * edges_.size());
        std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
        for (auto [u, v] : edges_) {
            adj_[cursor[u]++] = v;
            adj_[cursor[v]++] = u;
        }
        for (int v = 0; v < n_; ++v)
            std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);
    }

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> adj_;
    std::vector<int> offsets_{0};
};

namespace detail {

inline bool parse_two_ints(const std::string& text, long long& a, long long& b) {
    std::istringstream in(text);
    std::string extra;
    if (!(in >> a >> b)) return false;
    if (in >> extra) return false;
    return true;
}

} // namespace detail

// Edge-list format: first non-comment line "n m", then m lines "u v" with
// 0 <= u,v < n. Tokens are whitespace-separated; a line whose first
// non-whitespace character is '#' is a comment. Blank lines are ignored.
inline Graph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::unordered_set<uint64_t> seen;
    long long edges_read = 0;

    auto is_blank_or_comment = [](const std::string& s) {
        size_t i = s.find_first_not_of(" \t\r\n\v\f");
        return i == std::string::npos || s[i] == '#';
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line)) continue;
        long long a, b;
        if (!detail::parse_two_ints(line, a, b)) throw ParseError("malformed line", line_no);
        if (n < 0) {
            if (a < 0 || b < 0) throw ParseError("negative counts in header", line_no);
            n = a;
            m = b;
            continue;
        }
        if (edges_read == m) throw ParseError("more edges than declared", line_no);
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw ParseError("vertex id out of range", line_no);
        if (a == b) throw ParseError("self-loop", line_no);
        uint64_t lo = static_cast<uint64_t>(std::min(a, b));
        uint64_t hi = static_cast<uint64_t>(std::max(a, b));
        if (!seen.insert((hi << 32) | lo).second) throw ParseError("duplicate edge", line_no);
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        ++edges_read;
    }
    if (n < 0) throw ParseError("missing header line", line_no == 0 ? 1 : line_no);
    if (edges_read != m) throw ParseError("fewer edges than declared", line_no == 0 ? 1 : line_no);
    return Graph(static_cast<int>(n), std::move(edges));
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

} // namespace evc

#endif // EVC_GRAPH_HPP
