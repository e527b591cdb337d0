#ifndef EVC_BLOCK_CUT_TREE_HPP
#define EVC_BLOCK_CUT_TREE_HPP

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "evc/chordal.hpp"
#include "evc/graph.hpp"

namespace evc {

enum class BlockKind { Edge, Cycle, BiconnectedChordal, Other };

inline const char* to_string(BlockKind k) {
    switch (k) {
        case BlockKind::Edge: return "edge";
        case BlockKind::Cycle: return "cycle";
        case BlockKind::BiconnectedChordal: return "chordal";
        default: return "other";
    }
}

struct Block {
    std::vector<int> vertices;              // sorted
    std::vector<std::pair<int, int>> edges; // all edges of g between block vertices
    BlockKind kind = BlockKind::Other;
};

// Classification precedence: Edge, then Cycle, then chordality test.
// (K3 counts as a cycle, keeping cactus blocks in the cycle branch.)
inline BlockKind classify_block(const Block& b, const Graph& g) {
    size_t nb = b.vertices.size();
    if (nb == 2) return BlockKind::Edge;
    if (nb >= 3 && b.edges.size() == nb) {
        std::vector<int> deg(nb, 0);
        auto local = [&](int v) {
            return std::lower_bound(b.vertices.begin(), b.vertices.end(), v) -
                   b.vertices.begin();
        };
        for (auto [u, v] : b.edges) {
            ++deg[local(u)];
            ++deg[local(v)];
        }
        if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; }))
            return BlockKind::Cycle;
    }
    if (nb >= 3 && is_chordal(g.induced(b.vertices))) return BlockKind::BiconnectedChordal;
    return BlockKind::Other;
}

// Blocks, cut vertices and the bipartite block/cut-vertex tree of a
// connected graph. Every edge lies in exactly one block; a vertex is a cut
// vertex iff it lies in at least two blocks.
class BlockCutTree {
public:
    const std::vector<Block>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    bool is_cut(int v) const { return cut_flag_[v]; }
    const std::vector<int>& cut_vertices() const { return cut_vertices_; }

    // All blocks containing v (one entry for non-cut vertices).
    std::span<const int> blocks_of(int v) const {
        return {membership_.data() + member_offset_[v],
                membership_.data() + member_offset_[v + 1]};
    }

    // Some block containing v; the unique one when v is not a cut vertex.
    int block_of(int v) const { return blocks_of(v).front(); }

    friend BlockCutTree biconnected_components(const Graph& g);

private:
    std::vector<Block> blocks_;
    std::vector<char> cut_flag_;
    std::vector<int> cut_vertices_;
    std::vector<int> member_offset_; // CSR: vertex -> blocks containing it
    std::vector<int> membership_;
};

// Lowpoint decomposition with an explicit stack (no call recursion, so
// million-vertex path-like inputs are fine). Rejects disconnected input.
inline BlockCutTree biconnected_components(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw UnsupportedGraphError("empty graph");

    BlockCutTree tree;
    tree.cut_flag_.assign(n, 0);
    tree.member_offset_.assign(n + 1, 0);
    if (n == 1) return tree; // single vertex: no blocks

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    edge_stack.reserve(g.edge_count());

    struct Frame {
        int v;
        int parent;
        int adj_pos;
        bool parent_edge_skipped;
    };
    std::vector<Frame> stack;
    int timer = 0;
    std::vector<int> vertex_scratch;

    auto emit_block = [&](int u, int v) {
        // Edges on the stack above (and including) (u, v) form one block.
        size_t base = edge_stack.size();
        while (base > 0) {
            auto [a, b] = edge_stack[base - 1];
            --base;
            if (a == u && b == v) break;
        }
        Block blk;
        blk.edges.assign(edge_stack.begin() + base, edge_stack.end());
        edge_stack.resize(base);
        vertex_scratch.clear();
        for (auto [a, b] : blk.edges) {
            vertex_scratch.push_back(a);
            vertex_scratch.push_back(b);
        }
        std::sort(vertex_scratch.begin(), vertex_scratch.end());
        vertex_scratch.erase(std::unique(vertex_scratch.begin(), vertex_scratch.end()),
                             vertex_scratch.end());
        blk.vertices.assign(vertex_scratch.begin(), vertex_scratch.end());
        tree.blocks_.push_back(std::move(blk));
    };

    disc[0] = low[0] = timer++;
    stack.push_back({0, -1, 0, false});

    while (!stack.empty()) {
        Frame& f = stack.back();
        auto nb = g.neighbors(f.v);
        if (f.adj_pos < static_cast<int>(nb.size())) {
            int w = nb[f.adj_pos++];
            if (w == f.parent && !f.parent_edge_skipped) {
                f.parent_edge_skipped = true;
                continue;
            }
            if (disc[w] == -1) {
                edge_stack.emplace_back(f.v, w);
                disc[w] = low[w] = timer++;
                stack.push_back({w, f.v, 0, false});
            } else if (disc[w] < disc[f.v]) {
                edge_stack.emplace_back(f.v, w);
                low[f.v] = std::min(low[f.v], disc[w]);
            }
        } else {
            int v = f.v;
            int parent = f.parent;
            stack.pop_back();
            if (parent >= 0) {
                low[parent] = std::min(low[parent], low[v]);
                if (low[v] >= disc[parent]) emit_block(parent, v);
            }
        }
    }
    if (timer < n) throw DisconnectedError(g.component_count());

    for (const auto& blk : tree.blocks_)
        for (int w : blk.vertices) ++tree.member_offset_[w + 1];
    for (int v = 0; v < n; ++v) tree.member_offset_[v + 1] += tree.member_offset_[v];
    tree.membership_.resize(tree.member_offset_[n]);
    std::vector<int> cursor(tree.member_offset_.begin(), tree.member_offset_.end() - 1);
    for (int b = 0; b < static_cast<int>(tree.blocks_.size()); ++b)
        for (int w : tree.blocks_[b].vertices) tree.membership_[cursor[w]++] = b;

    for (int v = 0; v < n; ++v)
        if (tree.blocks_of(v).size() >= 2) {
            tree.cut_flag_[v] = 1;
            tree.cut_vertices_.push_back(v);
        }
    for (auto& blk : tree.blocks_) blk.kind = classify_block(blk, g);
    return tree;
}

// A connected graph is a cactus iff every block is an edge or a cycle.
inline bool is_cactus(const Graph& g) {
    BlockCutTree tree = biconnected_components(g);
    for (const auto& b : tree.blocks())
        if (b.kind != BlockKind::Edge && b.kind != BlockKind::Cycle) return false;
    return true;
}

} // namespace evc

#endif // EVC_BLOCK_CUT_TREE_HPP
