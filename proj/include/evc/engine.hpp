#ifndef EVC_ENGINE_HPP
#define EVC_ENGINE_HPP

#include <chrono>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "evc/block_cut_tree.hpp"
#include "evc/chordal.hpp"
#include "evc/graph.hpp"
#include "evc/types.hpp"

// Recursive computation of the eternal vertex cover number for connected
// graphs whose blocks are edges, cycles or biconnected chordal graphs.
//
// The block-cut tree is rooted and folded leaf-to-root. For a component H
// hanging below an anchor vertex x, the value of the recursion is the triple
// (evc(H), evc_x(H), type of H with respect to x). Components meeting at a
// cut vertex combine by the cut-vertex formula; a block folds its child
// components into a chi accumulator and applies the formula for its kind.

namespace evc {

// Value of the recursion for one anchored component.
// evc_anchor = evc_x(H) >= evc(H). Type1 means evc(H_x^+) = evc_anchor,
// Type2 means evc(H_x^+) = evc_anchor + 1.
struct EvcSummary {
    long long evc = 0;
    long long evc_anchor = 0;
    VertexType vtype = VertexType::Type1;
    int anchor = -1;
};

// chi(G, B): cut vertices of B plus, over the components hanging off them,
// (evc_x - 2) per Type1 component and (evc_x - 1) per Type2 component.
struct ChiAccumulator {
    long long cut_count = 0;
    long long type1_sum = 0;
    long long type2_sum = 0;
    bool has_type1 = false;

    void add_cut_vertex() { ++cut_count; }

    void add_component(const EvcSummary& s) {
        if (s.vtype == VertexType::Type1) {
            type1_sum += s.evc_anchor - 2;
            has_type1 = true;
        } else {
            type2_sum += s.evc_anchor - 1;
        }
    }

    long long value() const { return cut_count + type1_sum + type2_sum; }
};

// Cut-vertex combination. All parts share the anchor x.
// All parts Type2:  evc = evc_x = 1 + sum(evc_x(G_i) - 1), Type2.
// Some part Type1:  evc = evc_x = 2 + sum_{T1}(evc_x - 2) + sum_{T2}(evc_x - 1), Type1.
inline EvcSummary combine_at_cut_vertex(std::span<const EvcSummary> parts) {
    if (parts.empty())
        throw std::invalid_argument("combine_at_cut_vertex: empty component list");
    bool any_type1 = false;
    long long all_type2 = 1, mixed = 2;
    for (const auto& s : parts) {
        if (s.vtype == VertexType::Type1) {
            any_type1 = true;
            mixed += s.evc_anchor - 2;
        } else {
            mixed += s.evc_anchor - 1;
            all_type2 += s.evc_anchor - 1;
        }
    }
    EvcSummary out;
    out.anchor = parts.front().anchor;
    out.evc = out.evc_anchor = any_type1 ? mixed : all_type2;
    out.vtype = any_type1 ? VertexType::Type1 : VertexType::Type2;
    return out;
}

inline EvcSummary combine_at_cut_vertex(const std::vector<EvcSummary>& parts) {
    return combine_at_cut_vertex(std::span<const EvcSummary>(parts));
}

// evc of a graph whose root block is a cycle on n_b vertices with k_b cut
// vertices: ceil((n_b-k_b)/2) + chi without Type1 components,
// ceil((n_b-k_b+1)/2) + chi with one.
inline long long cycle_block_evc(long long n_b, long long k_b, const ChiAccumulator& chi) {
    if (k_b > n_b || k_b < 0 || n_b < 3)
        throw std::invalid_argument("cycle_block_evc: bad block parameters");
    long long free_vertices = n_b - k_b;
    long long on_cycle =
        chi.has_type1 ? (free_vertices + 2) / 2 : (free_vertices + 1) / 2;
    return on_cycle + chi.value();
}

// (evc_v, type) for a non-cut vertex v of a cycle block, given evc(G).
inline std::pair<long long, VertexType> cycle_vertex_type(long long n_b, long long k_b,
                                                          const ChiAccumulator& chi,
                                                          long long base_evc) {
    bool even = ((n_b - k_b) % 2) == 0;
    if (chi.has_type1)
        return {even ? base_evc : base_evc + 1, VertexType::Type1};
    if (even) return {base_evc + 1, VertexType::Type1};
    return {base_evc, VertexType::Type2};
}

// Lift a component summary through a pendant edge: H = inner plus a new
// pendant vertex attached at inner's anchor. The type carries over;
// evc_pendant(H) = evc_anchor(inner) + 1; evc(H) pays the extra guard only
// in the Type2 case.
inline EvcSummary pendant_lift(const EvcSummary& inner, int pendant_vertex) {
    EvcSummary out;
    out.anchor = pendant_vertex;
    out.evc_anchor = inner.evc_anchor + 1;
    out.vtype = inner.vtype;
    out.evc = inner.vtype == VertexType::Type1 ? inner.evc_anchor : inner.evc_anchor + 1;
    return out;
}

// evc of a graph whose root block is biconnected chordal, with the given cut
// set (local ids into `block`).
inline long long chordal_block_evc(const Graph& block, const std::vector<int>& cut_set,
                                   const ChiAccumulator& chi) {
    long long k = static_cast<long long>(cut_set.size());
    if (!chi.has_type1) return evc_forced(block, cut_set) + chi.value() - k;
    return mvc_forced(block, cut_set) + 1 + chi.value() - k;
}

// (evc_v, type) for a non-cut vertex v (local id) of a chordal block.
// evc(G_v^+) follows from re-running the block formula with v as an extra
// cut vertex whose hanging component is a pendant edge (Type1, evc_x = 2):
// chi gains exactly the new cut vertex and has_type1 becomes true.
inline std::pair<long long, VertexType> chordal_vertex_type(const Graph& block,
                                                            const std::vector<int>& cut_set,
                                                            const ChiAccumulator& chi, int v) {
    std::vector<int> with_v(cut_set.begin(), cut_set.end());
    with_v.push_back(v);
    long long k = static_cast<long long>(cut_set.size());
    long long mvc_with_v = mvc_forced(block, with_v);
    long long evc_v = chi.has_type1 ? mvc_with_v + 1 + chi.value() - k
                                    : evc_forced(block, with_v) + chi.value() - k;
    long long evc_plus = mvc_with_v + 1 + chi.value() - k;
    return {evc_v, evc_v == evc_plus ? VertexType::Type1 : VertexType::Type2};
}

struct BlockRow {
    BlockKind kind = BlockKind::Other;
    int size = 0;
    int cut_count = 0; // cut vertices folded at this block (child side)
    long long chi = 0;
    const char* branch = ""; // static formula-branch tag
};

struct EvcResult {
    long long evc = 0;
    std::optional<int> query_vertex;
    std::optional<long long> evc_v;
    std::optional<VertexType> vtype;
    std::vector<BlockRow> blocks;
    double decompose_seconds = 0.0;
    double solve_seconds = 0.0;
};

namespace detail {

inline EvcSummary k1_summary(int v) { return {0, 1, VertexType::Type1, v}; }

// Post-order fold over the block-cut tree. The tree is rooted either at the
// query vertex's node or at `root_block`; summaries flow leaf-to-root with
// explicit worklists only (no call recursion).
inline EvcResult run_engine(const Graph& g, const BlockCutTree& bct, std::optional<int> query,
                            int root_block) {
    using clock = std::chrono::steady_clock;
    auto t_start = clock::now();

    EvcResult result;
    result.query_vertex = query;
    int n = g.vertex_count();
    int block_count = bct.block_count();

    for (int b = 0; b < block_count; ++b)
        if (bct.blocks()[b].kind == BlockKind::Other)
            throw UnsupportedGraphError(
                "block " + std::to_string(b) + " (" +
                std::to_string(bct.blocks()[b].vertices.size()) +
                " vertices) is neither an edge, a cycle nor biconnected chordal");

    // Bipartite tree nodes: block b -> b, cut vertex v -> block_count + v.
    int root_node;
    if (query && bct.is_cut(*query)) root_node = block_count + *query;
    else if (query) root_node = bct.block_of(*query);
    else root_node = root_block;

    std::vector<int> parent(block_count + n, -2);
    std::vector<int> order;
    order.reserve(block_count + static_cast<size_t>(bct.cut_vertices().size()));
    parent[root_node] = -1;
    order.push_back(root_node);
    for (size_t head = 0; head < order.size(); ++head) {
        int node = order[head];
        if (node < block_count) {
            for (int v : bct.blocks()[node].vertices) {
                if (!bct.is_cut(v)) continue;
                int cut_node = block_count + v;
                if (parent[cut_node] == -2) {
                    parent[cut_node] = node;
                    order.push_back(cut_node);
                }
            }
        } else {
            int v = node - block_count;
            for (int b : bct.blocks_of(v))
                if (parent[b] == -2) {
                    parent[b] = node;
                    order.push_back(b);
                }
        }
    }

    std::vector<EvcSummary> block_summary(block_count);
    std::vector<EvcSummary> cut_summary(n);
    std::vector<EvcSummary> parts_buffer;

    auto fold_children = [&](int b, int anchor, ChiAccumulator& chi) {
        int child_cuts = 0;
        for (int v : bct.blocks()[b].vertices) {
            if (!bct.is_cut(v) || v == anchor) continue;
            chi.add_cut_vertex();
            chi.add_component(cut_summary[v]);
            ++child_cuts;
        }
        return child_cuts;
    };

    auto local_ids = [&](const Block& blk, const std::vector<int>& globals) {
        std::vector<int> out;
        out.reserve(globals.size());
        for (int v : globals)
            out.push_back(static_cast<int>(
                std::lower_bound(blk.vertices.begin(), blk.vertices.end(), v) -
                blk.vertices.begin()));
        return out;
    };

    // Leaf-to-root pass over all non-root nodes.
    for (size_t idx = order.size(); idx-- > 1;) {
        int node = order[idx];
        if (node < block_count) {
            int b = node;
            const Block& blk = bct.blocks()[b];
            int anchor = parent[b] - block_count;
            ChiAccumulator chi;
            int child_cuts = fold_children(b, anchor, chi);
            BlockRow row{blk.kind, static_cast<int>(blk.vertices.size()), child_cuts, 0, ""};
            EvcSummary summary;
            switch (blk.kind) {
                case BlockKind::Edge: {
                    int w = blk.vertices[0] == anchor ? blk.vertices[1] : blk.vertices[0];
                    bool w_is_child = bct.is_cut(w);
                    summary = pendant_lift(w_is_child ? cut_summary[w] : k1_summary(w), anchor);
                    row.branch = w_is_child ? "edge.lift" : "edge.leaf";
                    break;
                }
                case BlockKind::Cycle: {
                    long long n_b = static_cast<long long>(blk.vertices.size());
                    long long base = cycle_block_evc(n_b, child_cuts, chi);
                    auto [ev, t] = cycle_vertex_type(n_b, child_cuts, chi, base);
                    summary = {base, ev, t, anchor};
                    row.branch = chi.has_type1 ? "cycle.type1" : "cycle.no_type1";
                    break;
                }
                default: {
                    Graph sub = g.induced(blk.vertices);
                    std::vector<int> cuts_global;
                    for (int v : blk.vertices)
                        if (bct.is_cut(v) && v != anchor) cuts_global.push_back(v);
                    std::vector<int> cuts_local = local_ids(blk, cuts_global);
                    long long base = chordal_block_evc(sub, cuts_local, chi);
                    int anchor_local = local_ids(blk, {anchor})[0];
                    auto [ev, t] = chordal_vertex_type(sub, cuts_local, chi, anchor_local);
                    summary = {base, ev, t, anchor};
                    row.branch = chi.has_type1 ? "chordal.type1" : "chordal.no_type1";
                    break;
                }
            }
            row.chi = chi.value();
            block_summary[b] = summary;
            result.blocks.push_back(std::move(row));
        } else {
            int v = node - block_count;
            parts_buffer.clear();
            for (int b : bct.blocks_of(v))
                if (parent[b] == node) parts_buffer.push_back(block_summary[b]);
            for (auto& p : parts_buffer) p.anchor = v;
            cut_summary[v] =
                parts_buffer.size() == 1 ? parts_buffer[0] : combine_at_cut_vertex(parts_buffer);
        }
    }

    // Root node.
    if (root_node >= block_count) {
        int v = root_node - block_count;
        parts_buffer.clear();
        for (int b : bct.blocks_of(v)) parts_buffer.push_back(block_summary[b]);
        for (auto& p : parts_buffer) p.anchor = v;
        EvcSummary total = combine_at_cut_vertex(parts_buffer);
        result.evc = total.evc;
        result.evc_v = total.evc_anchor;
        result.vtype = total.vtype;
    } else {
        int b = root_node;
        const Block& blk = bct.blocks()[b];
        ChiAccumulator chi;
        int child_cuts = fold_children(b, -1, chi);
        BlockRow row{blk.kind, static_cast<int>(blk.vertices.size()), child_cuts, 0, ""};
        switch (blk.kind) {
            case BlockKind::Edge: {
                int p = blk.vertices[0], q = blk.vertices[1];
                if (query) {
                    int v = *query;
                    int w = (p == v) ? q : p;
                    EvcSummary s =
                        pendant_lift(bct.is_cut(w) ? cut_summary[w] : k1_summary(w), v);
                    result.evc = s.evc;
                    result.evc_v = s.evc_anchor;
                    result.vtype = s.vtype;
                    row.branch = bct.is_cut(w) ? "edge.lift" : "edge.leaf";
                } else if (bct.is_cut(p) && bct.is_cut(q)) {
                    EvcSummary through = pendant_lift(cut_summary[q], p);
                    EvcSummary side = cut_summary[p];
                    side.anchor = p;
                    std::vector<EvcSummary> parts{side, through};
                    result.evc = combine_at_cut_vertex(parts).evc;
                    row.branch = "edge.bridge";
                } else if (bct.is_cut(p) || bct.is_cut(q)) {
                    int c = bct.is_cut(p) ? p : q;
                    int other = bct.is_cut(p) ? q : p;
                    result.evc = pendant_lift(cut_summary[c], other).evc;
                    row.branch = "edge.lift";
                } else {
                    result.evc = 1; // K2
                    row.branch = "edge.leaf";
                }
                break;
            }
            case BlockKind::Cycle: {
                long long n_b = static_cast<long long>(blk.vertices.size());
                result.evc = cycle_block_evc(n_b, child_cuts, chi);
                if (query) {
                    auto [ev, t] = cycle_vertex_type(n_b, child_cuts, chi, result.evc);
                    result.evc_v = ev;
                    result.vtype = t;
                }
                row.branch = chi.has_type1 ? "cycle.type1" : "cycle.no_type1";
                break;
            }
            default: {
                Graph sub = g.induced(blk.vertices);
                std::vector<int> cuts_global;
                for (int v : blk.vertices)
                    if (bct.is_cut(v)) cuts_global.push_back(v);
                std::vector<int> cuts_local = local_ids(blk, cuts_global);
                result.evc = chordal_block_evc(sub, cuts_local, chi);
                if (query) {
                    int q_local = local_ids(blk, {*query})[0];
                    auto [ev, t] = chordal_vertex_type(sub, cuts_local, chi, q_local);
                    result.evc_v = ev;
                    result.vtype = t;
                }
                row.branch = chi.has_type1 ? "chordal.type1" : "chordal.no_type1";
                break;
            }
        }
        row.chi = chi.value();
        result.blocks.push_back(std::move(row));
    }

    result.solve_seconds =
        std::chrono::duration<double>(clock::now() - t_start).count();
    return result;
}

} // namespace detail

namespace detail {

// Relabel vertices by DFS discovery order from vertex 0. Later passes then
// touch disc/low/adjacency/summary arrays near-sequentially, which keeps the
// million-vertex case from being dominated by cache misses. Returns the
// new-id -> old-id map; throws on disconnected input.
inline std::pair<Graph, std::vector<int>> relabel_by_discovery(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> new_id(n, -1), old_id;
    old_id.reserve(n);
    std::vector<std::pair<int, int>> stack; // (vertex, adjacency position)
    new_id[0] = 0;
    old_id.push_back(0);
    stack.emplace_back(0, 0);
    while (!stack.empty()) {
        auto& [v, pos] = stack.back();
        auto nb = g.neighbors(v);
        if (pos == static_cast<int>(nb.size())) {
            stack.pop_back();
            continue;
        }
        int w = nb[pos++];
        if (new_id[w] == -1) {
            new_id[w] = static_cast<int>(old_id.size());
            old_id.push_back(w);
            stack.emplace_back(w, 0);
        }
    }
    if (static_cast<int>(old_id.size()) < n) throw DisconnectedError(g.component_count());
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) edges.emplace_back(new_id[u], new_id[v]);
    return {Graph(n, std::move(edges)), std::move(old_id)};
}

} // namespace detail

// Full run: decomposition plus the leaf-to-root fold. `root_block` only
// matters without a query vertex (the result must not depend on it).
inline EvcResult compute_evc_report(const Graph& g, std::optional<int> query = {},
                                    std::optional<int> root_block = {}) {
    if (query && (*query < 0 || *query >= g.vertex_count()))
        throw std::invalid_argument("query vertex out of range");
    if (g.vertex_count() == 0) throw UnsupportedGraphError("empty graph");
    if (g.vertex_count() == 1) {
        EvcResult res;
        res.evc = 0;
        res.query_vertex = query;
        if (query) {
            res.evc_v = 1;
            res.vtype = VertexType::Type1;
        }
        return res;
    }
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    auto [local, old_id] = detail::relabel_by_discovery(g);
    std::vector<int> new_id(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) new_id[old_id[i]] = i;
    BlockCutTree bct = biconnected_components(local);
    double decompose = std::chrono::duration<double>(clock::now() - t0).count();
    if (root_block && (*root_block < 0 || *root_block >= bct.block_count()))
        throw std::invalid_argument("root block out of range");
    std::optional<int> local_query;
    if (query) local_query = new_id[*query];
    EvcResult res = detail::run_engine(local, bct, local_query, root_block.value_or(0));
    res.query_vertex = query;
    res.decompose_seconds = decompose;
    return res;
}

inline EvcResult compute_evc(const Graph& g) { return compute_evc_report(g); }

// (evc(G), evc_v(G), type of G with respect to v), recursion rooted at v.
inline EvcSummary compute_evc_at(const Graph& g, int v) {
    EvcResult res = compute_evc_report(g, v);
    return {res.evc, *res.evc_v, *res.vtype, v};
}

} // namespace evc

#endif // EVC_ENGINE_HPP
