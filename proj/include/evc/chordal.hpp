#ifndef EVC_CHORDAL_HPP
#define EVC_CHORDAL_HPP

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "evc/graph.hpp"

namespace evc {

struct NotChordalError : std::runtime_error {
    explicit NotChordalError(const std::string& what) : std::runtime_error(what) {}
};

struct NotBiconnectedError : std::runtime_error {
    explicit NotBiconnectedError(const std::string& what) : std::runtime_error(what) {}
};

// Elimination order over the vertices of a graph. Valid (perfect) iff for
// every vertex the neighbors occurring later in the order form a clique.
struct EliminationOrder {
    std::vector<int> order;    // order[i] = vertex at elimination position i
    std::vector<int> position; // inverse permutation
};

// Maximum-cardinality search followed by an explicit perfect-elimination
// check. Ties in MCS are broken toward the lowest vertex id, so the order is
// deterministic. Works on disconnected inputs.
inline std::pair<EliminationOrder, bool> mcs_peo(const Graph& g) {
    int n = g.vertex_count();
    EliminationOrder eo;
    eo.order.resize(n);
    eo.position.assign(n, -1);
    if (n == 0) return {eo, true};

    std::vector<int> weight(n, 0);
    std::vector<char> done(n, 0);
    std::vector<std::set<int>> buckets(n + 1);
    for (int v = 0; v < n; ++v) buckets[0].insert(v);
    int max_weight = 0;

    std::vector<int> visit(n);
    for (int step = 0; step < n; ++step) {
        while (buckets[max_weight].empty()) --max_weight;
        int v = *buckets[max_weight].begin();
        buckets[max_weight].erase(buckets[max_weight].begin());
        done[v] = 1;
        visit[step] = v;
        for (int u : g.neighbors(v)) {
            if (done[u]) continue;
            buckets[weight[u]].erase(u);
            ++weight[u];
            buckets[weight[u]].insert(u);
            max_weight = std::max(max_weight, weight[u]);
        }
    }

    // Reverse visit order is the candidate perfect elimination order.
    for (int i = 0; i < n; ++i) {
        eo.order[i] = visit[n - 1 - i];
        eo.position[eo.order[i]] = i;
    }

    // Tarjan-Yannakakis zero-fill-in check: the later neighbors of v, minus
    // the earliest of them p, must all be adjacent to p.
    std::vector<std::vector<int>> pending(n);
    std::vector<int> mark(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = eo.order[i];
        if (!pending[v].empty()) {
            for (int u : g.neighbors(v)) mark[u] = i;
            for (int w : pending[v])
                if (mark[w] != i) return {eo, false};
        }
        int p = -1, best = n + 1;
        for (int u : g.neighbors(v))
            if (eo.position[u] > i && eo.position[u] < best) {
                best = eo.position[u];
                p = u;
            }
        if (p < 0) continue;
        for (int u : g.neighbors(v))
            if (eo.position[u] > i && u != p) pending[p].push_back(u);
    }
    return {eo, true};
}

inline bool is_chordal(const Graph& g) { return mcs_peo(g).second; }

// Minimum vertex cover of a chordal graph: complement of the maximum
// independent set picked greedily along a perfect elimination order.
inline int mvc_chordal(const Graph& g) {
    auto [eo, chordal] = mcs_peo(g);
    if (!chordal) throw NotChordalError("mvc_chordal: input is not chordal");
    int n = g.vertex_count();
    std::vector<char> blocked(n, 0);
    int independent = 0;
    for (int v : eo.order) {
        if (blocked[v]) continue;
        ++independent;
        for (int u : g.neighbors(v)) blocked[u] = 1;
    }
    return n - independent;
}

// mvc_S(g): minimum vertex cover containing all of `forced`. Equals
// |S| + mvc(g - S); deleting vertices keeps the graph chordal.
inline int mvc_forced(const Graph& g, const std::vector<int>& forced) {
    if (!is_chordal(g)) throw NotChordalError("mvc_forced: input is not chordal");
    int n = g.vertex_count();
    std::vector<char> in_forced(n, 0);
    int forced_count = 0;
    for (int v : forced) {
        if (v < 0 || v >= n) throw std::invalid_argument("mvc_forced: vertex out of range");
        if (!in_forced[v]) {
            in_forced[v] = 1;
            ++forced_count;
        }
    }
    std::vector<int> rest;
    rest.reserve(n - forced_count);
    for (int v = 0; v < n; ++v)
        if (!in_forced[v]) rest.push_back(v);
    return forced_count + mvc_chordal(g.induced(rest));
}

namespace detail {

inline bool is_biconnected_slow(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 2) return g.is_connected();
    if (!g.is_connected()) return false;
    std::vector<int> others;
    others.reserve(n - 1);
    for (int v = 0; v < n; ++v) {
        others.clear();
        for (int u = 0; u < n; ++u)
            if (u != v) others.push_back(u);
        if (!g.induced(others).is_connected()) return false;
    }
    return true;
}

} // namespace detail

// evc_S(B) for a biconnected chordal block B: mvc_S(B) when forcing any
// further vertex never raises the cover size, mvc_S(B) + 1 otherwise.
inline int evc_forced(const Graph& block, const std::vector<int>& forced) {
    if (!detail::is_biconnected_slow(block))
        throw NotBiconnectedError("evc_forced: block is not biconnected");
    int base = mvc_forced(block, forced);
    std::vector<char> in_forced(block.vertex_count(), 0);
    for (int v : forced) in_forced[v] = 1;
    std::vector<int> with_v(forced.begin(), forced.end());
    for (int v = 0; v < block.vertex_count(); ++v) {
        if (in_forced[v]) continue;
        with_v.push_back(v);
        int raised = mvc_forced(block, with_v);
        with_v.pop_back();
        if (raised != base) return base + 1;
    }
    return base;
}

} // namespace evc

#endif // EVC_CHORDAL_HPP
