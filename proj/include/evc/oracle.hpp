#ifndef EVC_ORACLE_HPP
#define EVC_ORACLE_HPP

#include <bit>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "evc/graph.hpp"
#include "evc/types.hpp"

// Exact solver for the guard game, independent of the block-formula engine.
// A configuration is a set of occupied vertices (one guard per vertex). An
// attack on an edge is defended by moving every guard to a vertex of its
// closed neighborhood, injectively, with at least one guard crossing the
// attacked edge. evc(G) is the least guard count for which a nonempty family
// of configurations is closed under defending every possible attack; that
// family is found as a greatest fixed point by deleting indefensible
// configurations from the set of all vertex covers of the right size.

namespace evc {

struct OracleCapError : std::runtime_error {
    explicit OracleCapError(const std::string& what) : std::runtime_error(what) {}
};

struct OracleLimits {
    int max_vertices = 10;
    int max_guards = 8;
};

// Occupied-vertex set, at most one guard per vertex.
struct GuardConfig {
    uint32_t mask = 0;

    GuardConfig() = default;
    explicit GuardConfig(uint32_t m) : mask(m) {}

    static GuardConfig from_vertices(const std::vector<int>& vs) {
        GuardConfig c;
        for (int v : vs) {
            if (v < 0 || v >= 31) throw std::invalid_argument("guard vertex out of range");
            c.mask |= 1u << v;
        }
        return c;
    }

    int size() const { return std::popcount(mask); }
    bool occupies(int v) const { return (mask >> v) & 1u; }

    std::vector<int> vertices() const {
        std::vector<int> out;
        for (uint32_t m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    bool operator==(const GuardConfig&) const = default;
};

// Fixed point of the deletion process at a given guard budget: every member
// can answer every edge attack with a successor that is again a member.
struct SafeSet {
    int guard_count = 0;
    std::vector<uint32_t> configs; // sorted masks

    bool empty() const { return configs.empty(); }
    size_t size() const { return configs.size(); }
    bool contains(uint32_t mask) const {
        return std::binary_search(configs.begin(), configs.end(), mask);
    }
};

namespace detail {

struct TransitionContext {
    int n;
    std::vector<uint32_t> closed_nbr;

    explicit TransitionContext(const Graph& g) : n(g.vertex_count()), closed_nbr(n, 0) {
        for (int v = 0; v < n; ++v) {
            uint32_t m = 1u << v;
            for (int w : g.neighbors(v)) m |= 1u << w;
            closed_nbr[v] = m;
        }
    }

    // Is there an injective move of the guards of `from` onto `to` in which
    // the guard on s ends on t and every other guard stays within its closed
    // neighborhood? (s must be in `from`, t in `to`.)
    bool oriented_move(uint32_t from, uint32_t to, int s, int t) const {
        if (!((from >> s) & 1u) || !((to >> t) & 1u)) return false;
        uint32_t rest_from = from & ~(1u << s);
        uint32_t rest_to = to & ~(1u << t);

        int slots[32];
        int n_slots = 0;
        for (uint32_t m = rest_to; m != 0; m &= m - 1) slots[n_slots++] = std::countr_zero(m);

        uint32_t rows[32];
        int n_rows = 0;
        for (uint32_t m = rest_from; m != 0; m &= m - 1) {
            int u = std::countr_zero(m);
            uint32_t row = 0;
            for (int j = 0; j < n_slots; ++j)
                if ((closed_nbr[u] >> slots[j]) & 1u) row |= 1u << j;
            rows[n_rows++] = row;
        }
        if (n_rows != n_slots) return false;

        // Kuhn's augmenting paths on a <=k x <=k bipartite graph.
        int slot_owner[32];
        for (int j = 0; j < n_slots; ++j) slot_owner[j] = -1;
        for (int i = 0; i < n_rows; ++i) {
            uint32_t visited = 0;
            if (!augment(i, rows, slot_owner, visited)) return false;
        }
        return true;
    }

private:
    static bool augment(int i, const uint32_t* rows, int* slot_owner, uint32_t& visited) {
        for (uint32_t cand = rows[i] & ~visited; cand != 0; cand &= cand - 1) {
            int j = std::countr_zero(cand);
            visited |= 1u << j;
            if (slot_owner[j] < 0 || augment(slot_owner[j], rows, slot_owner, visited)) {
                slot_owner[j] = i;
                return true;
            }
        }
        return false;
    }
};

} // namespace detail

// One round of the game: can the guards of `from` reconfigure into `to`
// while defending an attack on `attacked`? Both crossing directions are
// tried. Throws if `attacked` is not an edge of g.
inline bool can_transition(const Graph& g, GuardConfig from, GuardConfig to,
                           std::pair<int, int> attacked) {
    auto [a, b] = attacked;
    if (!g.has_edge(a, b)) throw std::invalid_argument("attacked pair is not an edge");
    uint32_t off_graph = ~((g.vertex_count() >= 31) ? ~0u : ((1u << g.vertex_count()) - 1));
    if ((from.mask | to.mask) & off_graph)
        throw std::invalid_argument("guard outside the vertex range");
    if (from.size() != to.size()) return false;
    detail::TransitionContext ctx(g);
    return ctx.oriented_move(from.mask, to.mask, a, b) ||
           ctx.oriented_move(from.mask, to.mask, b, a);
}

// Greatest fixed point at guard budget k: start from all size-k vertex
// covers containing `required`, repeatedly delete configurations that have
// some attack with no surviving successor. Each (config, edge) pair keeps a
// witness successor and is re-examined only when that witness dies.
inline SafeSet safe_fixpoint(const Graph& g, int k, GuardConfig required = {}) {
    int n = g.vertex_count();
    if (n > 20) throw OracleCapError("safe_fixpoint: graph too large for exhaustive search");
    SafeSet result;
    result.guard_count = k;
    if (k < 0 || k > n) return result;

    int m = g.edge_count();
    std::vector<uint32_t> edge_mask(m);
    for (int e = 0; e < m; ++e)
        edge_mask[e] = (1u << g.edges()[e].first) | (1u << g.edges()[e].second);

    // Enroll vertex covers of size k containing the required set.
    std::vector<uint32_t> configs;
    uint32_t full = (1u << n) - 1;
    if (required.mask & ~full) return result; // required vertex off the graph
    for (uint32_t mask = required.mask;;) {
        if (std::popcount(mask) == k && (mask & required.mask) == required.mask) {
            bool cover = true;
            for (int e = 0; e < m && cover; ++e) cover = (mask & edge_mask[e]) != 0;
            if (cover) configs.push_back(mask);
        }
        if (mask == full) break;
        ++mask;
    }
    if (configs.empty()) return result;

    std::vector<int32_t> index_of(size_t(1) << n, -1);
    for (size_t i = 0; i < configs.size(); ++i) index_of[configs[i]] = static_cast<int32_t>(i);

    detail::TransitionContext ctx(g);
    size_t cfg_count = configs.size();
    std::vector<char> alive(cfg_count, 1);
    std::vector<int32_t> witness(cfg_count * std::max(m, 1), -1);
    std::vector<std::vector<uint32_t>> watchers(cfg_count);
    std::deque<int32_t> dead;

    auto find_witness = [&](size_t ci, int ei) -> int32_t {
        uint32_t cm = configs[ci];
        auto [a, b] = g.edges()[ei];
        bool has_a = (cm >> a) & 1u, has_b = (cm >> b) & 1u;
        if (has_a && has_b) return static_cast<int32_t>(ci); // swap across the edge, rest stay
        int s = has_a ? a : b;
        int t = has_a ? b : a;
        uint32_t dm = (cm & ~(1u << s)) | (1u << t); // guard s crosses, rest stay
        int32_t di = index_of[dm];
        if (di >= 0 && alive[di]) return di;
        for (size_t dj = 0; dj < cfg_count; ++dj) {
            if (!alive[dj]) continue;
            if (ctx.oriented_move(cm, configs[dj], a, b) ||
                ctx.oriented_move(cm, configs[dj], b, a))
                return static_cast<int32_t>(dj);
        }
        return -1;
    };

    auto assign = [&](size_t ci, int ei) {
        int32_t w = find_witness(ci, ei);
        if (w < 0) {
            alive[ci] = 0;
            dead.push_back(static_cast<int32_t>(ci));
            return false;
        }
        witness[ci * m + ei] = w;
        watchers[w].push_back(static_cast<uint32_t>(ci * m + ei));
        return true;
    };

    for (size_t ci = 0; ci < cfg_count && m > 0; ++ci)
        for (int ei = 0; ei < m; ++ei) {
            if (!alive[ci]) break;
            assign(ci, ei);
        }

    while (!dead.empty()) {
        int32_t d = dead.front();
        dead.pop_front();
        for (uint32_t packed : watchers[d]) {
            size_t ci = packed / m;
            int ei = static_cast<int>(packed % m);
            if (!alive[ci] || witness[ci * m + ei] != d) continue;
            assign(ci, ei);
        }
        watchers[d].clear();
    }

    for (size_t ci = 0; ci < cfg_count; ++ci)
        if (alive[ci]) result.configs.push_back(configs[ci]);
    return result;
}

// Exhaustive minimum vertex cover; the search seed for the game solver and
// the reference value for mvc-based bounds in tests.
inline int mvc_bruteforce(const Graph& g) {
    int n = g.vertex_count();
    if (n > 25) throw OracleCapError("mvc_bruteforce: graph too large");
    int m = g.edge_count();
    if (m == 0) return 0;
    std::vector<uint32_t> edge_mask(m);
    for (int e = 0; e < m; ++e)
        edge_mask[e] = (1u << g.edges()[e].first) | (1u << g.edges()[e].second);
    int best = n;
    uint32_t full = (1u << n) - 1;
    for (uint32_t mask = 0;; ++mask) {
        if (std::popcount(mask) < best) {
            bool cover = true;
            for (int e = 0; e < m && cover; ++e) cover = (mask & edge_mask[e]) != 0;
            if (cover) best = std::popcount(mask);
        }
        if (mask == full) break;
    }
    return best;
}

// Minimum vertex cover containing every vertex of `forced`, by exhaustive
// search on each component left after deleting the forced set.
inline int mvc_forced_bruteforce(const Graph& g, const std::vector<int>& forced) {
    int n = g.vertex_count();
    std::vector<char> in_forced(n, 0);
    int forced_count = 0;
    for (int v : forced) {
        if (v < 0 || v >= n) throw std::invalid_argument("forced vertex out of range");
        if (!in_forced[v]) {
            in_forced[v] = 1;
            ++forced_count;
        }
    }
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!in_forced[v]) rest.push_back(v);
    Graph sub = g.induced(rest);

    std::vector<char> seen(sub.vertex_count(), 0);
    int total = forced_count;
    for (int s = 0; s < sub.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : sub.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        total += mvc_bruteforce(sub.induced(comp));
    }
    return total;
}

// Least k with a nonempty safe set: evc(G).
inline int oracle_evc(const Graph& g, OracleLimits limits = {}) {
    int n = g.vertex_count();
    if (n > limits.max_vertices)
        throw OracleCapError("oracle size cap exceeded: " + std::to_string(n) + " vertices (cap " +
                             std::to_string(limits.max_vertices) + ")");
    if (g.edge_count() == 0) return 0;
    for (int k = mvc_bruteforce(g); k <= n; ++k) {
        if (k > limits.max_guards)
            throw OracleCapError("oracle guard cap exceeded: needs > " +
                                 std::to_string(limits.max_guards) + " guards");
        if (!safe_fixpoint(g, k).empty()) return k;
    }
    return n; // unreachable: the all-vertices configuration is always safe
}

// evc_S(G): least k defendable with every vertex of `required` occupied in
// every configuration.
inline int oracle_evc_required(const Graph& g, const std::vector<int>& required,
                               OracleLimits limits = {}) {
    int n = g.vertex_count();
    if (n > limits.max_vertices)
        throw OracleCapError("oracle size cap exceeded: " + std::to_string(n) + " vertices (cap " +
                             std::to_string(limits.max_vertices) + ")");
    for (int v : required)
        if (v < 0 || v >= n) throw std::invalid_argument("required vertex out of range");
    GuardConfig req = GuardConfig::from_vertices(required);
    if (g.edge_count() == 0) return req.size();
    int lb = std::max(req.size(), mvc_forced_bruteforce(g, required));
    for (int k = lb; k <= n; ++k) {
        if (k > limits.max_guards)
            throw OracleCapError("oracle guard cap exceeded: needs > " +
                                 std::to_string(limits.max_guards) + " guards");
        if (!safe_fixpoint(g, k, req).empty()) return k;
    }
    return n;
}

// Type of G with respect to v: Type1 iff evc(G_v^+) = evc_v(G).
// Builds G_v^+ explicitly, so the vertex cap must cover n+1.
inline VertexType oracle_type(const Graph& g, int v, OracleLimits limits = {}) {
    int evc_v = oracle_evc_required(g, {v}, limits);
    int evc_plus = oracle_evc(g.with_pendant(v), limits);
    return evc_plus == evc_v ? VertexType::Type1 : VertexType::Type2;
}

} // namespace evc

#endif // EVC_ORACLE_HPP
