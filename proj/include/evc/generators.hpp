#ifndef EVC_GENERATORS_HPP
#define EVC_GENERATORS_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "evc/chordal.hpp"
#include "evc/graph.hpp"

namespace evc {

// splitmix64 (Vigna's public-domain mixer). Fixed algorithm, 64-bit state:
// the same seed yields the same stream on every platform, so generated
// instances are reproducible across implementations.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform-ish value in [0, bound); plain modulo, documented and portable.
    uint64_t below(uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    // 53-bit uniform draw in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0); }

private:
    uint64_t state_;
};

struct GenSpec {
    enum class Kind { RandomTree, RandomCactus, AlternatingPendantCycle, RandomChordalBlockGraph, BareCycle };
    Kind kind = Kind::RandomCactus;
    int n = 10; // vertex count; the parameter k for AlternatingPendantCycle
    double cycle_fraction = 0.3;
    uint64_t seed = 0;
};

inline Graph bare_cycle(int n) {
    if (n < 3) throw std::invalid_argument("bare_cycle: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

// Even cycle on 2k vertices (ids 0..2k-1 in cyclic order) with a pendant
// vertex 2k+i attached to cycle vertex 2i for each i < k.
inline Graph alternating_pendant_cycle(int k) {
    if (k < 2) throw std::invalid_argument("alternating_pendant_cycle: need k >= 2");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(3 * k);
    for (int i = 0; i < 2 * k; ++i) edges.emplace_back(i, (i + 1) % (2 * k));
    for (int i = 0; i < k; ++i) edges.emplace_back(2 * i, 2 * k + i);
    return Graph(3 * k, std::move(edges));
}

// Connected cactus grown by attaching, at a uniformly chosen existing
// vertex, either a pendant edge or a cycle of length 3..8 (clipped near the
// vertex budget). cycle_fraction = 0 grows a tree.
inline Graph random_cactus(int n, double cycle_fraction, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_cactus: need n >= 1");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    int built = 1;
    while (built < n) {
        int at = static_cast<int>(rng.below(built));
        int remaining = n - built;
        if (remaining >= 2 && rng.unit() < cycle_fraction) {
            int len = 3 + static_cast<int>(rng.below(6));
            if (len > remaining + 1) len = remaining + 1;
            int first = built;
            for (int i = 0; i + 1 < len - 1; ++i) edges.emplace_back(first + i, first + i + 1);
            edges.emplace_back(at, first);
            edges.emplace_back(at, first + len - 2);
            built += len - 1;
        } else {
            edges.emplace_back(at, built);
            ++built;
        }
    }
    return Graph(n, std::move(edges));
}

inline Graph random_tree(int n, uint64_t seed) { return random_cactus(n, 0.0, seed); }

namespace detail {

// Random 2-tree on `size` local vertices: triangle plus repeated
// edge-subdivision-free vertex additions onto existing edges.
inline std::vector<std::pair<int, int>> random_two_tree(int size, SplitMix64& rng) {
    std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}};
    for (int v = 3; v < size; ++v) {
        auto [a, b] = edges[rng.below(edges.size())];
        edges.emplace_back(a, v);
        edges.emplace_back(b, v);
    }
    return edges;
}

} // namespace detail

// As random_cactus, but the attachment menu also offers small biconnected
// chordal blocks (K4, diamond, random 2-trees on 4..6 vertices), each
// verified chordal when generated.
inline Graph random_chordal_block_graph(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_chordal_block_graph: need n >= 1");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    int built = 1;

    auto glue_template = [&](int at, const std::vector<std::pair<int, int>>& tmpl, int size) {
        // template vertex 0 maps to `at`, the rest to fresh ids
        Graph check(size, std::vector<std::pair<int, int>>(tmpl));
        if (!is_chordal(check))
            throw std::logic_error("random_chordal_block_graph: non-chordal template");
        auto map = [&](int v) { return v == 0 ? at : built + v - 1; };
        for (auto [a, b] : tmpl) edges.emplace_back(map(a), map(b));
        built += size - 1;
    };

    while (built < n) {
        int at = static_cast<int>(rng.below(built));
        int remaining = n - built;
        uint64_t pick = rng.below(10);
        if (remaining == 1 || pick < 3) {
            edges.emplace_back(at, built);
            ++built;
        } else if (pick < 6 || remaining < 3) {
            int len = 3 + static_cast<int>(rng.below(6));
            if (len > remaining + 1) len = remaining + 1;
            int first = built;
            for (int i = 0; i + 1 < len - 1; ++i) edges.emplace_back(first + i, first + i + 1);
            edges.emplace_back(at, first);
            edges.emplace_back(at, first + len - 2);
            built += len - 1;
        } else if (pick < 7 && remaining >= 3) {
            glue_template(at, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, 4); // K4
        } else if (pick < 8 && remaining >= 3) {
            glue_template(at, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}, 4); // diamond
        } else {
            int size = 4 + static_cast<int>(rng.below(3));
            if (size > remaining + 1) size = remaining + 1;
            if (size < 3) size = 3;
            glue_template(at, detail::random_two_tree(size, rng), size);
        }
    }
    return Graph(n, std::move(edges));
}

inline Graph generate(const GenSpec& spec) {
    switch (spec.kind) {
        case GenSpec::Kind::RandomTree: return random_tree(spec.n, spec.seed);
        case GenSpec::Kind::RandomCactus:
            return random_cactus(spec.n, spec.cycle_fraction, spec.seed);
        case GenSpec::Kind::AlternatingPendantCycle: return alternating_pendant_cycle(spec.n);
        case GenSpec::Kind::RandomChordalBlockGraph:
            return random_chordal_block_graph(spec.n, spec.seed);
        case GenSpec::Kind::BareCycle: return bare_cycle(spec.n);
    }
    throw std::invalid_argument("generate: unknown kind");
}

// Every connected cactus on at most n_max vertices, streamed as labeled
// graphs (isomorphic duplicates possible, exact omissions none).
//
// Exhaustive attachment sequences: each step glues a pendant edge (rank 0)
// or a cycle of length rank+2 at an existing vertex; sequences are
// enumerated with (vertex, rank) lexicographically non-decreasing, which
// reaches every cactus shape exactly once per canonical labeling and needs
// no dedup storage.
inline void enumerate_small_cacti(int n_max, const std::function<void(const Graph&)>& yield) {
    if (n_max < 1) throw std::invalid_argument("enumerate_small_cacti: need n_max >= 1");
    if (n_max > 9)
        throw std::invalid_argument("enumerate_small_cacti: capped at 9 vertices");

    std::vector<std::pair<int, int>> edges;
    int built = 1;
    int max_rank = n_max - 2; // rank r >= 1 is a cycle on r+2 vertices

    auto apply = [&](int v, int rank) {
        if (rank == 0) {
            edges.emplace_back(v, built);
            built += 1;
            return 1;
        }
        int len = rank + 2;
        int first = built;
        for (int i = 0; i + 1 < len - 1; ++i) edges.emplace_back(first + i, first + i + 1);
        edges.emplace_back(v, first);
        edges.emplace_back(v, first + len - 2);
        built += len - 1;
        return len;
    };
    auto undo = [&](int rank) {
        if (rank == 0) {
            edges.pop_back();
            built -= 1;
            return;
        }
        int len = rank + 2;
        for (int i = 0; i < len; ++i) edges.pop_back();
        built -= len - 1;
    };

    auto dfs = [&](auto&& self, int min_v, int min_rank) -> void {
        yield(Graph(built, edges));
        for (int v = min_v; v < built; ++v) {
            int r0 = (v == min_v) ? min_rank : 0;
            for (int r = r0; r <= max_rank; ++r) {
                int added = (r == 0) ? 1 : r + 1;
                if (built + added > n_max) {
                    if (r >= 1) break; // larger cycles only add more
                    continue;
                }
                apply(v, r);
                self(self, v, r);
                undo(r);
            }
        }
    };
    dfs(dfs, 0, 0);
}

inline std::vector<Graph> enumerate_small_cacti(int n_max) {
    std::vector<Graph> out;
    enumerate_small_cacti(n_max, [&](const Graph& g) { out.push_back(g); });
    return out;
}

} // namespace evc

#endif // EVC_GENERATORS_HPP
