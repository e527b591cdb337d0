#include <catch2/catch_amalgamated.hpp>

#include "evc/chordal.hpp"
#include "evc/generators.hpp"
#include "evc/oracle.hpp"

using namespace evc;

namespace {

Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

// Random chordal instance: a 2-tree with a random subset of vertices
// deleted (induced subgraphs of chordal graphs stay chordal), possibly
// disconnected.
Graph random_chordal(int n, SplitMix64& rng) {
    int base = std::max(n + static_cast<int>(rng.below(4)), 3);
    Graph two_tree(base, detail::random_two_tree(base, rng));
    std::vector<int> keep;
    for (int v = 0; v < two_tree.vertex_count() && static_cast<int>(keep.size()) < n; ++v)
        if (rng.below(4) != 0) keep.push_back(v);
    if (keep.empty()) keep.push_back(0);
    return two_tree.induced(keep);
}

} // namespace

TEST_CASE("mcs_peo decides chordality") {
    CHECK(mcs_peo(k4()).second);
    CHECK_FALSE(mcs_peo(bare_cycle(4)).second);
    CHECK_FALSE(mcs_peo(bare_cycle(5)).second);
    // 5-cycle with chords {0,2},{0,3}: a fan, chordal
    Graph fan(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {0, 3}});
    CHECK(mcs_peo(fan).second);
    CHECK(is_chordal(path(6)));
    CHECK(is_chordal(Graph(1, {})));
}

TEST_CASE("a reported order is perfect elimination when chordal") {
    SplitMix64 rng(5);
    for (int i = 0; i < 25; ++i) {
        Graph g = random_chordal(3 + static_cast<int>(rng.below(9)), rng);
        auto [eo, chordal] = mcs_peo(g);
        REQUIRE(chordal);
        // later neighbors of each vertex form a clique
        for (int i1 = 0; i1 < g.vertex_count(); ++i1) {
            int v = eo.order[i1];
            std::vector<int> later;
            for (int u : g.neighbors(v))
                if (eo.position[u] > i1) later.push_back(u);
            for (size_t a = 0; a < later.size(); ++a)
                for (size_t b = a + 1; b < later.size(); ++b)
                    CHECK(g.has_edge(later[a], later[b]));
        }
    }
}

TEST_CASE("mvc_chordal on the fixed examples") {
    CHECK(mvc_chordal(k4()) == 3);
    CHECK(mvc_chordal(path(4)) == 2);
    Graph two_triangles(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(mvc_chordal(two_triangles) == 4);
    CHECK_THROWS_AS(mvc_chordal(bare_cycle(4)), NotChordalError);
}

TEST_CASE("mvc_chordal matches exhaustive search") {
    SplitMix64 rng(77);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_chordal(2 + static_cast<int>(rng.below(9)), rng);
        CHECK(mvc_chordal(g) == mvc_bruteforce(g));
    }
}

TEST_CASE("mvc_forced on the fixed examples") {
    Graph k3 = bare_cycle(3);
    CHECK(mvc_forced(k3, {0}) == 2);
    CHECK(mvc_forced(k3, {}) == 2);
    CHECK(mvc_forced(path(3), {0}) == 2); // forcing a leaf of P3
    CHECK(mvc_forced(path(3), {0}) == mvc_forced_bruteforce(path(3), {0}));
    CHECK_THROWS_AS(mvc_forced(bare_cycle(5), {0}), NotChordalError);
}

TEST_CASE("mvc_forced matches exhaustive search and is monotone") {
    SplitMix64 rng(123);
    for (int i = 0; i < 50; ++i) {
        Graph g = random_chordal(2 + static_cast<int>(rng.below(8)), rng);
        std::vector<int> forced;
        int prev = mvc_forced(g, forced);
        CHECK(prev == mvc_forced_bruteforce(g, forced));
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (rng.below(2) == 0) continue;
            forced.push_back(v);
            int cur = mvc_forced(g, forced);
            CHECK(cur == mvc_forced_bruteforce(g, forced));
            CHECK(cur >= prev);      // monotone in the forced set
            CHECK(cur <= prev + 1);  // one vertex adds at most one
            prev = cur;
        }
    }
}

TEST_CASE("evc_forced on the fixed examples") {
    CHECK(evc_forced(bare_cycle(3), {}) == 2);
    CHECK(evc_forced(k4(), {0}) == 3);
    CHECK(evc_forced(k4(), {}) == 3);
    // diamond: mvc 2, forcing a degree-2 vertex raises it
    CHECK(evc_forced(diamond(), {}) == 3);
    CHECK(evc_forced(diamond(), {}) == oracle_evc(diamond()));
    CHECK_THROWS_AS(evc_forced(path(4), {}), NotBiconnectedError);
    CHECK_THROWS_AS(evc_forced(bare_cycle(4), {}), NotChordalError);
}

TEST_CASE("evc_forced with no forced set equals the game value") {
    SplitMix64 rng(31);
    int tested = 0;
    for (int i = 0; i < 60 && tested < 25; ++i) {
        int n = 3 + static_cast<int>(rng.below(6));
        Graph g(n, detail::random_two_tree(n, rng)); // 2-trees are biconnected chordal
        CHECK(evc_forced(g, {}) == oracle_evc(g));
        ++tested;
    }
}
