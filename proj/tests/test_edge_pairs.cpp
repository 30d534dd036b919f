#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "hampreserve/edge_pairs.hpp"
#include "hampreserve/oracle.hpp"

using namespace hp;
using namespace hpt;

namespace {

bool valid_decomposition(const Graph& g, const PairDecomposition& d) {
    if (int(d.size()) * 2 != g.size()) return false;
    EdgeList used;
    for (const EdgePair& p : d) {
        if (!edges_independent(p.e1, p.e2)) return false;
        if (!g.has_edge(p.e1) || !g.has_edge(p.e2)) return false;
        used.push_back(p.e1);
        used.push_back(p.e2);
    }
    return edges_distinct(used);
}

Graph from_mask(int n, uint32_t mask) {
    Graph g(n);
    int id = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++id)
            if (mask >> id & 1) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("phi values") {
    CHECK(phi(cycle(4)) == 0);
    CHECK(phi(complete(4)) == 0);
    CHECK(phi(complete(5)) == 2);
    CHECK(phi(star(3)) == -3);
}

TEST_CASE("decomposability conditions") {
    CHECK(can_decompose(cycle(4)));
    Graph k3k2(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}});
    CHECK_FALSE(can_decompose(k3k2));  // 4 edges with a triangle
    CHECK_FALSE(can_decompose(star(3)));  // odd edge count
    CHECK_FALSE(can_decompose(star(4)));  // 4 < 2*Delta
}

TEST_CASE("C4 decomposes into its two matchings") {
    PairDecomposition d = decompose_into_pairs(cycle(4));
    REQUIRE(d.size() == 2);
    CHECK(valid_decomposition(cycle(4), d));
}

TEST_CASE("K4 decomposes into its three perfect matchings") {
    PairDecomposition d = decompose_into_pairs(complete(4));
    REQUIRE(d.size() == 3);
    CHECK(valid_decomposition(complete(4), d));
    // each pair of a 4-vertex graph's decomposition covers all 4 vertices
    for (const EdgePair& p : d)
        CHECK(p.e1.u + p.e1.v + p.e2.u + p.e2.v == 6);
}

TEST_CASE("triangle with a pendant at each vertex pairs corners with opposite sides") {
    // x1=0, x2=1, x3=2; pendants 3,4,5
    Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
    PairDecomposition d = decompose_into_pairs(g);
    REQUIRE(d.size() == 3);
    CHECK(valid_decomposition(g, d));
}

TEST_CASE("decomposition rejections name the violated condition") {
    try {
        decompose_into_pairs(star(3));
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("odd") != std::string::npos);
    }
    Graph k3k2(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}});
    CHECK_THROWS_AS(decompose_into_pairs(k3k2), DomainError);
}

TEST_CASE("decompose succeeds exactly when the conditions hold, order 6 exhaustive") {
    for (uint32_t mask = 0; mask < (1u << 15); ++mask) {
        Graph g = from_mask(6, mask);
        if (g.size() < 2 || g.size() > 8) continue;
        bool cond = can_decompose(g);
        bool built;
        try {
            built = valid_decomposition(g, decompose_into_pairs(g));
        } catch (const DomainError&) {
            built = false;
        }
        REQUIRE(built == cond);
    }
}

TEST_CASE("maximum pair counts on small graphs") {
    CHECK(max_edge_disjoint_pairs(star(4)).first == 0);   // |E| - Delta
    CHECK(max_edge_disjoint_pairs(path(5)).first == 2);   // floor(|E|/2)
    CHECK(max_edge_disjoint_pairs(cycle(5)).first == 2);
    Graph paw(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    CHECK(max_edge_disjoint_pairs(paw).first == 1);
}

TEST_CASE("exceptional families are rejected by name") {
    CHECK_THROWS_AS(max_edge_disjoint_pairs(complete(3)), ExceptionalInputError);
    Graph k3_iso(6, {{0, 1}, {0, 2}, {1, 2}});
    CHECK_THROWS_AS(max_edge_disjoint_pairs(k3_iso), ExceptionalInputError);
    Graph k3k2(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}});
    CHECK_THROWS_AS(max_edge_disjoint_pairs(k3k2), ExceptionalInputError);
    // triangle plus a path of two edges is not exceptional
    Graph near(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {4, 5}});
    CHECK_NOTHROW(max_edge_disjoint_pairs(near));
}

TEST_CASE("max pair witnesses are valid and match the brute-force oracle, order 5 exhaustive") {
    for (uint32_t mask = 0; mask < (1u << 10); ++mask) {
        Graph g = from_mask(5, mask);
        int count;
        std::vector<EdgePair> pairs;
        try {
            std::tie(count, pairs) = max_edge_disjoint_pairs(g);
        } catch (const ExceptionalInputError&) {
            continue;
        }
        REQUIRE(count == brute_max_pairs(g));
        REQUIRE(int(pairs.size()) == count);
        EdgeList used;
        for (const EdgePair& p : pairs) {
            REQUIRE(edges_independent(p.e1, p.e2));
            REQUIRE(g.has_edge(p.e1));
            REQUIRE(g.has_edge(p.e2));
            used.push_back(p.e1);
            used.push_back(p.e2);
        }
        REQUIRE(edges_distinct(used));
        int m = g.size(), dmax = g.max_degree();
        REQUIRE(count <= m / 2);
        if (m > 0) REQUIRE(count <= std::max(0, m - dmax));
    }
}

TEST_CASE("pair count formula on both regimes") {
    // dense regime: |E| >= 2*Delta
    CHECK(max_edge_disjoint_pairs(complete(5)).first == 5);
    CHECK(max_edge_disjoint_pairs(cycle(6)).first == 3);
    // sparse regime: |E| < 2*Delta
    CHECK(max_edge_disjoint_pairs(star(5)).first == 0);
    Graph broom(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}});
    CHECK(max_edge_disjoint_pairs(broom).first == 1);
}
