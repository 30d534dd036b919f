#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "hampreserve/hamilton.hpp"
#include "hampreserve/instances.hpp"

using namespace hp;
using namespace hpt;

TEST_CASE("closure of a Dirac graph at t = n is complete") {
    for (uint64_t seed : {1u, 2u, 3u}) {
        Graph g = gen_dirac(12, seed);
        ClosureTrace tr = closure(g, 12);
        CHECK(tr.closure.is_complete());
    }
}

TEST_CASE("closure fixpoints stay unchanged") {
    Graph empty(5);
    CHECK(closure(empty, 1).closure == empty);
    CHECK(closure(cycle(5), 5).closure == cycle(5));  // all degree sums are 4
}

TEST_CASE("closure trace replays to the closure") {
    Graph g = gen_dirac(10, 4);
    ClosureTrace tr = closure(g, 10);
    Graph replay = g;
    for (const ClosureStep& s : tr.steps) {
        // the witness must hold in the graph at insertion time
        CHECK(replay.degree(s.edge.u) + replay.degree(s.edge.v) == s.degree_sum);
        CHECK(s.degree_sum >= tr.threshold);
        replay.add_edge(s.edge.u, s.edge.v);
    }
    CHECK(replay == tr.closure);
}

TEST_CASE("Hamiltonian cycle in small complete and bipartite graphs") {
    CHECK(is_ham_cycle(complete(4), ham_cycle_dirac(complete(4))));
    VertexSequence c = ham_cycle_dirac(complete_bipartite(3, 3));
    CHECK(is_ham_cycle(complete_bipartite(3, 3), c));
    // alternation is forced in a bipartite 6-cycle
    for (size_t i = 0; i < c.size(); ++i)
        CHECK((c[i] < 3) != (c[(i + 1) % 6] < 3));
}

TEST_CASE("Hamiltonian cycles on seeded dense instances") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = gen_dirac(100, seed);
        CHECK(is_ham_cycle(g, ham_cycle_dirac(g)));
    }
}

TEST_CASE("incomplete closure is reported, not mangled") {
    CHECK_THROWS_AS(ham_cycle_dirac(cycle(6)), NotApplicableError);
}

TEST_CASE("degree-tail condition for Hamiltonian-connectedness") {
    CHECK(ckk_condition(complete(5)));
    CHECK_FALSE(ckk_condition(cycle(6)));
    CHECK_FALSE(ckk_condition(star(4)));
}

TEST_CASE("Hamiltonian path between fixed endpoints in K4") {
    VertexSequence p = ham_path_between(complete(4), 0, 2);
    CHECK(is_ham_path(complete(4), p, 0, 2));
}

TEST_CASE("Hamiltonian path between the two ends of a removed edge") {
    Graph g = remove_edges(complete(5), {{0, 1}});
    CHECK(ckk_condition(g));
    CHECK(is_ham_path(g, ham_path_between(g, 0, 1), 0, 1));
}

TEST_CASE("path construction refuses when the condition fails") {
    CHECK_THROWS_AS(ham_path_between(cycle(6), 0, 3), NotApplicableError);
}

TEST_CASE("two edge-disjoint endpoint-pinned Hamiltonian paths in K8") {
    EndpointRequest req{{0, 1}, {2, 3}};
    auto paths = edge_disjoint_ham_paths(complete(8), req);
    REQUIRE(paths.size() == 2);
    CHECK(is_ham_path(complete(8), paths[0], 0, 1));
    CHECK(is_ham_path(complete(8), paths[1], 2, 3));
    EdgeList used;
    for (const auto& p : paths)
        for (size_t i = 0; i + 1 < p.size(); ++i) used.emplace_back(p[i], p[i + 1]);
    CHECK(edges_distinct(used));
}

TEST_CASE("single-request case reduces to one Hamiltonian path") {
    auto paths = edge_disjoint_ham_paths(complete(4), {{0, 3}});
    REQUIRE(paths.size() == 1);
    CHECK(is_ham_path(complete(4), paths[0], 0, 3));
}

TEST_CASE("a repeated endpoint pair yields two edge-disjoint paths") {
    EndpointRequest req{{0, 1}, {0, 1}};
    auto paths = edge_disjoint_ham_paths(complete(9), req);
    REQUIRE(paths.size() == 2);
    CHECK(is_ham_path(complete(9), paths[0], 0, 1));
    CHECK(is_ham_path(complete(9), paths[1], 0, 1));
    EdgeList used;
    for (const auto& p : paths)
        for (size_t i = 0; i + 1 < p.size(); ++i) used.emplace_back(p[i], p[i + 1]);
    CHECK(edges_distinct(used));
}

TEST_CASE("hypothesis violations are named") {
    CHECK_THROWS_AS(edge_disjoint_ham_paths(cycle(8), {{0, 1}, {2, 3}}),
                    NotApplicableError);
}

TEST_CASE("degree-bound test on whole-graph and split partitions") {
    Graph k9 = complete(9);
    CHECK(lemma_h_applicable(k9, VertexSet::full(9), VertexSet(9), 2));
    // a V2 vertex of degree exactly |V2| + 1 fails the |V2| + 2*l floor
    Graph g = complete(8);
    VertexSet v2 = VertexSet::of(8, {5, 6, 7});
    Graph h = g;
    h.remove_edge(7, 0);
    h.remove_edge(7, 1);
    h.remove_edge(7, 2);  // deg(7) = 4 = |V2| + 1
    VertexSet v1 = VertexSet::full(8);
    v1.subtract(v2);
    CHECK_FALSE(lemma_h_applicable(h, v1, v2, 1));
}

TEST_CASE("degree-bound test implies the path-system hypothesis") {
    for (uint64_t seed = 1; seed <= 5; ++seed) {
        for (int ell = 1; ell <= 2; ++ell) {
            Graph g = gen_dirac(24, seed, 2 * ell);
            if (!lemma_h_applicable(g, VertexSet::full(24), VertexSet(24), ell))
                continue;
            DegreeProfile prof = degree_profile(g);
            for (int j = 2 * ell; 2 * j <= 24 + 4 * (ell - 1); ++j)
                CHECK(prof.psi(j) < j - 2 * ell + 1);
        }
    }
}

TEST_CASE("backtracking fallback finds cycles and respects its budget") {
    auto c = ham_cycle_backtracking(cycle(8), 100000);
    REQUIRE(c.has_value());
    CHECK(is_ham_cycle(cycle(8), *c));
    CHECK_FALSE(ham_cycle_backtracking(petersen(), 1000000).has_value());
}
