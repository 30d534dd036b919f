#include "doctest.h"
#include "helpers.hpp"
#include "hampreserve/graph.hpp"
#include "hampreserve/instances.hpp"

using namespace hp;
using namespace hpt;

TEST_CASE("induced subgraph of K4 by a triple is K3") {
    Subgraph s = induced_subgraph(complete(4), VertexSet::of(4, {0, 1, 2}));
    CHECK(s.graph == complete(3));
    CHECK(s.to_parent == std::vector<int>{0, 1, 2});
}

TEST_CASE("induced subgraph of C5 by three consecutive vertices is a path") {
    Subgraph s = induced_subgraph(cycle(5), VertexSet::of(5, {0, 1, 2}));
    CHECK(s.graph == path(3));
}

TEST_CASE("induced subgraph edges equal the brute filter on random graphs") {
    Rng rng(12);
    for (int t = 0; t < 20; ++t) {
        Graph g(10);
        for (int u = 0; u < 10; ++u)
            for (int v = u + 1; v < 10; ++v)
                if (rng.below(2)) g.add_edge(u, v);
        VertexSet s(10);
        while (s.size() < 6) s.insert(int(rng.below(10)));
        Subgraph sub = induced_subgraph(g, s);
        EdgeList expect;
        for (const Edge& e : g.edges())
            if (s.contains(e.u) && s.contains(e.v)) expect.push_back(e);
        EdgeList got;
        for (const Edge& e : sub.graph.edges())
            got.emplace_back(sub.to_parent[e.u], sub.to_parent[e.v]);
        normalize(got);
        CHECK(got == expect);
    }
}

TEST_CASE("induced subgraph rejects the empty set") {
    CHECK_THROWS_AS(induced_subgraph(complete(3), VertexSet(3)), DomainError);
}

TEST_CASE("K4 minus a perfect matching is C4") {
    Graph g = remove_edges(complete(4), {{0, 1}, {2, 3}});
    CHECK(g.size() == 4);
    CHECK(g.degree(0) == 2);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(0, 3));
    CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("removing no edges is the identity") {
    CHECK(remove_edges(cycle(6), {}) == cycle(6));
}

TEST_CASE("C6 minus one edge is a path") {
    Graph g = remove_edges(cycle(6), {{0, 1}});
    CHECK(g.size() == 5);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 1);
    CHECK(is_connected(g));
}

TEST_CASE("removing then re-adding reproduces the graph") {
    Graph g = complete_bipartite(3, 4);
    EdgeList f = {{0, 3}, {1, 5}, {2, 6}};
    Graph h = remove_edges(g, f);
    for (const Edge& e : f) h.add_edge(e.u, e.v);
    CHECK(h == g);
}

TEST_CASE("edge-induced subgraph of K4 by a matching is 2K2") {
    Subgraph s = edge_induced(complete(4), {{0, 1}, {2, 3}});
    CHECK(s.graph.order() == 4);
    CHECK(s.graph.size() == 2);
    for (int v = 0; v < 4; ++v) CHECK(s.graph.degree(v) == 1);
}

TEST_CASE("edge-induced by the full edge set keeps all edges") {
    Graph c5 = cycle(5);
    Subgraph s = edge_induced(c5, c5.edges());
    CHECK(s.graph == c5);
}

TEST_CASE("edge-induced degrees equal incidence counts") {
    Rng rng(7);
    Graph g(9);
    for (int u = 0; u < 9; ++u)
        for (int v = u + 1; v < 9; ++v)
            if (rng.below(2)) g.add_edge(u, v);
    EdgeList all = g.edges(), f;
    for (const Edge& e : all)
        if (rng.below(2)) f.push_back(e);
    if (f.empty()) f.push_back(all[0]);
    Subgraph s = edge_induced(g, f);
    for (int v = 0; v < s.graph.order(); ++v) {
        int inc = 0;
        for (const Edge& e : f)
            if (e.u == s.to_parent[v] || e.v == s.to_parent[v]) ++inc;
        CHECK(s.graph.degree(v) == inc);
    }
}

TEST_CASE("crossing edges of K4 between opposite pairs") {
    EdgeList m = crossing_edges(complete(4), VertexSet::of(4, {0, 1}),
                                VertexSet::of(4, {2, 3}));
    CHECK(m == EdgeList{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

TEST_CASE("no crossing edges between components") {
    Graph g(6);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})
        g.add_edge(u, v);
    CHECK(crossing_edges(g, VertexSet::of(6, {0, 1, 2}),
                         VertexSet::of(6, {3, 4, 5}))
              .empty());
}

TEST_CASE("crossing-edge count equals the neighbor-sum identity") {
    Rng rng(3);
    Graph g(12);
    for (int u = 0; u < 12; ++u)
        for (int v = u + 1; v < 12; ++v)
            if (rng.below(2)) g.add_edge(u, v);
    VertexSet a = VertexSet::of(12, {0, 2, 4, 6});
    VertexSet b = VertexSet::of(12, {1, 3, 5});
    int expect = 0;
    a.for_each([&](int u) {
        VertexSet nb = g.neighbors(u);
        nb &= b;
        expect += nb.size();
    });
    CHECK(int(crossing_edges(g, a, b).size()) == expect);
}

TEST_CASE("degree profile of K5") {
    DegreeProfile p = degree_profile(complete(5));
    CHECK(p.psi(3) == 0);
    CHECK(p.psi(4) == 5);
}

TEST_CASE("degree profile of the 4-leaf star") {
    DegreeProfile p = degree_profile(star(4));
    CHECK(p.psi(1) == 4);
    CHECK(p.psi(4) == 5);
    CHECK(p.min_degree == 1);
    CHECK(p.max_degree == 4);
}

TEST_CASE("degree profile matches a per-vertex recount") {
    Rng rng(99);
    Graph g(12);
    for (int u = 0; u < 12; ++u)
        for (int v = u + 1; v < 12; ++v)
            if (rng.below(5) < 2) g.add_edge(u, v);
    DegreeProfile p = degree_profile(g);
    for (int j = 0; j <= 11; ++j) {
        int count = 0;
        for (int v = 0; v < 12; ++v)
            if (g.degree(v) <= j) ++count;
        CHECK(p.psi(j) == count);
    }
    CHECK(p.psi(11) == 12);
}

TEST_CASE("graph basics: no self-loops, no multi-edges, symmetric adjacency") {
    Graph g(4);
    CHECK_THROWS_AS(g.add_edge(1, 1), DomainError);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    CHECK(g.size() == 1);
    CHECK(g.has_edge(1, 0));
    int total = 0;
    for (int v = 0; v < 4; ++v) total += g.degree(v);
    CHECK(total == 2 * g.size());
}

TEST_CASE("graph hash distinguishes graphs and matches itself") {
    CHECK(graph_hash(cycle(6)) == graph_hash(cycle(6)));
    CHECK(graph_hash(cycle(6)) != graph_hash(path(6)));
    CHECK(graph_hash(complete(4)) != graph_hash(complete(5)));
}

TEST_CASE("connectivity and triangle scans") {
    CHECK(is_connected(cycle(5)));
    CHECK_FALSE(is_connected(Graph(3, {{0, 1}})));
    CHECK(connected_components(Graph(5, {{0, 1}, {2, 3}})).size() == 3);
    CHECK(has_triangle(complete(3)));
    CHECK_FALSE(has_triangle(complete_bipartite(3, 3)));
}
