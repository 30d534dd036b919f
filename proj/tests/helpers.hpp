#ifndef HAMPRESERVE_TEST_HELPERS_HPP
#define HAMPRESERVE_TEST_HELPERS_HPP

#include <algorithm>

#include "hampreserve/graph.hpp"

namespace hpt {

inline hp::Graph complete(int n) {
    hp::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline hp::Graph cycle(int n) {
    hp::Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline hp::Graph path(int n) {
    hp::Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline hp::Graph star(int leaves) {
    hp::Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

inline hp::Graph complete_bipartite(int a, int b) {
    hp::Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

inline hp::Graph petersen() {
    hp::Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);       // outer cycle
        g.add_edge(v, v + 5);             // spokes
        g.add_edge(v + 5, (v + 2) % 5 + 5);  // inner pentagram
    }
    return g;
}

inline bool is_ham_cycle(const hp::Graph& g, const std::vector<int>& c) {
    int n = g.order();
    if (int(c.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : c) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (size_t i = 0; i < c.size(); ++i)
        if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
    return true;
}

inline bool is_ham_path(const hp::Graph& g, const std::vector<int>& p, int u,
                        int v) {
    int n = g.order();
    if (int(p.size()) != n) return false;
    if (!((p.front() == u && p.back() == v) ||
          (p.front() == v && p.back() == u)))
        return false;
    std::vector<char> seen(n, 0);
    for (int x : p) {
        if (x < 0 || x >= n || seen[x]) return false;
        seen[x] = 1;
    }
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1])) return false;
    return true;
}

inline hp::EdgeList cycle_edges(const std::vector<int>& c) {
    hp::EdgeList out;
    for (size_t i = 0; i < c.size(); ++i)
        out.emplace_back(c[i], c[(i + 1) % c.size()]);
    std::sort(out.begin(), out.end());
    return out;
}

inline bool edges_distinct(hp::EdgeList es) {
    std::sort(es.begin(), es.end());
    return std::adjacent_find(es.begin(), es.end()) == es.end();
}

}  // namespace hpt

#endif
