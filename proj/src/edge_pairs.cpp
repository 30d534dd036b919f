#include "hampreserve/edge_pairs.hpp"

#include <algorithm>
#include <string>

namespace hp {

bool edges_independent(const Edge& a, const Edge& b) {
    return a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
}

int phi(const Graph& g) { return g.size() - 2 * g.max_degree(); }

bool can_decompose(const Graph& g) {
    int m = g.size();
    if (m == 0) throw DomainError("can_decompose: edge set is empty");
    if (m % 2 != 0) return false;
    if (m < 2 * g.max_degree()) return false;
    if (m == 4 && has_triangle(g)) return false;
    return true;
}

namespace {

Graph minus_pair(const Graph& g, const EdgePair& p) {
    Graph h = g;
    h.remove_edge(p.e1.u, p.e1.v);
    h.remove_edge(p.e2.u, p.e2.v);
    return h;
}

// When |E| = 6 the peeled pair must leave a triangle-free remainder;
// otherwise any independent pair keeps the decomposition conditions.
bool peel_ok(const Graph& g, const EdgePair& p) {
    if (g.size() != 6) return true;
    return !has_triangle(minus_pair(g, p));
}

std::vector<int> max_degree_vertices(const Graph& g) {
    int d = g.max_degree();
    std::vector<int> xs;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == d) xs.push_back(v);
    return xs;
}

// Lexicographically least independent pair (e, f) with e incident to
// `anchor` (or unrestricted when anchor < 0) passing the |E|=6 guard.
EdgePair least_pair(const Graph& g, int anchor = -1) {
    EdgeList es = g.edges();
    for (size_t i = 0; i < es.size(); ++i) {
        if (anchor >= 0 && es[i].u != anchor && es[i].v != anchor) continue;
        for (size_t j = 0; j < es.size(); ++j) {
            if (i == j || !edges_independent(es[i], es[j])) continue;
            EdgePair p(es[i], es[j]);
            if (peel_ok(g, p)) return p;
        }
    }
    throw InternalConsistencyError("decompose: no peelable edge-pair found");
}

// Least independent partner for a fixed edge, under the |E|=6 guard.
EdgePair least_pair_with_edge(const Graph& g, const Edge& e) {
    for (const Edge& f : g.edges()) {
        if (!edges_independent(e, f)) continue;
        EdgePair p(e, f);
        if (peel_ok(g, p)) return p;
    }
    throw InternalConsistencyError("decompose: no partner for forced edge");
}

// Least independent pair touching both anchors (one edge at each).
EdgePair least_pair_two_anchors(const Graph& g, int a1, int a2) {
    EdgeList es = g.edges();
    for (const Edge& e : es) {
        if (e.u != a1 && e.v != a1) continue;
        for (const Edge& f : es) {
            if (f.u != a2 && f.v != a2) continue;
            if (!edges_independent(e, f)) continue;
            EdgePair p(e, f);
            if (peel_ok(g, p)) return p;
        }
    }
    throw InternalConsistencyError("decompose: no pair through both max vertices");
}

void decompose_rec(Graph g, PairDecomposition& out) {
    int m = g.size();
    if (m == 0) return;
    int dmax = g.max_degree();

    if (dmax == 1) {
        // Perfect matching: consecutive edges in lexicographic order are
        // automatically independent.
        EdgeList es = g.edges();
        for (size_t i = 0; i + 1 < es.size(); i += 2)
            out.emplace_back(es[i], es[i + 1]);
        return;
    }

    if (m - 2 * dmax >= 2) {
        EdgePair p = least_pair(g);
        out.push_back(p);
        decompose_rec(minus_pair(g, p), out);
        return;
    }

    // Phi = 0 from here (|E| = 2*Delta); split on max-degree vertex count.
    std::vector<int> xs = max_degree_vertices(g);
    if (xs.size() == 1) {
        // Case 1: pair one edge at x with an edge away from x; both max
        // degree and |E| drop in lockstep.
        EdgePair p = least_pair(g, xs[0]);
        out.push_back(p);
        decompose_rec(minus_pair(g, p), out);
        return;
    }
    if (xs.size() == 2) {
        // Case 2: the two max vertices each lose an edge; adjacent max
        // vertices pair their joining edge with any independent edge.
        EdgePair p = g.has_edge(xs[0], xs[1])
                         ? least_pair_with_edge(g, Edge(xs[0], xs[1]))
                         : least_pair_two_anchors(g, xs[0], xs[1]);
        out.push_back(p);
        decompose_rec(minus_pair(g, p), out);
        return;
    }

    // Case 3: three or more max-degree vertices forces Delta <= 3.
    if (dmax == 2) {
        // |E| = 4: the non-isolated part is a 4-path or a 4-cycle;
        // pairing alternate edges works for both.
        EdgeList es = g.edges();
        for (size_t i = 0; i < es.size(); ++i)
            for (size_t j = i + 1; j < es.size(); ++j) {
                if (!edges_independent(es[i], es[j])) continue;
                Edge r1, r2;
                int got = 0;
                for (size_t t = 0; t < es.size(); ++t)
                    if (t != i && t != j) (got++ ? r2 : r1) = es[t];
                if (!edges_independent(r1, r2)) continue;
                out.emplace_back(es[i], es[j]);
                out.emplace_back(r1, r2);
                return;
            }
        throw InternalConsistencyError("decompose: Delta=2 base case failed");
    }
    if (dmax == 3) {
        // Any three max-degree vertices span a triangle; the six edges are
        // the triangle plus one extra edge at each corner.
        int x1 = xs[0], x2 = xs[1], x3 = xs[2];
        if (!g.has_edge(x1, x2) || !g.has_edge(x1, x3) || !g.has_edge(x2, x3))
            throw InternalConsistencyError("decompose: max vertices not a triangle");
        auto extra = [&](int x, int a, int b) {
            int r = -1;
            g.neighbors(x).for_each([&](int w) {
                if (w != a && w != b && r < 0) r = w;
            });
            if (r < 0)
                throw InternalConsistencyError("decompose: missing corner edge");
            return Edge(x, r);
        };
        out.emplace_back(extra(x1, x2, x3), Edge(x2, x3));
        out.emplace_back(extra(x2, x1, x3), Edge(x1, x3));
        out.emplace_back(extra(x3, x1, x2), Edge(x1, x2));
        return;
    }
    throw InternalConsistencyError("decompose: unreachable Phi=0 case");
}

}  // namespace

PairDecomposition decompose_into_pairs(const Graph& g) {
    if (!can_decompose(g)) {
        std::string why;
        if (g.size() % 2 != 0) why = "|E| is odd";
        else if (g.size() < 2 * g.max_degree()) why = "|E| < 2*Delta";
        else why = "|E| = 4 with a triangle";
        throw DomainError("decompose_into_pairs: " + why);
    }
    PairDecomposition out;
    out.reserve(g.size() / 2);
    decompose_rec(g, out);
    if (int(out.size()) * 2 != g.size())
        throw InternalConsistencyError("decompose: pair count mismatch");
    return out;
}

namespace {

// K3 u (n-3)K1 or K3 u K2 u (n-5)K1: a triangle component, at most one
// extra K2 component, everything else isolated.
bool is_exceptional(const Graph& g) {
    int tri = 0, k2 = 0;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() == 1) continue;
        if (comp.size() == 3) {
            Subgraph s = induced_subgraph(g, VertexSet::of(g.order(), comp));
            if (s.graph.size() == 3) {
                ++tri;
                continue;
            }
            return false;
        }
        if (comp.size() == 2) {
            ++k2;
            continue;
        }
        return false;
    }
    return tri == 1 && k2 <= 1;
}

std::pair<int, std::vector<EdgePair>> pairs_via_decompose(const Graph& g) {
    if (g.size() == 0) return {0, {}};
    PairDecomposition d = decompose_into_pairs(g);
    return {int(d.size()), std::move(d)};
}

// |E| odd and >= 2*Delta + 1: drop the least edge whose removal keeps
// |E|-1 >= 2*Delta and (when |E| = 5) leaves no triangle.
std::pair<int, std::vector<EdgePair>> pairs_odd_drop(const Graph& g) {
    for (const Edge& e : g.edges()) {
        Graph h = g;
        h.remove_edge(e.u, e.v);
        if (h.size() < 2 * h.max_degree()) continue;
        if (g.size() == 5 && has_triangle(h)) continue;
        return pairs_via_decompose(h);
    }
    throw InternalConsistencyError("max pairs: no droppable edge");
}

// |E| < 2*Delta with a unique max-degree vertex x: delete 2*Delta - |E|
// edges at x, preferring neighbors of large degree in G - x, then fix the
// one exceptional outcome (K3 u K2) by swapping a deleted edge back in.
std::pair<int, std::vector<EdgePair>> pairs_trim_unique_max(const Graph& g,
                                                            int x) {
    int m = g.size(), dmax = g.max_degree();
    std::vector<int> nb = g.neighbors(x).to_vector();
    std::stable_sort(nb.begin(), nb.end(), [&](int a, int b) {
        return g.degree(a) - 1 > g.degree(b) - 1;  // degree in G - x
    });
    Graph h = g;
    EdgeList deleted;
    for (int i = 0; i < 2 * dmax - m; ++i) {
        h.remove_edge(x, nb[i]);
        deleted.emplace_back(x, nb[i]);
    }
    if (h.degree(x) != m - dmax || h.max_degree() != m - dmax)
        throw InternalConsistencyError("max pairs: trim left wrong max degree");
    if (h.size() == 4 && has_triangle(h)) {
        // The only bad shape is K3 u K2 with x in the triangle: swap one
        // triangle edge at x for a deleted one.
        bool fixed = false;
        for (const Edge& e : h.edges()) {
            if (fixed || (e.u != x && e.v != x)) continue;
            int t = (e.u == x) ? e.v : e.u;
            if (h.neighbors(x).intersection_size(h.neighbors(t)) == 0) continue;
            h.remove_edge(e.u, e.v);
            h.add_edge(deleted.back().u, deleted.back().v);
            fixed = true;
        }
        if (!fixed || !can_decompose(h))
            throw InternalConsistencyError("max pairs: repair swap failed");
    }
    return pairs_via_decompose(h);
}

}  // namespace

std::pair<int, std::vector<EdgePair>> max_edge_disjoint_pairs(const Graph& g) {
    int m = g.size();
    if (m == 0) return {0, {}};
    if (is_exceptional(g))
        throw ExceptionalInputError(
            "max_edge_disjoint_pairs: K3 or K3 u K2 plus isolated vertices");
    int dmax = g.max_degree();

    std::pair<int, std::vector<EdgePair>> result;
    if (m >= 2 * dmax) {
        result = (m % 2 == 0) ? pairs_via_decompose(g) : pairs_odd_drop(g);
        if (result.first != m / 2)
            throw InternalConsistencyError("max pairs: count != floor(|E|/2)");
    } else {
        std::vector<int> xs = max_degree_vertices(g);
        if (dmax == 2) {
            // |E| <= 3: at most one pair; any independent pair is optimal.
            result = {0, {}};
            EdgeList es = g.edges();
            for (size_t i = 0; i < es.size() && result.first == 0; ++i)
                for (size_t j = i + 1; j < es.size(); ++j)
                    if (edges_independent(es[i], es[j])) {
                        result = {1, {EdgePair(es[i], es[j])}};
                        break;
                    }
            if (result.first != m - dmax)
                throw InternalConsistencyError("max pairs: Delta=2 shortfall");
        } else if (xs.size() == 2) {
            // Two adjacent max vertices and |E| = 2*Delta - 1: removing
            // their joining edge balances the count.
            if (!g.has_edge(xs[0], xs[1]))
                throw InternalConsistencyError("max pairs: max pair not adjacent");
            Graph h = g;
            h.remove_edge(xs[0], xs[1]);
            result = pairs_via_decompose(h);
        } else {
            result = pairs_trim_unique_max(g, xs[0]);
        }
        if (result.first != m - dmax)
            throw InternalConsistencyError("max pairs: count != |E| - Delta");
    }
    return result;
}

}  // namespace hp
