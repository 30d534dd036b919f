#include "hampreserve/hamilton.hpp"

#include <algorithm>

namespace hp {

ClosureTrace closure(const Graph& g, int t) {
    ClosureTrace trace;
    trace.closure = g;
    trace.threshold = t;
    Graph& h = trace.closure;
    int n = g.order();

    // Worklist of vertices whose degree grew; a first full pass seeds it.
    std::vector<int> work(n);
    for (int v = 0; v < n; ++v) work[v] = v;
    while (!work.empty()) {
        int u = work.back();
        work.pop_back();
        for (int v = 0; v < n; ++v) {
            if (v == u || h.has_edge(u, v)) continue;
            int sum = h.degree(u) + h.degree(v);
            if (sum >= t) {
                h.add_edge(u, v);
                trace.steps.push_back({Edge(u, v), sum});
                work.push_back(u);
                work.push_back(v);
            }
        }
    }
    return trace;
}

namespace {

// Unwinds one closure edge out of a Hamiltonian cycle: `host` is the graph
// WITHOUT the edge; if the cycle uses it, rotate via a crossing chord.
void unwind_edge(const Graph& host, std::vector<int>& cycle, const Edge& e) {
    int n = int(cycle.size());
    int px = -1;
    for (int i = 0; i < n; ++i)
        if (cycle[i] == e.u || cycle[i] == e.v) {
            px = i;
            break;
        }
    int x = cycle[px], y = (x == e.u) ? e.v : e.u;
    int succ = cycle[(px + 1) % n], pred = cycle[(px + n - 1) % n];
    if (succ != y && pred != y) return;  // cycle does not use the edge

    // Lay the cycle out as a path x = c[0], ..., c[n-1] = y.
    std::vector<int> c(n);
    if (succ == y) {
        for (int i = 0; i < n; ++i) c[i] = cycle[(px - i + 2 * n) % n];
    } else {
        for (int i = 0; i < n; ++i) c[i] = cycle[(px + i) % n];
    }

    // Least j with x ~ c[j+1] and y ~ c[j]; exists since
    // deg(x)+deg(y) >= n in the host.
    int j = -1;
    for (int i = 1; i + 1 < n; ++i)
        if (host.has_edge(x, c[i + 1]) && host.has_edge(y, c[i])) {
            j = i;
            break;
        }
    if (j < 0)
        throw InternalConsistencyError("closure unwinding: no crossing chord");
    std::vector<int> next(c.begin(), c.begin() + j + 1);
    for (int i = n - 1; i > j; --i) next.push_back(c[i]);
    cycle = std::move(next);
}

std::vector<int> unwind_to_cycle(const Graph& base, const ClosureTrace& trace,
                                 std::vector<int> cycle) {
    Graph host = trace.closure;
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        host.remove_edge(it->edge.u, it->edge.v);
        unwind_edge(host, cycle, it->edge);
    }
    (void)base;
    return cycle;
}

}  // namespace

VertexSequence ham_cycle_dirac(const Graph& g) {
    int n = g.order();
    if (n < 3) throw DomainError("ham_cycle_dirac: need n >= 3");
    ClosureTrace trace = closure(g, n);
    if (!trace.closure.is_complete())
        throw NotApplicableError("ham_cycle_dirac: n-closure is not complete");
    std::vector<int> cycle(n);
    for (int i = 0; i < n; ++i) cycle[i] = i;
    return unwind_to_cycle(g, trace, std::move(cycle));
}

bool ckk_condition(const Graph& g) {
    int n = g.order();
    if (n < 4) throw DomainError("ckk_condition: need n >= 4");
    DegreeProfile prof = degree_profile(g);
    for (int j = 2; 2 * j <= n; ++j)
        if (prof.psi(j) >= j - 1) return false;
    return true;
}

VertexSequence ham_path_between(const Graph& g, int u, int v) {
    int n = g.order();
    if (u == v || u < 0 || v < 0 || u >= n || v >= n)
        throw DomainError("ham_path_between: bad endpoints");
    if (!ckk_condition(g))
        throw NotApplicableError("ham_path_between: degree condition fails");

    // Closure additions are restricted to the original vertices; the apex has
    // degree 2 and never qualifies. Completeness of the (n+1)-closure is the
    // guarantee the construction rests on, so it is asserted here.
    ClosureTrace trace = closure(g, n + 1);
    if (!trace.closure.is_complete())
        throw InternalConsistencyError(
            "ham_path_between: (n+1)-closure not complete despite degree condition");

    // Apex graph: z = n, adjacent to u and v only.
    Graph apex_closure(n + 1);
    for (const Edge& e : trace.closure.edges()) apex_closure.add_edge(e.u, e.v);
    apex_closure.add_edge(n, u);
    apex_closure.add_edge(n, v);

    std::vector<int> cycle{n, u};
    for (int w = 0; w < n; ++w)
        if (w != u && w != v) cycle.push_back(w);
    cycle.push_back(v);

    ClosureTrace apex_trace;
    apex_trace.closure = apex_closure;
    apex_trace.steps = trace.steps;
    apex_trace.threshold = n + 1;
    cycle = unwind_to_cycle(g, apex_trace, std::move(cycle));

    // Cut out the apex; the remainder is a Hamiltonian u-v path in G.
    int zpos = -1;
    for (int i = 0; i <= n; ++i)
        if (cycle[i] == n) zpos = i;
    std::vector<int> path;
    for (int i = 1; i <= n; ++i) path.push_back(cycle[(zpos + i) % (n + 1)]);
    if (path.front() == v) std::reverse(path.begin(), path.end());
    if (path.front() != u || path.back() != v)
        throw InternalConsistencyError("ham_path_between: apex not pinned to endpoints");
    return path;
}

namespace {

// Throws NotApplicableError naming the violating j if the psi condition for
// l edge-disjoint endpoint-specified Hamiltonian paths fails.
void check_psi_condition(const Graph& g, int l) {
    int n = g.order();
    if (n < 4 * l)
        throw NotApplicableError("edge_disjoint_ham_paths: need n >= 4l");
    DegreeProfile prof = degree_profile(g);
    for (int j = 2 * l; 2 * j <= n + 4 * (l - 1); ++j)
        if (prof.psi(j) >= j - 2 * l + 1)
            throw NotApplicableError(
                "edge_disjoint_ham_paths: psi condition fails at j = " +
                std::to_string(j));
}

}  // namespace

std::vector<VertexSequence> edge_disjoint_ham_paths(const Graph& g,
                                                    const EndpointRequest& req) {
    int l = int(req.size());
    if (l <= 0) throw DomainError("edge_disjoint_ham_paths: empty request");
    for (auto [u, v] : req)
        if (u == v) throw DomainError("edge_disjoint_ham_paths: degenerate pair");
    check_psi_condition(g, l);

    // Peel paths last to first; each removal shifts psi by two.
    std::vector<VertexSequence> paths(l);
    Graph cur = g;
    for (int i = l - 1; i >= 0; --i) {
        paths[i] = ham_path_between(cur, req[i].first, req[i].second);
        for (size_t j = 0; j + 1 < paths[i].size(); ++j)
            cur.remove_edge(paths[i][j], paths[i][j + 1]);
    }
    return paths;
}

bool lemma_h_applicable(const Graph& g, const VertexSet& v1, const VertexSet& v2,
                        int l) {
    int n = g.order();
    if (v1.empty()) throw DomainError("lemma_h_applicable: V1 empty");
    if (v1.intersects(v2) || v1.size() + v2.size() != n)
        throw DomainError("lemma_h_applicable: V1, V2 must partition V(G)");
    bool ok = true;
    v1.for_each([&](int v) {
        if (2 * g.degree(v) < n + 4 * l - 2) ok = false;
    });
    int s2 = v2.size();
    v2.for_each([&](int v) {
        if (g.degree(v) < s2 + 2 * l) ok = false;
    });
    return ok;
}

namespace {

bool backtrack(const Graph& g, std::vector<int>& path, VertexSet& used,
               long long& budget) {
    int n = g.order();
    if (budget-- <= 0) return false;
    if (int(path.size()) == n) return g.has_edge(path.back(), path.front());
    int u = path.back();
    bool out_of_budget = false;
    bool found = false;
    g.neighbors(u).for_each([&](int v) {
        if (found || out_of_budget || used.contains(v)) return;
        used.insert(v);
        path.push_back(v);
        if (backtrack(g, path, used, budget)) {
            found = true;
            return;
        }
        if (budget <= 0) out_of_budget = true;
        path.pop_back();
        used.erase(v);
    });
    return found;
}

}  // namespace

std::optional<VertexSequence> ham_cycle_backtracking(const Graph& g,
                                                     long long budget) {
    int n = g.order();
    if (n < 3) return std::nullopt;
    if (g.min_degree() < 2) return std::nullopt;
    std::vector<int> path{0};
    VertexSet used(n);
    used.insert(0);
    if (backtrack(g, path, used, budget)) return path;
    return std::nullopt;
}

}  // namespace hp
