#include "hampreserve/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace hp {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 2;

struct Dinic {
    struct Arc {
        int to, cap, flow;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out;  // arc indices per node
    std::vector<int> level, ptr;

    explicit Dinic(int nodes) : out(nodes) {}

    int add_arc(int u, int v, int cap) {
        int id = int(arcs.size());
        arcs.push_back({v, cap, 0});
        arcs.push_back({u, 0, 0});
        out[u].push_back(id);
        out[v].push_back(id + 1);
        return id;
    }

    bool bfs(int s, int t) {
        level.assign(out.size(), -1);
        level[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int id : out[u]) {
                const Arc& a = arcs[id];
                if (a.cap - a.flow > 0 && level[a.to] < 0) {
                    level[a.to] = level[u] + 1;
                    q.push(a.to);
                }
            }
        }
        return level[t] >= 0;
    }

    int dfs(int u, int t, int pushed) {
        if (u == t || pushed == 0) return pushed;
        for (int& i = ptr[u]; i < int(out[u].size()); ++i) {
            int id = out[u][i];
            Arc& a = arcs[id];
            if (level[a.to] != level[u] + 1 || a.cap - a.flow <= 0) continue;
            int got = dfs(a.to, t, std::min(pushed, a.cap - a.flow));
            if (got > 0) {
                a.flow += got;
                arcs[id ^ 1].flow -= got;
                return got;
            }
        }
        return 0;
    }

    int max_flow(int s, int t, int limit = kInf) {
        int total = 0;
        while (total < limit && bfs(s, t)) {
            ptr.assign(out.size(), 0);
            while (total < limit) {
                int got = dfs(s, t, limit - total);
                if (got == 0) break;
                total += got;
            }
        }
        return total;
    }

    std::vector<char> residual_reachable(int s) const {
        std::vector<char> seen(out.size(), 0);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int id : out[u]) {
                const Arc& a = arcs[id];
                if (a.cap - a.flow > 0 && !seen[a.to]) {
                    seen[a.to] = 1;
                    stack.push_back(a.to);
                }
            }
        }
        return seen;
    }
};

// Split-vertex network for internally-disjoint s-t paths:
// node 2v = v_in, 2v+1 = v_out.
Dinic build_split_network(const Graph& g, int s, int t) {
    Dinic net(2 * g.order());
    for (int v = 0; v < g.order(); ++v)
        net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? kInf : 1);
    // Edge arcs are uncapped so the minimum cut lands on vertex-split arcs
    // only; s and t are never adjacent when this network is built.
    for (const Edge& e : g.edges()) {
        net.add_arc(2 * e.u + 1, 2 * e.v, kInf);
        net.add_arc(2 * e.v + 1, 2 * e.u, kInf);
    }
    return net;
}

int st_connectivity(const Graph& g, int s, int t, int limit) {
    Dinic net = build_split_network(g, s, t);
    return net.max_flow(2 * s + 1, 2 * t, limit);
}

// Extracts the vertex cut of a saturated split network.
std::vector<int> split_network_cut(const Dinic& net, const Graph& g, int s, int t) {
    std::vector<char> seen = net.residual_reachable(2 * s + 1);
    std::vector<int> cut;
    for (int v = 0; v < g.order(); ++v) {
        if (v == s || v == t) continue;
        if (seen[2 * v] && !seen[2 * v + 1]) cut.push_back(v);
    }
    return cut;
}

// Probe pairs for the global sweep: all non-neighbors of a min-degree vertex
// s, then all non-adjacent pairs of neighbors of s (covers the case that s
// lies in every minimum cut).
template <typename F>
void sweep_pairs(const Graph& g, F probe) {
    int s = 0;
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) < g.degree(s)) s = v;
    for (int t = 0; t < g.order(); ++t) {
        if (t == s || g.has_edge(s, t)) continue;
        if (!probe(s, t)) return;
    }
    std::vector<int> nbrs = g.neighbors(s).to_vector();
    for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j) {
            if (g.has_edge(nbrs[i], nbrs[j])) continue;
            if (!probe(nbrs[i], nbrs[j])) return;
        }
}

}  // namespace

std::vector<int> PathSystem::internal_vertices() const {
    std::vector<int> out;
    for (const auto& p : paths)
        for (size_t i = 1; i + 1 < p.size(); ++i) out.push_back(p[i]);
    std::sort(out.begin(), out.end());
    return out;
}

EdgeList PathSystem::all_edges() const {
    EdgeList out;
    for (const auto& p : paths)
        for (size_t i = 0; i + 1 < p.size(); ++i) out.push_back(Edge(p[i], p[i + 1]));
    normalize(out);
    return out;
}

int kappa(const Graph& g) {
    if (g.order() < 2) throw DomainError("kappa: need n >= 2");
    if (g.is_complete()) return g.order() - 1;
    int best = g.order() - 1;
    sweep_pairs(g, [&](int s, int t) {
        best = std::min(best, st_connectivity(g, s, t, best));
        return best > 0;
    });
    return best;
}

bool is_k_connected(const Graph& g, int k) {
    if (k <= 0) return true;
    if (g.order() - 1 < k) return false;
    if (g.is_complete()) return true;
    bool ok = true;
    sweep_pairs(g, [&](int s, int t) {
        if (st_connectivity(g, s, t, k) < k) ok = false;
        return ok;
    });
    return ok;
}

VertexCut min_vertex_cut(const Graph& g) {
    if (g.order() < 3) throw DomainError("min_vertex_cut: need n >= 3");
    if (g.is_complete()) throw DomainError("min_vertex_cut: complete graph has no cut");
    int best = g.order() - 1, best_s = -1, best_t = -1;
    sweep_pairs(g, [&](int s, int t) {
        int f = st_connectivity(g, s, t, best);
        if (f < best || best_s < 0) {
            best = f;
            best_s = s;
            best_t = t;
        }
        return best > 0;
    });
    Dinic net = build_split_network(g, best_s, best_t);
    net.max_flow(2 * best_s + 1, 2 * best_t);
    std::vector<int> cut = split_network_cut(net, g, best_s, best_t);

    VertexSet cut_set = VertexSet::of(g.order(), cut);
    VertexSet rest = VertexSet::full(g.order());
    rest.subtract(cut_set);
    Subgraph rem = induced_subgraph(g, rest);
    auto comps = connected_components(rem.graph);
    VertexCut result;
    result.cut = cut;
    std::vector<int> comp_of_s;
    for (const auto& comp : comps) {
        std::vector<int> orig = map_to_parent(comp, rem.to_parent);
        bool has_s = std::find(orig.begin(), orig.end(), best_s) != orig.end();
        if (has_s)
            result.side_a = orig;
        else
            result.side_b.insert(result.side_b.end(), orig.begin(), orig.end());
    }
    std::sort(result.side_b.begin(), result.side_b.end());
    if (result.side_a.empty() || result.side_b.empty())
        throw InternalConsistencyError("min_vertex_cut: cut does not separate");
    return result;
}

namespace {

PathSystem disjoint_paths_impl(const Graph& g, const VertexSet& a,
                               const VertexSet& b, int k,
                               bool share_endpoints) {
    if (k <= 0) throw DomainError("disjoint_paths: k must be positive");
    if (a.intersects(b)) throw DomainError("disjoint_paths: A and B overlap");
    int n = g.order();
    // 2v/2v+1 = v_in/v_out, 2n = source, 2n+1 = sink.
    Dinic net(2 * n + 2);
    int S = 2 * n, T = 2 * n + 1;
    for (int v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, 1);
    for (const Edge& e : g.edges()) {
        net.add_arc(2 * e.u + 1, 2 * e.v, 1);
        net.add_arc(2 * e.v + 1, 2 * e.u, 1);
    }
    if (share_endpoints) {
        // Source enters at v_out and the sink leaves from v_in, bypassing the
        // unit vertex-split arc, so endpoints may carry several paths.
        a.for_each([&](int v) { net.add_arc(S, 2 * v + 1, k); });
        b.for_each([&](int v) { net.add_arc(2 * v, T, k); });
    } else {
        a.for_each([&](int v) { net.add_arc(S, 2 * v, 1); });
        b.for_each([&](int v) { net.add_arc(2 * v + 1, T, 1); });
    }

    int flow = net.max_flow(S, T, k);
    if (flow < k) {
        net.max_flow(S, T);  // saturate fully so the cut is a true blocker
        std::vector<char> seen = net.residual_reachable(S);
        std::vector<int> cut;
        for (int v = 0; v < n; ++v)
            if (!a.contains(v) && !b.contains(v) && seen[2 * v] &&
                !seen[2 * v + 1])
                cut.push_back(v);
        throw InfeasibleError("disjoint_paths: only " + std::to_string(flow) +
                                  " of " + std::to_string(k) + " paths exist",
                              cut);
    }

    // Peel the flow one unit at a time into vertex paths.
    PathSystem sys;
    for (int id : net.out[S]) {
        if (id & 1) continue;
        while (net.arcs[id].flow > 0) {
            --net.arcs[id].flow;
            std::vector<int> path{net.arcs[id].to / 2};
            int node = net.arcs[id].to;
            while (node != T) {
                bool advanced = false;
                for (int aid : net.out[node]) {
                    if (aid & 1) continue;
                    Dinic::Arc& arc = net.arcs[aid];
                    if (arc.flow <= 0) continue;
                    --arc.flow;
                    node = arc.to;
                    // record each vertex once, at its entry (v_in) node
                    if (node != T && node % 2 == 0) path.push_back(node / 2);
                    advanced = true;
                    break;
                }
                if (!advanced)
                    throw InternalConsistencyError(
                        "disjoint_paths: broken flow decomposition");
            }
            sys.paths.push_back(std::move(path));
        }
    }
    return sys;
}

}  // namespace

PathSystem disjoint_paths(const Graph& g, const VertexSet& a, const VertexSet& b,
                          int k) {
    return disjoint_paths_impl(g, a, b, k, true);
}

PathSystem covering_bridge_flow(const Graph& g, const VertexSet& a,
                                const VertexSet& b, const VertexSet& w, int k,
                                bool allow_order4) {
    if (k <= 0) throw DomainError("covering_bridge_flow: k must be positive");
    if (a.intersects(b) || a.intersects(w) || b.intersects(w))
        throw DomainError("covering_bridge_flow: A, B, W must be pairwise disjoint");

    std::vector<int> ws = w.to_vector();
    int nw = int(ws.size());
    std::vector<int> windex(g.order(), -1);
    for (int i = 0; i < nw; ++i) windex[ws[i]] = i;

    // A-heavy W-vertices may serve as the first internal of an order-4 path,
    // B-heavy ones as the second.
    std::vector<char> a_heavy(nw, 0);
    for (int i = 0; i < nw; ++i)
        a_heavy[i] = g.neighbors(ws[i]).intersection_size(a) >=
                     g.neighbors(ws[i]).intersection_size(b);

    // Node layout: per original vertex v in A or B a single node pair is not
    // needed; use: a-node = v, b-node = v, w_in = n + 2i, w_out = n + 2i + 1,
    // then S, T, SS, TT.
    int n = g.order();
    int S = n + 2 * nw, T = S + 1, SS = T + 1, TT = SS + 1;
    Dinic net(TT + 1);

    // Exact flow value k: arc T->S with lower bound k = cap k.
    net.add_arc(SS, S, k);
    net.add_arc(T, TT, k);
    // Each W-vertex carries exactly one unit: arc w_in->w_out lb 1 = cap 1.
    for (int i = 0; i < nw; ++i) {
        net.add_arc(SS, n + 2 * i + 1, 1);
        net.add_arc(n + 2 * i, TT, 1);
    }
    a.for_each([&](int v) { net.add_arc(S, v, 1); });
    b.for_each([&](int v) { net.add_arc(v, T, 1); });
    a.for_each([&](int u) {
        g.neighbors(u).for_each([&](int v) {
            if (b.contains(v)) net.add_arc(u, v, 1);
            if (w.contains(v)) net.add_arc(u, n + 2 * windex[v], 1);
        });
    });
    for (int i = 0; i < nw; ++i) {
        g.neighbors(ws[i]).for_each([&](int v) {
            if (b.contains(v)) net.add_arc(n + 2 * i + 1, v, 1);
            if (allow_order4 && w.contains(v) && a_heavy[i] && !a_heavy[windex[v]])
                net.add_arc(n + 2 * i + 1, n + 2 * windex[v], 1);
        });
    }

    int need = nw + k;
    if (net.max_flow(SS, TT) != need)
        throw BoundViolationError(
            "covering_bridge_flow: no system of " + std::to_string(k) +
            " paths covering all " + std::to_string(nw) + " cut vertices");

    // Recover the real flow: lower-bound arcs carry their bound implicitly.
    // Walk S -> T units; crossing w_in..w_out is the implicit unit.
    PathSystem sys;
    std::vector<int> consumed(net.arcs.size() / 2, 0);
    auto next_hop = [&](int node) -> int {
        for (int aid : net.out[node]) {
            if (aid & 1) continue;
            const auto& arc = net.arcs[aid];
            if (arc.to == TT || arc.to == SS) continue;
            if (arc.flow > 0 && !consumed[aid / 2]) {
                consumed[aid / 2] = 1;
                return arc.to;
            }
        }
        return -1;
    };
    for (int aid : net.out[S]) {
        if (aid & 1) continue;
        if (net.arcs[aid].flow <= 0) continue;
        std::vector<int> path{net.arcs[aid].to};
        int node = net.arcs[aid].to;
        while (node != T) {
            if (node >= n && (node - n) % 2 == 0) {
                node = node + 1;  // w_in -> w_out, the lower-bound unit
                continue;
            }
            node = next_hop(node);
            if (node < 0)
                throw InternalConsistencyError("covering_bridge_flow: broken decomposition");
            if (node < n)
                path.push_back(node);
            else if ((node - n) % 2 == 0)
                path.push_back(ws[(node - n) / 2]);
        }
        sys.paths.push_back(std::move(path));
    }

    // Sanity: internals exactly W, orders in {2,3,4}.
    std::vector<int> internals;
    for (const auto& p : sys.paths) {
        if (p.size() < 2 || p.size() > 4)
            throw InternalConsistencyError("covering_bridge_flow: bad path order");
        for (size_t i = 1; i + 1 < p.size(); ++i) internals.push_back(p[i]);
    }
    std::sort(internals.begin(), internals.end());
    if (internals != ws)
        throw InternalConsistencyError("covering_bridge_flow: internals != W");
    return sys;
}

namespace {

bool used_as_endpoint(const PathSystem& sys, int v) {
    for (const auto& p : sys.paths)
        if (p.front() == v || p.back() == v) return true;
    return false;
}

// Picks a neighbor of w on the given side that is not an endpoint of any
// current path; -1 if none.
int fresh_neighbor(const Graph& g, const PathSystem& sys, int w, const VertexSet& side) {
    int pick = -1;
    VertexSet cand = g.neighbors(w);
    cand &= side;
    cand.for_each([&](int v) {
        if (pick < 0 && !used_as_endpoint(sys, v)) pick = v;
    });
    return pick;
}

}  // namespace

PathSystem covering_bridge_reference(const Graph& g, const VertexSet& a,
                                     const VertexSet& b, const VertexSet& w,
                                     int k) {
    PathSystem sys = disjoint_paths_impl(g, a, b, k, false);

    // Compress each path to its crossing subpath (u, w..., v) with all
    // internal vertices in W.
    for (auto& p : sys.paths) {
        size_t j = 0;
        while (j < p.size() && !b.contains(p[j])) ++j;
        if (j == p.size())
            throw InternalConsistencyError("covering_bridge_reference: path misses B");
        size_t i = j;
        while (i > 0 && !a.contains(p[i - 1])) --i;
        if (i == 0) throw InternalConsistencyError("covering_bridge_reference: path misses A");
        std::vector<int> sub(p.begin() + (i - 1), p.begin() + (j + 1));
        for (size_t t = 1; t + 1 < sub.size(); ++t)
            if (!w.contains(sub[t]))
                throw InternalConsistencyError(
                    "covering_bridge_reference: crossing subpath leaves W");
        p = std::move(sub);
    }

    int cap = 2 * k * std::max(1, w.size());
    for (int round = 0; round < cap; ++round) {
        // Shorten any path with three or more internals, and split order-4
        // paths whose two internals sit on the same heavy side.
        bool changed = false;
        for (auto& p : sys.paths) {
            if (p.size() > 4) {
                int wlast = p[p.size() - 2];
                int u = fresh_neighbor(g, sys, wlast, a);
                if (u >= 0) {
                    p = {u, wlast, p.back()};
                } else {
                    int wfirst = p[1];
                    int v = fresh_neighbor(g, sys, wfirst, b);
                    if (v < 0)
                        throw InternalConsistencyError(
                            "covering_bridge_reference: cannot shorten long path");
                    p = {p.front(), wfirst, v};
                }
                changed = true;
            } else if (p.size() == 4) {
                int w1 = p[1], w2 = p[2];
                bool h1 = g.neighbors(w1).intersection_size(a) >=
                          g.neighbors(w1).intersection_size(b);
                bool h2 = g.neighbors(w2).intersection_size(a) >=
                          g.neighbors(w2).intersection_size(b);
                if (h1 && h2) {
                    int u = fresh_neighbor(g, sys, w2, a);
                    if (u < 0)
                        throw InternalConsistencyError(
                            "covering_bridge_reference: cannot normalize order-4 path");
                    p = {u, w2, p.back()};
                    changed = true;
                } else if (!h1 && !h2) {
                    int v = fresh_neighbor(g, sys, w1, b);
                    if (v < 0)
                        throw InternalConsistencyError(
                            "covering_bridge_reference: cannot normalize order-4 path");
                    p = {p.front(), w1, v};
                    changed = true;
                }
            }
        }
        if (changed) continue;

        // Find an uncovered cut vertex.
        std::vector<int> internals = sys.internal_vertices();
        int missing = -1;
        w.for_each([&](int wv) {
            if (missing < 0 &&
                !std::binary_search(internals.begin(), internals.end(), wv))
                missing = wv;
        });
        if (missing < 0) return sys;

        bool a_side = g.neighbors(missing).intersection_size(a) >=
                      g.neighbors(missing).intersection_size(b);
        const VertexSet& fresh_side = a_side ? a : b;
        const VertexSet& other_side = a_side ? b : a;
        int fresh = fresh_neighbor(g, sys, missing, fresh_side);
        if (fresh < 0)
            throw InternalConsistencyError(
                "covering_bridge_reference: no fresh endpoint for uncovered vertex");
        int mate = -1;
        VertexSet cands = g.neighbors(missing);
        cands &= other_side;
        cands.for_each([&](int v) {
            if (mate < 0 && !used_as_endpoint(sys, v)) mate = v;
        });
        if (mate < 0) mate = cands.first();
        if (mate < 0)
            throw InternalConsistencyError(
                "covering_bridge_reference: uncovered vertex has no opposite neighbor");
        std::vector<int> new_path = a_side ? std::vector<int>{fresh, missing, mate}
                                           : std::vector<int>{mate, missing, fresh};

        // The new path replaces an order-2 path, or the path occupying its
        // mate endpoint when that path can be spared or re-ended.
        int occupying = -1;
        for (size_t i = 0; i < sys.paths.size(); ++i)
            if (sys.paths[i].front() == mate || sys.paths[i].back() == mate)
                occupying = int(i);
        if (occupying >= 0) {
            auto& p = sys.paths[occupying];
            if (p.size() == 2) {
                p = new_path;
                continue;
            }
            int end_w = a_side ? p[p.size() - 2] : p[1];
            int alt = fresh_neighbor(g, sys, end_w, other_side);
            if (alt >= 0 && alt != mate) {
                if (a_side)
                    p.back() = alt;
                else
                    p.front() = alt;
            } else {
                p = new_path;  // uncovers p's internals; re-covered later
                continue;
            }
        }
        int spare = -1;
        for (size_t i = 0; i < sys.paths.size(); ++i)
            if (sys.paths[i].size() == 2) spare = int(i);
        if (spare < 0)
            throw InternalConsistencyError(
                "covering_bridge_reference: no order-2 path to replace");
        sys.paths[spare] = new_path;
    }
    throw InternalConsistencyError(
        "covering_bridge_reference: iteration cap exceeded");
}

bool ch_sufficient(const Graph& g, int k) {
    if (g.order() < k + 1) throw DomainError("ch_sufficient: need n >= k+1");
    return 2 * g.min_degree() >= g.order() + k - 2;
}

}  // namespace hp
