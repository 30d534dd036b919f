#include "hampreserve/preserve.hpp"

#include <algorithm>
#include <utility>

namespace hp {

namespace {

int ceil_frac(int a, int b) { return (a + b - 1) / b; }  // a >= 0, b > 0

EdgeList cycle_edge_list(const VertexSequence& c) {
    EdgeList out;
    for (size_t i = 0; i + 1 < c.size(); ++i) out.emplace_back(c[i], c[i + 1]);
    out.emplace_back(c.back(), c.front());
    normalize(out);
    return out;
}

bool in_sorted(const EdgeList& sorted, const Edge& e) {
    return std::binary_search(sorted.begin(), sorted.end(), e);
}

Edge to_parent_edge(const Edge& e, const std::vector<int>& map) {
    return Edge(map[e.u], map[e.v]);
}

}  // namespace

EdgeList CrossingBudget::q2_edges() const {
    EdgeList out;
    for (const auto& [uo, ue, vo, ve] : q2_ends) {
        out.emplace_back(uo, w_star1);
        out.emplace_back(vo, w_star1);
        out.emplace_back(ue, w_star2);
        out.emplace_back(ve, w_star2);
    }
    normalize(out);
    return out;
}

std::pair<int, int> select_q_split(const EdgeList& m_h, const EdgeList& m_b,
                                   int p, int q) {
    EdgeList h = m_h, b = m_b;
    normalize(h);
    normalize(b);
    if (!std::includes(h.begin(), h.end(), b.begin(), b.end()))
        throw DomainError("select_q_split: M_B is not a subset of M_H");
    int q1 = std::min(q, std::max(0, int(h.size()) - int(b.size()) -
                                         std::max(p, q)));
    return {q1, q - q1};
}

std::vector<EdgePair> find_q1_pairs(const Graph& g, const EdgeList& m_h,
                                    const EdgeList& m_b, int q1) {
    if (q1 <= 0) throw DomainError("find_q1_pairs: q1 must be positive");
    EdgeList b = m_b;
    normalize(b);
    EdgeList diff;
    for (const Edge& e : m_h)
        if (!in_sorted(b, e)) diff.push_back(e);
    normalize(diff);

    Subgraph host = edge_induced(g, diff);
    auto [count, pairs] = max_edge_disjoint_pairs(host.graph);
    if (count < q1)
        throw InternalConsistencyError(
            "find_q1_pairs: only " + std::to_string(count) + " of " +
            std::to_string(q1) + " crossing pairs available");
    std::vector<EdgePair> out;
    for (int i = 0; i < q1; ++i)
        out.emplace_back(to_parent_edge(pairs[i].e1, host.to_parent),
                         to_parent_edge(pairs[i].e2, host.to_parent));
    return out;
}

namespace {

// q2 edge-disjoint pairs {x w*1, x' w*2} on one side, from the side's
// w-star edges minus B.
std::vector<std::array<int, 2>> star_side_pairs(const Graph& g,
                                                const std::vector<int>& side,
                                                const EdgeList& b_sorted,
                                                int ws1, int ws2, int q2) {
    EdgeList avail;
    for (int x : side) {
        if (g.has_edge(x, ws1) && !in_sorted(b_sorted, Edge(x, ws1)))
            avail.emplace_back(x, ws1);
        if (g.has_edge(x, ws2) && !in_sorted(b_sorted, Edge(x, ws2)))
            avail.emplace_back(x, ws2);
    }
    normalize(avail);
    Subgraph host = edge_induced(g, avail);
    auto [count, pairs] = max_edge_disjoint_pairs(host.graph);
    if (count < q2)
        throw InternalConsistencyError("find_w_stars: side pair shortfall");

    std::vector<std::array<int, 2>> ends;  // {endpoint at w*1, at w*2}
    for (int i = 0; i < q2; ++i) {
        Edge e1 = to_parent_edge(pairs[i].e1, host.to_parent);
        Edge e2 = to_parent_edge(pairs[i].e2, host.to_parent);
        if (e1.u == ws2 || e1.v == ws2) std::swap(e1, e2);
        int at1 = (e1.u == ws1) ? e1.v : e1.u;
        int at2 = (e2.u == ws2) ? e2.v : e2.u;
        if (!(e1.u == ws1 || e1.v == ws1) || !(e2.u == ws2 || e2.v == ws2))
            throw InternalConsistencyError("find_w_stars: pair misses a w-star");
        ends.push_back({at1, at2});
    }
    return ends;
}

}  // namespace

WStarSelection find_w_stars(const Graph& g, const SeparationStructure& sep,
                            const BridgeSystem& bridge, int q2) {
    if (q2 <= 0) throw DomainError("find_w_stars: q2 must be positive");
    int n = g.order();
    VertexSet s1 = VertexSet::of(n, sep.g1), s2 = VertexSet::of(n, sep.g2);

    WStarSelection sel;
    for (int w : sep.w) {
        if (g.neighbors(w).intersection_size(s1) < q2 + 1) continue;
        if (g.neighbors(w).intersection_size(s2) < q2 + 1) continue;
        if (sel.w_star1 < 0)
            sel.w_star1 = w;
        else if (sel.w_star2 < 0) {
            sel.w_star2 = w;
            break;
        }
    }
    if (sel.w_star2 < 0)
        throw BoundViolationError(
            "find_w_stars: fewer than two cut vertices with " +
            std::to_string(q2 + 1) + " neighbors on each side");

    EdgeList b = bridge.b_edges;
    normalize(b);
    auto side1 = star_side_pairs(g, sep.g1, b, sel.w_star1, sel.w_star2, q2);
    auto side2 = star_side_pairs(g, sep.g2, b, sel.w_star1, sel.w_star2, q2);
    for (int i = 0; i < q2; ++i)
        sel.ends.push_back({side1[i][0], side1[i][1], side2[i][0], side2[i][1]});
    return sel;
}

namespace {

std::vector<VertexSequence> side_paths_for(
    const Graph& host, const std::vector<int>& side_vertices,
    const std::vector<int>& w_part, const EndpointRequest& req,
    const std::string& label) {
    int n = host.order();
    std::vector<int> all = side_vertices;
    all.insert(all.end(), w_part.begin(), w_part.end());
    VertexSet members = VertexSet::of(n, all);
    Subgraph sub = induced_subgraph(host, members);

    std::vector<int> inv(n, -1);
    for (size_t i = 0; i < sub.to_parent.size(); ++i) inv[sub.to_parent[i]] = int(i);

    VertexSet v1(sub.graph.order()), v2(sub.graph.order());
    for (int v : side_vertices) v1.insert(inv[v]);
    for (int v : w_part) v2.insert(inv[v]);
    if (!lemma_h_applicable(sub.graph, v1, v2, int(req.size())))
        throw BoundViolationError("build_side_paths: degree bound fails on " +
                                  label);

    EndpointRequest sub_req;
    for (auto [u, v] : req) sub_req.emplace_back(inv[u], inv[v]);
    std::vector<VertexSequence> paths = edge_disjoint_ham_paths(sub.graph, sub_req);
    for (auto& p : paths) p = map_to_parent(p, sub.to_parent);
    return paths;
}

}  // namespace

SidePaths build_side_paths(const Graph& g, const SeparationStructure& sep,
                           const BridgeSystem& bridge,
                           const CrossingBudget& budget, int phase,
                           const EdgeList& exclude) {
    Graph host = remove_edges(g, bridge.b_edges);
    if (phase == 1)
        host = remove_edges(host, budget.q2_edges());
    else
        host = remove_edges(host, exclude);

    std::vector<int> w_part1, w_part2;
    EndpointRequest req1, req2;
    if (phase == 1) {
        w_part1 = bridge.w1;
        w_part2 = bridge.w2;
        for (const auto& [ua, ub, va, vb] : budget.q1_ends) {
            req1.emplace_back(ua, ub);
            req2.emplace_back(va, vb);
        }
    } else {
        // W'' = W minus the w-stars, re-assigned by heavier side in the
        // phase-two host (phase one consumed some of their side edges).
        int n = g.order();
        VertexSet s1 = VertexSet::of(n, sep.g1), s2 = VertexSet::of(n, sep.g2);
        for (int w : sep.w) {
            if (w == budget.w_star1 || w == budget.w_star2) continue;
            if (host.neighbors(w).intersection_size(s1) >=
                host.neighbors(w).intersection_size(s2))
                w_part1.push_back(w);
            else
                w_part2.push_back(w);
        }
        for (const auto& [uo, ue, vo, ve] : budget.q2_ends) {
            req1.emplace_back(uo, ue);
            req2.emplace_back(vo, ve);
        }
    }

    SidePaths out;
    out.side1 = side_paths_for(host, sep.g1, w_part1, req1,
                               "side 1, phase " + std::to_string(phase));
    out.side2 = side_paths_for(host, sep.g2, w_part2, req2,
                               "side 2, phase " + std::to_string(phase));
    return out;
}

namespace {

VertexSequence oriented(const VertexSequence& p, int from, int to) {
    if (p.front() == from && p.back() == to) return p;
    if (p.front() == to && p.back() == from)
        return VertexSequence(p.rbegin(), p.rend());
    throw InternalConsistencyError("assemble_cycles: endpoint mismatch");
}

void check_coverage(const VertexSequence& cycle, int n) {
    if (int(cycle.size()) != n)
        throw InternalConsistencyError("assemble_cycles: cycle misses vertices");
    VertexSet seen(n);
    for (int v : cycle) {
        if (seen.contains(v))
            throw InternalConsistencyError("assemble_cycles: repeated vertex");
        seen.insert(v);
    }
}

}  // namespace

std::vector<VertexSequence> assemble_cycles(const SidePaths& side_paths,
                                            const CrossingBudget& budget,
                                            int phase, int n) {
    const auto& ends = (phase == 1) ? budget.q1_ends : budget.q2_ends;
    if (side_paths.side1.size() != ends.size() ||
        side_paths.side2.size() != ends.size())
        throw InternalConsistencyError("assemble_cycles: path/connector count");

    std::vector<VertexSequence> cycles;
    for (size_t j = 0; j < ends.size(); ++j) {
        const auto& [a, b, c, d] = ends[j];
        VertexSequence p1 = oriented(side_paths.side1[j], a, b);
        VertexSequence p2 = oriented(side_paths.side2[j], c, d);
        VertexSequence cycle = p1;
        if (phase == 1) {
            // ... ua .. ub | vb .. va ... closed by va-ua.
            cycle.insert(cycle.end(), p2.rbegin(), p2.rend());
        } else {
            // ... u_odd .. u_even, w*2, v_even .. v_odd, w*1, (u_odd).
            cycle.push_back(budget.w_star2);
            cycle.insert(cycle.end(), p2.rbegin(), p2.rend());
            cycle.push_back(budget.w_star1);
        }
        check_coverage(cycle, n);
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

namespace {

void log(PreserveCertificate& cert, const std::string& line) {
    cert.stage_log.push_back(line);
}

void warn(PreserveCertificate& cert, const std::string& line) {
    cert.bounds_ok = false;
    cert.stage_log.push_back("warning: " + line);
}

// The full repair machinery: q new edge-disjoint Hamiltonian cycles of G
// avoiding the bridge of G' = G - h_edges. In exact mode G' = G, every
// bridge path has order 3 and the final connectivity must not grow.
std::vector<VertexSequence> run_repair(const Graph& g, const EdgeList& h_edges,
                                       int k, int p, int q, bool exact,
                                       const PreserveOptions& opts,
                                       PreserveCertificate& cert) {
    int n = g.order();
    Graph gp = remove_edges(g, h_edges);
    VertexCut vc = min_vertex_cut(gp);
    int kp = int(vc.cut.size());
    log(cert, "repair: working-graph cut size " + std::to_string(kp));
    // kp < k when a connectivity drop forced the repair; kp >= k happens when
    // the caller ran out of extraction budget instead. Both shapes run the
    // same machinery on the working graph's own cut.
    if (!exact && kp >= k)
        log(cert, "repair: working graph still k-connected (extraction stall)");

    VertexSet wset = VertexSet::of(n, vc.cut);
    VertexSet rest = VertexSet::full(n);
    rest.subtract(wset);
    Subgraph away = induced_subgraph(gp, rest);
    auto comps = connected_components(away.graph);
    if (comps.size() != 2)
        throw BoundViolationError("repair: G' - W has " +
                                  std::to_string(comps.size()) +
                                  " components, not 2");
    std::vector<int> c0 = map_to_parent(comps[0], away.to_parent);
    std::vector<int> c1 = map_to_parent(comps[1], away.to_parent);
    if (c0.size() > c1.size()) std::swap(c0, c1);

    SeparationStructure sep{vc.cut, c0, c1};
    std::sort(sep.w.begin(), sep.w.end());
    int n1 = int(sep.g1.size()), n2 = int(sep.g2.size());
    if (2 * n1 < n - 2 * kp - 2 * p + 2 || 2 * n1 > n - kp ||
        2 * n2 < n - kp || 2 * n2 > n + 2 * p - 2)
        warn(cert, "separation window violated: |G1|=" + std::to_string(n1) +
                       ", |G2|=" + std::to_string(n2));
    log(cert, "separation: |W|=" + std::to_string(kp) + " |G1|=" +
                  std::to_string(n1) + " |G2|=" + std::to_string(n2));

    VertexSet s1 = VertexSet::of(n, sep.g1), s2 = VertexSet::of(n, sep.g2);
    BridgeSystem bridge;
    bridge.paths = covering_bridge_flow(g, s1, s2, wset, k, !exact);
    bridge.b_edges = bridge.paths.all_edges();
    for (const auto& path : bridge.paths.paths) {
        if (path.size() == 2)
            bridge.m_b.emplace_back(path[0], path[1]);
        else
            ++bridge.k_internal;
    }
    normalize(bridge.m_b);
    for (int w : sep.w) {
        if (g.neighbors(w).intersection_size(s1) >=
            g.neighbors(w).intersection_size(s2))
            bridge.w1.push_back(w);
        else
            bridge.w2.push_back(w);
    }
    if (2 * bridge.k_internal < kp)
        warn(cert, "bridge: fewer than ceil(k'/2) W-internal paths");
    log(cert, "bridge: " + std::to_string(bridge.paths.paths.size()) +
                  " paths, " + std::to_string(bridge.k_internal) +
                  " with internals, |M_B|=" + std::to_string(bridge.m_b.size()));

    CrossingBudget budget;
    budget.m_h = crossing_edges(g, s1, s2);
    normalize(budget.m_h);
    budget.m_b = bridge.m_b;
    budget.p = p;
    budget.q = q;
    if (opts.strong_delta) {
        budget.q1 = q;
        budget.q2 = 0;
        log(cert, "budget: strong-delta mode forces q1 = q");
    } else {
        std::tie(budget.q1, budget.q2) =
            select_q_split(budget.m_h, budget.m_b, p, q);
    }
    log(cert, "budget: |M_H|=" + std::to_string(budget.m_h.size()) + " q1=" +
                  std::to_string(budget.q1) + " q2=" + std::to_string(budget.q2));

    if (budget.q1 > 0) {
        budget.q1_pairs = find_q1_pairs(g, budget.m_h, budget.m_b, budget.q1);
        for (const EdgePair& pr : budget.q1_pairs) {
            int ua = s1.contains(pr.e1.u) ? pr.e1.u : pr.e1.v;
            int va = (ua == pr.e1.u) ? pr.e1.v : pr.e1.u;
            int ub = s1.contains(pr.e2.u) ? pr.e2.u : pr.e2.v;
            int vb = (ub == pr.e2.u) ? pr.e2.v : pr.e2.u;
            if (!s1.contains(ua) || !s2.contains(va) || !s1.contains(ub) ||
                !s2.contains(vb))
                throw InternalConsistencyError("repair: non-crossing Q1 pair");
            budget.q1_ends.push_back({ua, ub, va, vb});
        }
    }
    if (budget.q2 > 0) {
        WStarSelection ws = find_w_stars(g, sep, bridge, budget.q2);
        budget.w_star1 = ws.w_star1;
        budget.w_star2 = ws.w_star2;
        budget.q2_ends = ws.ends;
        log(cert, "w-stars: " + std::to_string(ws.w_star1) + ", " +
                      std::to_string(ws.w_star2));
    }

    std::vector<VertexSequence> cycles;
    SidePaths phase_one, phase_two;
    EdgeList used;
    if (budget.q1 > 0) {
        phase_one = build_side_paths(g, sep, bridge, budget, 1);
        auto c1s = assemble_cycles(phase_one, budget, 1, n);
        for (const auto& c : c1s) {
            EdgeList es = cycle_edge_list(c);
            used.insert(used.end(), es.begin(), es.end());
        }
        cycles.insert(cycles.end(), c1s.begin(), c1s.end());
        log(cert, "phase one: " + std::to_string(c1s.size()) + " cycles");
    }
    if (budget.q2 > 0) {
        normalize(used);
        phase_two = build_side_paths(g, sep, bridge, budget, 2, used);
        auto c2s = assemble_cycles(phase_two, budget, 2, n);
        cycles.insert(cycles.end(), c2s.begin(), c2s.end());
        log(cert, "phase two: " + std::to_string(c2s.size()) + " cycles");
    }

    cert.separation = std::move(sep);
    cert.budget = std::move(budget);
    cert.phase_one = std::move(phase_one);
    cert.phase_two = std::move(phase_two);
    cert.bridge = bridge.b_edges;
    cert.cut = cert.separation.w;
    cert.bridge_system = std::move(bridge);
    cert.repaired = true;
    return cycles;
}

// Edge-disjointness, bridge retention, cut-vertex degree reserve, and the
// final connectivity value. Failures at valid bounds are implementation
// bugs; below-bound inputs degrade to BoundViolationError.
void finalize(const Graph& g, PreserveCertificate& cert, int k, bool exact) {
    Graph remainder = g;
    for (const auto& cycle : cert.cycles) {
        for (const Edge& e : cycle_edge_list(cycle)) {
            if (!remainder.has_edge(e))
                throw InternalConsistencyError(
                    "finalize: cycle edge missing or reused");
            remainder.remove_edge(e.u, e.v);
        }
    }

    if (cert.repaired) {
        for (const Edge& e : cert.bridge)
            if (!remainder.has_edge(e))
                throw InternalConsistencyError("finalize: bridge edge consumed");
        int n = g.order();
        VertexSet sides = VertexSet::of(n, cert.separation.g1);
        sides |= VertexSet::of(n, cert.separation.g2);
        for (int w : cert.cut)
            if (remainder.neighbors(w).intersection_size(sides) < k) {
                if (cert.bounds_ok)
                    throw InternalConsistencyError(
                        "finalize: cut vertex lost its degree reserve");
                throw BoundViolationError(
                    "finalize: cut vertex degree reserve fails (input below "
                    "the order bound)");
            }
    }

    cert.kappa_after = kappa(remainder);
    log(cert, "remainder connectivity " + std::to_string(cert.kappa_after));
    bool ok = exact ? cert.kappa_after == k : cert.kappa_after >= k;
    if (!ok) {
        if (cert.bounds_ok)
            throw InternalConsistencyError("finalize: remainder connectivity " +
                                           std::to_string(cert.kappa_after) +
                                           ", wanted " + std::to_string(k));
        throw BoundViolationError(
            "finalize: connectivity target missed (input below the order "
            "bound)");
    }
}

// Budgeted enumeration of Hamiltonian cycles until one preserves
// k-connectivity; the honest best-effort route for inputs below the order
// bound, where the constructive machinery carries no guarantee.
bool preserving_cycle_search(const Graph& g, std::vector<int>& path,
                             VertexSet& used, int k, long long& budget,
                             VertexSequence& out) {
    int n = g.order();
    if (budget-- <= 0) return false;
    if (int(path.size()) == n) {
        if (!g.has_edge(path.back(), path.front())) return false;
        Graph remainder = remove_edges(g, cycle_edge_list(path));
        if (!is_k_connected(remainder, k)) return false;
        out = path;
        return true;
    }
    bool found = false;
    g.neighbors(path.back()).for_each([&](int v) {
        if (found || budget <= 0 || used.contains(v)) return;
        used.insert(v);
        path.push_back(v);
        if (preserving_cycle_search(g, path, used, k, budget, out)) {
            found = true;
            return;
        }
        path.pop_back();
        used.erase(v);
    });
    return found;
}

VertexSequence small_fallback_cycle(const Graph& g, int k, long long budget) {
    std::vector<int> path{0};
    VertexSet used(g.order());
    used.insert(0);
    VertexSequence out;
    if (!preserving_cycle_search(g, path, used, k, budget, out))
        throw BoundViolationError(
            "preserve: no preserving cycle found by exhaustive search "
            "(input below the order bound)");
    return out;
}

PreserveCertificate make_cert(const Graph& g, int k, int ell, bool exact) {
    PreserveCertificate cert;
    cert.input_hash = graph_hash(g);
    cert.n = g.order();
    cert.k = k;
    cert.ell = ell;
    cert.exact = exact;
    return cert;
}

}  // namespace

PreserveCertificate preserve_one(const Graph& g, int k,
                                 const PreserveOptions& opts) {
    int n = g.order();
    if (k < 2) throw DomainError("preserve_one: need k >= 2");
    if (2 * g.min_degree() < n)
        throw DomainError("preserve_one: minimum degree below n/2");
    PreserveCertificate cert = make_cert(g, k, 1, false);
    cert.kappa_before = kappa(g);
    if (cert.kappa_before < k)
        throw DomainError("preserve_one: graph is not k-connected");
    if (n < 6 * k + 12 - 2 * ceil_frac(k - 2, k))
        warn(cert, "order below the k-connected bound; guarantees void");

    VertexSequence h = ham_cycle_dirac(g);
    Graph remainder = remove_edges(g, cycle_edge_list(h));
    if (is_k_connected(remainder, k)) {
        log(cert, "direct: extracted cycle keeps k-connectivity");
        cert.cycles = {h};
    } else {
        log(cert, "direct extraction drops connectivity; repairing");
        try {
            cert.cycles =
                run_repair(g, cycle_edge_list(h), k, 2, 1, false, opts, cert);
        } catch (const BoundViolationError& e) {
            if (cert.bounds_ok) throw;
            log(cert, std::string("repair infeasible below bounds: ") + e.what());
            cert.cycles = {small_fallback_cycle(g, k, opts.extraction_budget)};
            cert.repaired = false;
            cert.bridge.clear();
            cert.cut.clear();
            log(cert, "fallback: exhaustive preserving-cycle search succeeded");
        }
    }
    finalize(g, cert, k, false);
    return cert;
}

PreserveCertificate preserve_many(const Graph& g, int k, int ell,
                                  const PreserveOptions& opts) {
    if (ell == 1) return preserve_one(g, k, opts);
    int n = g.order();
    if (k < 2 || ell < 1) throw DomainError("preserve_many: need k >= 2, ell >= 1");
    if (2 * g.min_degree() < n)
        throw DomainError("preserve_many: minimum degree below n/2");
    PreserveCertificate cert = make_cert(g, k, ell, false);
    cert.kappa_before = kappa(g);
    if (cert.kappa_before < k)
        throw DomainError("preserve_many: graph is not k-connected");
    int bound = std::max({k * ell + std::max(k * ell, 6 * ell + 2) + 3 * k +
                              2 * ell - 6,
                          6 * k + 20 * ell - 8 - 2 * ceil_frac(k - 2, k),
                          ceil_frac(224 * ell, 5) - 10});
    if (n < bound)
        warn(cert, "order below the ell-cycle bound; guarantees void");

    std::vector<VertexSequence> cycles;
    Graph cur = g;
    bool extracted_all = true;
    for (int i = 0; i < ell; ++i) {
        VertexSequence h;
        try {
            h = ham_cycle_dirac(cur);
        } catch (const NotApplicableError&) {
            auto fallback = ham_cycle_backtracking(cur, opts.extraction_budget);
            if (!fallback) {
                // A partial union still has max degree <= 2*ell, which is all
                // the repair hypotheses need; hand over what we have.
                log(cert, "extraction: stalled at cycle " +
                              std::to_string(i + 1) + "; switching to repair");
                extracted_all = false;
                break;
            }
            h = *fallback;
            log(cert, "extraction: backtracking fallback for cycle " +
                          std::to_string(i + 1));
        }
        cur = remove_edges(cur, cycle_edge_list(h));
        cycles.push_back(std::move(h));
    }

    EdgeList h_union;
    for (const auto& c : cycles) {
        EdgeList es = cycle_edge_list(c);
        h_union.insert(h_union.end(), es.begin(), es.end());
    }
    normalize(h_union);
    if (extracted_all && is_k_connected(remove_edges(g, h_union), k)) {
        log(cert, "direct: extracted cycles keep k-connectivity");
        cert.cycles = std::move(cycles);
    } else {
        log(cert, "direct extraction drops connectivity; repairing");
        cert.cycles =
            run_repair(g, h_union, k, 2 * ell, ell, false, opts, cert);
    }
    finalize(g, cert, k, false);
    return cert;
}

PreserveCertificate preserve_exact(const Graph& g, int ell,
                                   const PreserveOptions& opts) {
    int n = g.order();
    if (ell < 1) throw DomainError("preserve_exact: need ell >= 1");
    if (2 * g.min_degree() < n)
        throw DomainError("preserve_exact: minimum degree below n/2");
    if (g.is_complete())
        throw DomainError("preserve_exact: complete graph has no cut to preserve");
    int k = kappa(g);
    if (k < 2) throw DomainError("preserve_exact: connectivity below 2");

    PreserveCertificate cert = make_cert(g, k, ell, true);
    cert.kappa_before = k;
    int bound = std::max(2 * k * ell + k - 2 * ell + 1,
                         6 * k + 8 * ell - 4 - 2 * ceil_frac(k - 2, k));
    if (n < bound)
        warn(cert, "order below the exact-preservation bound; guarantees void");

    cert.cycles = run_repair(g, {}, k, 0, ell, true, opts, cert);
    finalize(g, cert, k, true);
    return cert;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

nlohmann::json edges_json(const EdgeList& es) {
    nlohmann::json a = nlohmann::json::array();
    for (const Edge& e : es) a.push_back({e.u, e.v});
    return a;
}

EdgeList edges_from_json(const nlohmann::json& a) {
    EdgeList out;
    for (const auto& e : a) out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return out;
}

}  // namespace

nlohmann::json PreserveCertificate::to_json() const {
    nlohmann::json j;
    j["schema"] = "preserve-cert/1";
    j["input_hash"] = input_hash;
    j["n"] = n;
    j["k"] = k;
    j["ell"] = ell;
    j["exact"] = exact;
    j["cycles"] = cycles;
    j["bridge"] = edges_json(bridge);
    j["cut"] = cut;
    j["kappa_before"] = kappa_before;
    j["kappa_after"] = kappa_after;
    j["stage_log"] = stage_log;
    if (repaired) {
        nlohmann::json s;
        s["g1"] = separation.g1;
        s["g2"] = separation.g2;
        s["bridge_paths"] = bridge_system.paths.paths;
        s["m_h"] = edges_json(budget.m_h);
        s["m_b"] = edges_json(budget.m_b);
        s["q1"] = budget.q1;
        s["q2"] = budget.q2;
        s["q1_ends"] = budget.q1_ends;
        s["q2_ends"] = budget.q2_ends;
        s["w_stars"] = {budget.w_star1, budget.w_star2};
        s["phase_one"] = {{"side1", phase_one.side1}, {"side2", phase_one.side2}};
        s["phase_two"] = {{"side1", phase_two.side1}, {"side2", phase_two.side2}};
        j["stages"] = std::move(s);
    }
    return j;
}

PreserveCertificate PreserveCertificate::from_json(const nlohmann::json& j) {
    if (j.at("schema").get<std::string>() != "preserve-cert/1")
        throw DomainError("certificate: unknown schema");
    PreserveCertificate c;
    c.input_hash = j.at("input_hash").get<uint64_t>();
    c.n = j.at("n").get<int>();
    c.k = j.at("k").get<int>();
    c.ell = j.at("ell").get<int>();
    c.exact = j.at("exact").get<bool>();
    c.cycles = j.at("cycles").get<std::vector<VertexSequence>>();
    c.bridge = edges_from_json(j.at("bridge"));
    c.cut = j.at("cut").get<std::vector<int>>();
    c.kappa_before = j.at("kappa_before").get<int>();
    c.kappa_after = j.at("kappa_after").get<int>();
    c.stage_log = j.at("stage_log").get<std::vector<std::string>>();
    c.repaired = j.contains("stages");
    return c;
}

}  // namespace hp
