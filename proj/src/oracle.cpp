#include "hampreserve/oracle.hpp"

#include <algorithm>
#include <climits>

#include "hampreserve/connectivity.hpp"

namespace hp {

void VerificationReport::add(const std::string& name, bool ok,
                             const std::string& detail) {
    checks.push_back({name, ok, detail});
    if (!ok) pass = false;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["pass"] = pass;
    j["checks"] = nlohmann::json::array();
    for (const Check& c : checks)
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return j;
}

VerificationReport verify_certificate(const Graph& g,
                                      const PreserveCertificate& cert, int k,
                                      bool exact) {
    if (graph_hash(g) != cert.input_hash)
        throw StaleCertificateError("certificate does not reference this graph");

    VerificationReport rep;
    int n = g.order();
    rep.add("cycle-count", int(cert.cycles.size()) == cert.ell,
            std::to_string(cert.cycles.size()) + " cycles for ell=" +
                std::to_string(cert.ell));

    for (size_t i = 0; i < cert.cycles.size(); ++i) {
        const auto& c = cert.cycles[i];
        std::string name = "hamiltonian-" + std::to_string(i);
        if (int(c.size()) != n) {
            rep.add(name, false, "length " + std::to_string(c.size()));
            continue;
        }
        VertexSet seen(n);
        bool ok = true;
        std::string detail;
        for (int v : c) {
            if (v < 0 || v >= n || seen.contains(v)) {
                ok = false;
                detail = "bad or repeated vertex " + std::to_string(v);
                break;
            }
            seen.insert(v);
        }
        for (size_t j = 0; ok && j < c.size(); ++j) {
            int u = c[j], v = c[(j + 1) % c.size()];
            if (!g.has_edge(u, v)) {
                ok = false;
                detail = "missing edge " + std::to_string(u) + "-" +
                         std::to_string(v);
            }
        }
        rep.add(name, ok, detail);
    }

    EdgeList all;
    for (const auto& c : cert.cycles)
        for (size_t j = 0; j < c.size(); ++j)
            all.emplace_back(c[j], c[(j + 1) % c.size()]);
    std::sort(all.begin(), all.end());
    bool disjoint = true;
    std::string dup;
    for (size_t i = 0; i + 1 < all.size(); ++i)
        if (all[i] == all[i + 1]) {
            disjoint = false;
            dup = "edge " + std::to_string(all[i].u) + "-" +
                  std::to_string(all[i].v) + " reused";
            break;
        }
    rep.add("edge-disjoint", disjoint, dup);

    if (rep.pass) {
        Graph remainder = g;
        for (const Edge& e : all) remainder.remove_edge(e.u, e.v);
        int ka = kappa(remainder);
        rep.add("kappa-after-recorded", ka == cert.kappa_after,
                "recomputed " + std::to_string(ka) + ", certificate says " +
                    std::to_string(cert.kappa_after));
        bool target = exact ? ka == k : ka >= k;
        rep.add(exact ? "kappa-exact" : "kappa-at-least", target,
                "remainder connectivity " + std::to_string(ka) + " vs k=" +
                    std::to_string(k));
    } else {
        rep.add("kappa", false, "skipped: cycles invalid");
    }
    return rep;
}

namespace {

void ham_enum_rec(const Graph& g, std::vector<int>& path, VertexSet& used,
                  long long limit, std::vector<VertexSequence>& out) {
    int n = g.order();
    if ((long long)out.size() >= limit) return;
    if (int(path.size()) == n) {
        // Fixed start 0 kills rotations; path[1] < path[n-1] kills the
        // reflection.
        if (g.has_edge(path.back(), path.front()) && path[1] < path.back())
            out.push_back(path);
        return;
    }
    g.neighbors(path.back()).for_each([&](int v) {
        if (used.contains(v) || (long long)out.size() >= limit) return;
        used.insert(v);
        path.push_back(v);
        ham_enum_rec(g, path, used, limit, out);
        path.pop_back();
        used.erase(v);
    });
}

}  // namespace

std::vector<VertexSequence> brute_ham_enum(const Graph& g, long long limit) {
    if (g.order() > 14) throw SizeError("brute_ham_enum: n > 14");
    if (g.order() < 3) return {};
    std::vector<int> path{0};
    VertexSet used(g.order());
    used.insert(0);
    std::vector<VertexSequence> out;
    ham_enum_rec(g, path, used, limit, out);
    return out;
}

namespace {

int pairs_bb(uint32_t avail, const std::vector<uint32_t>& indep, int count,
             int& best) {
    if (count + __builtin_popcount(avail) / 2 <= best) return best;
    if (!avail) {
        best = std::max(best, count);
        return best;
    }
    int i = __builtin_ctz(avail);
    uint32_t rest = avail & ~(uint32_t(1) << i);
    pairs_bb(rest, indep, count, best);  // edge i stays unpaired
    uint32_t mates = indep[i] & rest;
    while (mates) {
        int j = __builtin_ctz(mates);
        mates &= mates - 1;
        pairs_bb(rest & ~(uint32_t(1) << j), indep, count + 1, best);
    }
    return best;
}

}  // namespace

int brute_max_pairs(const Graph& g) {
    EdgeList es = g.edges();
    int m = int(es.size());
    if (m > 24) throw SizeError("brute_max_pairs: more than 24 edges");
    if (m < 2) return 0;
    std::vector<uint32_t> indep(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && edges_independent(es[i], es[j]))
                indep[i] |= uint32_t(1) << j;
    int best = 0;
    pairs_bb((uint32_t(1) << m) - 1, indep, 0, best);
    return best;
}

namespace {

bool preserving_rec(const Graph& g, std::vector<int>& path, VertexSet& used,
                    int k) {
    int n = g.order();
    if (int(path.size()) == n) {
        if (!g.has_edge(path.back(), path.front())) return false;
        Graph remainder = g;
        for (size_t j = 0; j < path.size(); ++j)
            remainder.remove_edge(path[j], path[(j + 1) % path.size()]);
        return is_k_connected(remainder, k);
    }
    bool found = false;
    g.neighbors(path.back()).for_each([&](int v) {
        if (found || used.contains(v)) return;
        used.insert(v);
        path.push_back(v);
        if (preserving_rec(g, path, used, k)) found = true;
        path.pop_back();
        used.erase(v);
    });
    return found;
}

}  // namespace

bool brute_preserving_exists(const Graph& g, int k) {
    if (g.order() > 12) throw SizeError("brute_preserving_exists: n > 12");
    if (g.order() < 3) return false;
    std::vector<int> path{0};
    VertexSet used(g.order());
    used.insert(0);
    return preserving_rec(g, path, used, k);
}

int brute_kappa(const Graph& g) {
    int n = g.order();
    if (n > 10) throw SizeError("brute_kappa: n > 10");
    if (n < 2) throw DomainError("brute_kappa: need n >= 2");
    if (g.is_complete()) return n - 1;
    for (int s = 0; s <= n - 2; ++s) {
        for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
            if (__builtin_popcount(mask) != s) continue;
            VertexSet keep(n);
            for (int v = 0; v < n; ++v)
                if (!(mask >> v & 1)) keep.insert(v);
            Subgraph sub = induced_subgraph(g, keep);
            if (sub.graph.order() >= 2 && !is_connected(sub.graph)) return s;
        }
    }
    throw InternalConsistencyError("brute_kappa: no cut in non-complete graph");
}

}  // namespace hp
