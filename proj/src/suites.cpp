#include "hampreserve/suites.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <mutex>
#include <set>
#include <thread>

#include "hampreserve/connectivity.hpp"
#include "hampreserve/edge_pairs.hpp"
#include "hampreserve/hamilton.hpp"
#include "hampreserve/instances.hpp"
#include "hampreserve/oracle.hpp"
#include "hampreserve/preserve.hpp"

namespace hp {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point from) {
    return std::chrono::duration<double>(Clock::now() - from).count();
}

int ceil_frac(int a, int b) { return (a + b - 1) / b; }

template <typename F>
void parallel_for(long long count, int jobs, F body) {
    if (jobs <= 1 || count <= 1) {
        for (long long i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<long long> next{0};
    auto worker = [&] {
        for (long long i = next++; i < count; i = next++) body(i);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

std::string percentiles(std::vector<double> times) {
    if (times.empty()) return "";
    std::sort(times.begin(), times.end());
    auto at = [&](double q) { return times[size_t(q * (times.size() - 1))]; };
    char buf[96];
    std::snprintf(buf, sizeof(buf), "t p50=%.3fs p90=%.3fs max=%.3fs", at(0.5),
                  at(0.9), times.back());
    return buf;
}

double median(std::vector<double> times) {
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

bool valid_full_decomposition(const Graph& g, const PairDecomposition& d) {
    if (int(d.size()) * 2 != g.size()) return false;
    EdgeList used;
    for (const EdgePair& p : d) {
        if (!edges_independent(p.e1, p.e2)) return false;
        if (!g.has_edge(p.e1) || !g.has_edge(p.e2)) return false;
        used.push_back(p.e1);
        used.push_back(p.e2);
    }
    std::sort(used.begin(), used.end());
    return std::adjacent_find(used.begin(), used.end()) == used.end();
}

bool valid_pair_witness(const Graph& g, const std::vector<EdgePair>& pairs,
                        int count) {
    if (int(pairs.size()) != count) return false;
    EdgeList used;
    for (const EdgePair& p : pairs) {
        if (!edges_independent(p.e1, p.e2)) return false;
        if (!g.has_edge(p.e1) || !g.has_edge(p.e2)) return false;
        used.push_back(p.e1);
        used.push_back(p.e2);
    }
    std::sort(used.begin(), used.end());
    return std::adjacent_find(used.begin(), used.end()) == used.end();
}

bool valid_ham_cycle(const Graph& g, const VertexSequence& c) {
    int n = g.order();
    if (int(c.size()) != n) return false;
    VertexSet seen(n);
    for (int v : c) {
        if (v < 0 || v >= n || seen.contains(v)) return false;
        seen.insert(v);
    }
    for (size_t i = 0; i < c.size(); ++i)
        if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
    return true;
}

bool valid_ham_path(const Graph& g, const VertexSequence& p, int u, int v) {
    int n = g.order();
    if (int(p.size()) != n || p.front() != u || p.back() != v) return false;
    VertexSet seen(n);
    for (int x : p) {
        if (x < 0 || x >= n || seen.contains(x)) return false;
        seen.insert(x);
    }
    for (size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1])) return false;
    return true;
}

// --------------------------------------------------------------- criterion 1

SuiteResult suite_thm6(int, uint64_t, int jobs) {
    SuiteResult r;
    r.name = "thm6-exhaustive";
    EdgeList slots;
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v) slots.emplace_back(u, v);

    std::atomic<long long> checked{0}, failures{0};
    // All 21-choose-m edge subsets for m = 2..8, split by m across jobs.
    parallel_for(7, jobs, [&](long long mi) {
        int m = int(mi) + 2;
        std::vector<int> idx(m);
        for (int i = 0; i < m; ++i) idx[i] = i;
        while (true) {
            EdgeList edges;
            for (int i : idx) edges.push_back(slots[i]);
            Graph g(7, edges);
            bool cond = can_decompose(g);
            bool built = false;
            try {
                PairDecomposition d = decompose_into_pairs(g);
                built = valid_full_decomposition(g, d);
            } catch (const DomainError&) {
                built = false;
            }
            ++checked;
            if (built != cond) ++failures;

            int i = m - 1;
            while (i >= 0 && idx[i] == 21 - m + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
        }
    });
    r.checked = checked;
    r.failures = failures;
    r.pass = failures == 0;
    return r;
}

// --------------------------------------------------------------- criterion 2

SuiteResult suite_thm7(int trials, uint64_t seed, int jobs) {
    SuiteResult r;
    r.name = "thm7-oracle";
    if (trials <= 0) trials = 1000;
    std::atomic<long long> failures{0};
    parallel_for(trials, jobs, [&](long long t) {
        Rng rng(seed * 1000003 + t);
        Graph g(0);
        while (true) {
            int n = 3 + int(rng.below(6));
            int denom = 2 + int(rng.below(8));
            Graph cand(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng.below(10) < uint64_t(denom)) cand.add_edge(u, v);
            // The brute-force oracle is capped at 24 edges; denser draws are
            // resampled rather than silently truncated.
            if (cand.size() > 24) continue;
            try {
                g = cand;
                break;
            } catch (...) {
            }
        }
        try {
            auto [count, pairs] = max_edge_disjoint_pairs(g);
            if (count != brute_max_pairs(g) || !valid_pair_witness(g, pairs, count))
                ++failures;
        } catch (const ExceptionalInputError&) {
            // excluded family; the formula does not apply
        }
    });
    r.checked = trials;
    r.failures = failures;
    r.pass = failures == 0;
    return r;
}

// --------------------------------------------------------------- criterion 3

SuiteResult suite_dirac(int trials, uint64_t seed, int jobs) {
    SuiteResult r;
    r.name = "dirac-extraction";
    if (trials <= 0) trials = 500;
    std::atomic<long long> failures{0};
    std::vector<double> times(trials);
    parallel_for(trials, jobs, [&](long long t) {
        Rng rng(seed * 7777777 + t);
        int n = 10 + int(rng.below(191));
        Graph g = gen_dirac(n, rng.next(), int(rng.below(3)));
        auto t0 = Clock::now();
        VertexSequence c = ham_cycle_dirac(g);
        times[t] = elapsed(t0);
        if (!valid_ham_cycle(g, c) || times[t] >= 1.0) ++failures;
    });
    r.checked = trials;
    r.failures = failures;
    r.detail = percentiles(times);
    r.pass = failures == 0;
    return r;
}

// --------------------------------------------------------------- criterion 4

SuiteResult suite_prop9(int trials, uint64_t seed, int jobs) {
    SuiteResult r;
    r.name = "prop9-paths";
    if (trials <= 0) trials = 200;
    std::atomic<long long> failures{0};
    parallel_for(trials, jobs, [&](long long t) {
        Rng rng(seed * 424243 + t);
        int ell = 1 + int(t % 3);
        int n = 20 + 2 * int(rng.below(41));
        Graph g = gen_dirac(n, rng.next(), 2 * ell);
        if (!lemma_h_applicable(g, VertexSet::full(n), VertexSet(n), ell)) {
            ++failures;
            return;
        }
        EndpointRequest req;
        for (int i = 0; i < ell; ++i) {
            int u = int(rng.below(n)), v;
            do {
                v = int(rng.below(n));
            } while (v == u);
            req.emplace_back(u, v);
        }
        auto paths = edge_disjoint_ham_paths(g, req);
        bool ok = int(paths.size()) == ell;
        EdgeList used;
        for (int i = 0; ok && i < ell; ++i) {
            if (!valid_ham_path(g, paths[i], req[i].first, req[i].second))
                ok = false;
            for (size_t j = 0; j + 1 < paths[i].size(); ++j)
                used.emplace_back(paths[i][j], paths[i][j + 1]);
        }
        std::sort(used.begin(), used.end());
        if (std::adjacent_find(used.begin(), used.end()) != used.end()) ok = false;
        if (!ok) ++failures;
    });
    r.checked = trials;
    r.failures = failures;
    r.pass = failures == 0;
    return r;
}

// --------------------------------------------------------------- criterion 5

SuiteResult suite_preserve_one(int trials, uint64_t seed, int jobs) {
    SuiteResult r;
    r.name = "preserve-k2..5";
    if (trials <= 0) trials = 100;
    std::atomic<long long> failures{0};
    std::mutex mu;
    std::vector<double> all_times;
    bool timing_ok = true;
    for (int k = 2; k <= 5; ++k) {
        std::vector<double> times(trials);
        parallel_for(trials, jobs, [&](long long t) {
            Rng rng(seed * 900001 + k * 1009 + t);
            int lo = std::max(6 * k + 12 - 2 * ceil_frac(k - 2, k), 4 * k + 8);
            int n = lo + 2 * int(rng.below(uint64_t((200 - lo) / 2 + 1)));
            Graph g(0);
            switch (t % 3) {
                case 0:
                    g = gen_dirac(n, rng.next(), ceil_frac(k - 2, 2));
                    break;
                case 1:
                    g = gen_barbell_dirac(n, k, rng.next(), false);
                    break;
                default:
                    g = gen_barbell_dirac(n, k, rng.next(), true);
            }
            auto t0 = Clock::now();
            bool ok = false;
            try {
                PreserveCertificate cert = preserve_one(g, k);
                ok = verify_certificate(g, cert, k, false).pass;
            } catch (const std::exception&) {
                ok = false;
            }
            times[t] = elapsed(t0);
            if (!ok) ++failures;
        });
        std::lock_guard<std::mutex> lk(mu);
        if (median(times) >= 5.0) timing_ok = false;
        all_times.insert(all_times.end(), times.begin(), times.end());
    }
    r.checked = 4LL * trials;
    r.failures = failures;
    r.detail = percentiles(all_times);
    r.pass = failures == 0 && timing_ok;
    if (!timing_ok) r.detail += " (median over 5s)";
    return r;
}

// --------------------------------------------------------------- criterion 6

SuiteResult suite_exact(int trials, uint64_t seed, int jobs) {
    SuiteResult r;
    r.name = "thm14-exact";
    if (trials <= 0) trials = 50;
    std::atomic<long long> failures{0};
    long long checked = 0;
    for (int k = 2; k <= 3; ++k)
        for (int ell = 1; ell <= 3; ++ell) {
            int bound = std::max(2 * k * ell + k - 2 * ell + 1,
                                 6 * k + 8 * ell - 4 - 2 * ceil_frac(k - 2, k));
            int n = std::max(bound, 4 * k + 8);
            if (n % 2) ++n;
            parallel_for(trials, jobs, [&](long long t) {
                Rng rng(seed * 31337 + k * 101 + ell * 17 + t);
                Graph g = gen_barbell_dirac(n, k, rng.next(), t % 2 == 1);
                bool ok = false;
                try {
                    PreserveCertificate cert = preserve_exact(g, ell);
                    ok = verify_certificate(g, cert, k, true).pass &&
                         cert.kappa_after == cert.kappa_before;
                } catch (const std::exception&) {
                    ok = false;
                }
                if (!ok) ++failures;
            });
            checked += trials;
        }
    r.checked = checked;
    r.failures = failures;
    r.pass = failures == 0;
    return r;
}

// --------------------------------------------------------------- criterion 7

// Canonical 21-bit adjacency mask under vertex permutations of K7.
struct Canon7 {
    int eidx[7][7];
    std::vector<std::array<int, 7>> perms;

    Canon7() {
        int id = 0;
        for (int u = 0; u < 7; ++u)
            for (int v = u + 1; v < 7; ++v) {
                eidx[u][v] = eidx[v][u] = id;
                ++id;
            }
        std::array<int, 7> p{0, 1, 2, 3, 4, 5, 6};
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }

    uint32_t canon(uint32_t mask) const {
        uint32_t best = mask;
        for (const auto& p : perms) {
            uint32_t re = 0;
            uint32_t rest = mask;
            while (rest) {
                int e = __builtin_ctz(rest);
                rest &= rest - 1;
                int u = 0, v = 0;
                // invert eidx: linear scan is fine at this scale
                for (int a = 0, t = 0; a < 7; ++a)
                    for (int b = a + 1; b < 7; ++b, ++t)
                        if (t == e) {
                            u = a;
                            v = b;
                        }
                re |= uint32_t(1) << eidx[p[u]][p[v]];
            }
            best = std::min(best, re);
        }
        return best;
    }
};

Graph graph_from_mask(int n, uint32_t mask) {
    Graph g(n);
    int id = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++id)
            if (mask >> id & 1) g.add_edge(u, v);
    return g;
}

SuiteResult suite_n7(int, uint64_t, int jobs) {
    SuiteResult r;
    r.name = "n7-tightness";
    Canon7 canon;
    std::mutex mu;
    std::set<uint32_t> classes;
    // Dirac graphs of order 7 have minimum degree >= 4; collect isomorphism
    // class representatives first.
    parallel_for(64, jobs, [&](long long chunk) {
        std::set<uint32_t> local;
        uint32_t lo = uint32_t(chunk) << 15, hi = lo + (1u << 15);
        for (uint32_t mask = lo; mask < hi; ++mask) {
            int deg[7] = {0};
            uint32_t rest = mask;
            int id = 0;
            for (int u = 0; u < 7; ++u)
                for (int v = u + 1; v < 7; ++v, ++id)
                    if (rest >> id & 1) {
                        ++deg[u];
                        ++deg[v];
                    }
            bool dirac = true;
            for (int u = 0; u < 7; ++u)
                if (deg[u] < 4) dirac = false;
            if (!dirac) continue;
            local.insert(canon.canon(mask));
        }
        std::lock_guard<std::mutex> lk(mu);
        classes.insert(local.begin(), local.end());
    });

    // The tightness claim is scoped to connectivity exactly 2.  At order 7 a
    // Dirac graph has minimum degree >= 4, so kappa >= 2*delta - n + 2 = 3 and
    // the connectivity-2 case is vacuous; the scoping matters, because denser
    // order-7 classes without a 2-preserving cycle do exist.  Verify the
    // forced connectivity gap on every class and count the dense failures as
    // informational evidence for the scope.
    std::vector<uint32_t> reps(classes.begin(), classes.end());
    std::atomic<long long> checked{0}, failures{0}, dense_fail{0};
    parallel_for(int(reps.size()), jobs, [&](long long i) {
        Graph g = graph_from_mask(7, reps[i]);
        ++checked;
        int kap = kappa(g);
        if (kap < 2) {
            ++failures;  // Dirac graphs are Hamiltonian, hence 2-connected
        } else if (kap == 2) {
            if (!brute_preserving_exists(g, 2)) ++failures;
        } else if (!brute_preserving_exists(g, 2)) {
            ++dense_fail;
        }
    });

    // Order 6 sits below the bound: a failing connectivity-2 Dirac instance
    // must exist there, otherwise the bound would not be tight.
    bool found6 = false;
    uint32_t witness = 0;
    for (uint32_t mask = 0; mask < (1u << 15) && !found6; ++mask) {
        Graph g = graph_from_mask(6, mask);
        if (g.min_degree() < 3 || kappa(g) != 2) continue;
        if (!brute_preserving_exists(g, 2)) {
            found6 = true;
            witness = mask;
        }
    }
    if (!found6) ++failures;

    // Order 8 is the first order past the bound where connectivity-2 Dirac
    // graphs exist; enumerate all of them (degree floor 4, then a 2-cut
    // probe) and require a preserving cycle for each.
    std::atomic<long long> count8{0};
    parallel_for(256, jobs, [&](long long chunk) {
        uint64_t lo = uint64_t(chunk) << 20, hi = lo + (1ull << 20);
        for (uint64_t mask = lo; mask < hi; ++mask) {
            uint8_t adj[8] = {0};
            int id = 0;
            for (int u = 0; u < 8; ++u)
                for (int v = u + 1; v < 8; ++v, ++id)
                    if (mask >> id & 1) {
                        adj[u] |= uint8_t(1u << v);
                        adj[v] |= uint8_t(1u << u);
                    }
            bool dirac = true;
            for (int u = 0; u < 8 && dirac; ++u)
                if (std::popcount(unsigned(adj[u])) < 4) dirac = false;
            if (!dirac) continue;
            // delta >= 4 already forces kappa >= 2, so any 2-cut pins it
            bool has_two_cut = false;
            for (int a = 0; a < 8 && !has_two_cut; ++a)
                for (int b = a + 1; b < 8 && !has_two_cut; ++b) {
                    uint8_t alive = uint8_t(0xffu & ~(1u << a) & ~(1u << b));
                    uint8_t seen = uint8_t(alive & uint8_t(-alive));
                    for (;;) {
                        uint8_t grow = seen;
                        for (int v = 0; v < 8; ++v)
                            if (seen >> v & 1) grow |= adj[v] & alive;
                        if (grow == seen) break;
                        seen = grow;
                    }
                    if (seen != alive) has_two_cut = true;
                }
            if (!has_two_cut) continue;
            ++count8;
            ++checked;
            if (!brute_preserving_exists(graph_from_mask(8, uint32_t(mask)), 2))
                ++failures;
        }
    });

    r.checked = checked;
    r.failures = failures;
    r.detail = std::to_string(reps.size()) +
               " order-7 classes all have connectivity >= 3 (" +
               std::to_string(dense_fail) +
               " dense classes fail, hence the connectivity-2 scope); "
               "order-6 failing witness " +
               (found6 ? "mask " + std::to_string(witness) : "NOT FOUND") +
               "; " + std::to_string(count8.load()) +
               " order-8 connectivity-2 graphs all preserve";
    r.pass = failures == 0;
    return r;
}

// --------------------------------------------------------------- criterion 8

SuiteResult suite_ch(int, uint64_t, int) {
    SuiteResult r;
    r.name = "ch-tightness";
    const std::pair<int, int> cases[] = {{9, 2}, {10, 3}, {13, 4}};
    for (auto [n, k] : cases) {
        ++r.checked;
        try {
            Graph g = gen_ch_tightness(n, k);
            bool ok = g.min_degree() == (n + k - 3) / 2 && kappa(g) == k - 1;
            if (n <= 10) ok = ok && brute_kappa(g) == k - 1;
            if (!ok) ++r.failures;
        } catch (const std::exception&) {
            ++r.failures;
        }
    }
    r.pass = r.failures == 0;
    return r;
}

// --------------------------------------------------------------- criterion 9

SuiteResult suite_kappa(int trials, uint64_t seed, int jobs) {
    SuiteResult r;
    r.name = "kappa-oracle";
    if (trials <= 0) trials = 2000;
    std::atomic<long long> checked{0}, failures{0};

    // Full labeled catalog for n <= 6.
    for (int n = 2; n <= 6; ++n) {
        int slots = n * (n - 1) / 2;
        parallel_for(1u << slots, jobs, [&](long long mi) {
            Graph g = graph_from_mask(n, uint32_t(mi));
            ++checked;
            if (kappa(g) != brute_kappa(g)) ++failures;
        });
    }
    // Seeded samples at n in {7, 8}.
    parallel_for(trials, jobs, [&](long long t) {
        Rng rng(seed * 5550001 + t);
        int n = 7 + int(rng.below(2));
        int denom = 2 + int(rng.below(8));
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(10) < uint64_t(denom)) g.add_edge(u, v);
        ++checked;
        if (kappa(g) != brute_kappa(g)) ++failures;
    });
    r.checked = checked;
    r.failures = failures;
    r.pass = failures == 0;
    return r;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"thm6-exhaustive", "thm7-oracle",  "dirac-extraction",
            "prop9-paths",     "preserve-k2..5", "thm14-exact",
            "n7-tightness",    "ch-tightness", "kappa-oracle"};
}

SuiteResult run_suite(const std::string& name, int trials, uint64_t seed,
                      int jobs) {
    auto t0 = Clock::now();
    SuiteResult r;
    if (name == "thm6-exhaustive")
        r = suite_thm6(trials, seed, jobs);
    else if (name == "thm7-oracle")
        r = suite_thm7(trials, seed, jobs);
    else if (name == "dirac-extraction")
        r = suite_dirac(trials, seed, jobs);
    else if (name == "prop9-paths")
        r = suite_prop9(trials, seed, jobs);
    else if (name == "preserve-k2..5")
        r = suite_preserve_one(trials, seed, jobs);
    else if (name == "thm14-exact")
        r = suite_exact(trials, seed, jobs);
    else if (name == "n7-tightness")
        r = suite_n7(trials, seed, jobs);
    else if (name == "ch-tightness")
        r = suite_ch(trials, seed, jobs);
    else if (name == "kappa-oracle")
        r = suite_kappa(trials, seed, jobs);
    else
        throw DomainError("unknown suite: " + name);
    r.seconds = elapsed(t0);
    return r;
}

}  // namespace hp
