#include "hampreserve/instances.hpp"

#include "hampreserve/connectivity.hpp"

namespace hp {

Rng::Rng(uint64_t seed) : state_(seed ? seed : 0x9E3779B97F4A7C15ull) {}

uint64_t Rng::next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1Dull;
}

uint64_t Rng::below(uint64_t n) {
    uint64_t bound = UINT64_MAX - UINT64_MAX % n;
    uint64_t r;
    do {
        r = next();
    } while (r >= bound);
    return r % n;
}

std::string InstanceSpec::header() const {
    return "family=" + family + " n=" + std::to_string(n) + " k=" +
           std::to_string(k) + " ell=" + std::to_string(ell) + " seed=" +
           std::to_string(seed) + " surplus=" + std::to_string(surplus);
}

Graph gen_dirac(int n, uint64_t seed, int surplus) {
    if (n < 3) throw DomainError("gen_dirac: need n >= 3");
    int floor_deg = (n + 1) / 2 + surplus;
    if (surplus < 0 || floor_deg > n - 1)
        throw DomainError("gen_dirac: infeasible surplus");

    Graph g(n);
    EdgeList all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
            all.emplace_back(u, v);
        }
    Rng rng(seed);
    rng.shuffle(all);
    for (const Edge& e : all) {
        if (g.degree(e.u) <= floor_deg || g.degree(e.v) <= floor_deg) continue;
        if (rng.below(4) < 3) g.remove_edge(e.u, e.v);
    }
    if (g.min_degree() < floor_deg)
        throw InternalConsistencyError("gen_dirac: degree floor violated");
    return g;
}

namespace {

void add_clique(Graph& g, int from, int to) {
    for (int u = from; u < to; ++u)
        for (int v = u + 1; v < to; ++v) g.add_edge(u, v);
}

void join_to_all(Graph& g, int v) {
    for (int u = 0; u < g.order(); ++u)
        if (u != v) g.add_edge(u, v);
}

// Seeded thinning of side-internal edges; the floor ceil(n/2) keeps the
// Dirac property and the all-adjacent cut keeps kappa pinned.
void thin_sides(Graph& g, Rng& rng, int first_side_vertex) {
    int n = g.order();
    int floor_deg = (n + 1) / 2;
    EdgeList cand;
    for (const Edge& e : g.edges())
        if (e.u >= first_side_vertex && e.v >= first_side_vertex)
            cand.push_back(e);
    rng.shuffle(cand);
    for (const Edge& e : cand) {
        if (g.degree(e.u) <= floor_deg || g.degree(e.v) <= floor_deg) continue;
        if (rng.below(2) == 0) g.remove_edge(e.u, e.v);
    }
}

void validate_barbell(const Graph& g, int k) {
    int n = g.order();
    if (2 * g.min_degree() < n)
        throw InternalConsistencyError("gen_barbell_dirac: delta below n/2");
    if (kappa(g) != k)
        throw InternalConsistencyError("gen_barbell_dirac: kappa != k");
}

}  // namespace

Graph gen_barbell_dirac(int n, int k, uint64_t seed, bool crossing_rich) {
    if (k < 2) throw DomainError("gen_barbell_dirac: need k >= 2");
    if (2 * k >= n) throw DomainError("gen_barbell_dirac: k >= n/2");
    if (n < 4 * k + 8) throw DomainError("gen_barbell_dirac: need n >= 4k+8");

    Graph g(n);
    Rng rng(seed);
    if (!crossing_rich) {
        // Cut = {0..k-1}, adjacent to everything; sides are cliques with no
        // crossing edges, so every disconnecting set contains the whole cut.
        int s1 = (n - k) / 2;
        int side_start = k;
        int mid = k + s1;
        if (s1 - 1 + k < (n + 1) / 2)
            throw DomainError(
                "gen_barbell_dirac: side degree infeasible (use even n for "
                "k = 2, or even n-k)");
        add_clique(g, side_start, mid);
        add_clique(g, mid, n);
        for (int w = 0; w < k; ++w) join_to_all(g, w);
        thin_sides(g, rng, side_start);
    } else {
        // Cut = {0..k-2} plus a hub (k-1) that carries every extra crossing
        // edge: the hub is adjacent to both sides, so direct crossing pairs
        // appear once a cycle consumes its edges, yet kappa stays k.
        int hub = k - 1;
        int s2 = (n - k) / 2;
        int s1 = n - k - s2;
        int side_start = k;
        int mid = k + s1;
        if (s2 + k - 1 < (n + 1) / 2)
            throw DomainError(
                "gen_barbell_dirac: side degree infeasible (use even n for "
                "k = 2)");
        add_clique(g, side_start, mid);
        add_clique(g, mid, n);
        for (int w = 0; w < k - 1; ++w) join_to_all(g, w);
        join_to_all(g, hub);
        thin_sides(g, rng, side_start);
    }
    validate_barbell(g, k);
    return g;
}

Graph gen_ch_tightness(int n, int k) {
    if ((n + k) % 2 == 0)
        throw DomainError("gen_ch_tightness: n + k must be odd");
    if (k < 2 || n < k + 3) throw DomainError("gen_ch_tightness: need n >= k+3");
    int clique = (n + k - 1) / 2;  // each block, including the k-1 shared
    Graph g(n);
    add_clique(g, 0, clique);
    for (int w = 0; w < k - 1; ++w) join_to_all(g, w);
    add_clique(g, clique, n);

    if (g.min_degree() != (n + k - 3) / 2)
        throw InternalConsistencyError("gen_ch_tightness: wrong minimum degree");
    if (kappa(g) != k - 1)
        throw InternalConsistencyError("gen_ch_tightness: wrong connectivity");
    return g;
}

}  // namespace hp
