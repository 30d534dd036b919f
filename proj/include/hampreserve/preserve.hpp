#ifndef HAMPRESERVE_PRESERVE_HPP
#define HAMPRESERVE_PRESERVE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hampreserve/connectivity.hpp"
#include "hampreserve/edge_pairs.hpp"
#include "hampreserve/graph.hpp"
#include "hampreserve/hamilton.hpp"

namespace hp {

/// Minimum cut W of the working graph plus the two components of G' - W,
/// with |G1| <= |G2|.
struct SeparationStructure {
    std::vector<int> w;
    std::vector<int> g1, g2;
};

/// The k vertex-disjoint G1-G2 paths whose internals exhaust W. Their edges
/// (B) are withheld from every output cycle so the remainder keeps them.
struct BridgeSystem {
    PathSystem paths;
    EdgeList b_edges;       // union of all path edges
    EdgeList m_b;           // edges of the order-2 (direct crossing) paths
    int k_internal = 0;     // paths with at least one internal vertex
    std::vector<int> w1, w2;  // W split by heavier neighbor side (G1 vs G2)
};

/// How the q required cycles split between crossing-edge-pair closures (q1)
/// and order-3 closures through two cut vertices (q2), with the chosen
/// connector material.
struct CrossingBudget {
    EdgeList m_h, m_b;
    int p = 0, q = 0, q1 = 0, q2 = 0;
    std::vector<EdgePair> q1_pairs;
    // Per q1-cycle: G1 endpoints (ua, ub) and matching G2 endpoints (va, vb)
    // of the pair's two crossing edges, so cycle j closes with ua-va, ub-vb.
    std::vector<std::array<int, 4>> q1_ends;
    int w_star1 = -1, w_star2 = -1;
    // Per q2-cycle: {u_odd, u_even, v_odd, v_even}; connectors are
    // (u_odd, w*1, v_odd) and (u_even, w*2, v_even).
    std::vector<std::array<int, 4>> q2_ends;

    EdgeList q2_edges() const;
};

/// Hamiltonian paths per side for one phase, index-aligned with the
/// connectors in the budget.
struct SidePaths {
    std::vector<VertexSequence> side1, side2;
};

struct PreserveCertificate {
    uint64_t input_hash = 0;
    int n = 0, k = 0, ell = 0;
    bool exact = false;
    std::vector<VertexSequence> cycles;
    EdgeList bridge;        // retained bridge edges (empty on the direct path)
    std::vector<int> cut;   // W (empty on the direct path)
    int kappa_before = -1, kappa_after = -1;
    std::vector<std::string> stage_log;
    bool repaired = false;
    bool bounds_ok = true;  // all numeric hypotheses held at runtime

    SeparationStructure separation;
    BridgeSystem bridge_system;
    CrossingBudget budget;
    SidePaths phase_one, phase_two;

    nlohmann::json to_json() const;
    static PreserveCertificate from_json(const nlohmann::json& j);
};

struct PreserveOptions {
    // Force q1 = q and skip the w-star route (the stronger-minimum-degree
    // pipeline mode); only valid when enough crossing pairs exist.
    bool strong_delta = false;
    // Node-expansion budget for the backtracking extraction fallback.
    long long extraction_budget = 1'000'000;
};

/// q1 = min{q, max{0, |M_H| - |M_B| - max{p,q}}}, q2 = q - q1.
/// Requires M_B subset of M_H.
std::pair<int, int> select_q_split(const EdgeList& m_h, const EdgeList& m_b,
                                   int p, int q);

/// q1 edge-disjoint edge-pairs inside <M_H \ M_B> (bipartite crossing graph,
/// so the pair-count formula applies). Shortfall at valid bounds is an
/// internal-consistency error.
std::vector<EdgePair> find_q1_pairs(const Graph& g, const EdgeList& m_h,
                                    const EdgeList& m_b, int q1);

struct WStarSelection {
    int w_star1 = -1, w_star2 = -1;
    std::vector<std::array<int, 4>> ends;  // {u_odd, u_even, v_odd, v_even}
};

/// Two cut vertices with >= q2+1 neighbors on each side, plus q2
/// edge-disjoint pairs of their side edges (avoiding B) on each side,
/// arranged into the order-3 connector endpoints. Throws
/// BoundViolationError when no qualifying vertex pair exists.
WStarSelection find_w_stars(const Graph& g, const SeparationStructure& sep,
                            const BridgeSystem& bridge, int q2);

/// Phase 1: q1 edge-disjoint Hamiltonian paths per side in
/// <V(Gi) u Wi>_{G - E(B) - Q2}, endpoints from the q1 pairs. Phase 2: q2
/// paths per side in <V(Gi) u W''i>_{G - exclude - E(B)} with W'' = W minus
/// the w-stars, endpoints from the q2 connectors. Checks the two-part degree
/// bound on each side graph and throws BoundViolationError on failure.
SidePaths build_side_paths(const Graph& g, const SeparationStructure& sep,
                           const BridgeSystem& bridge,
                           const CrossingBudget& budget, int phase,
                           const EdgeList& exclude = {});

/// Joins each pair of side paths with its connectors (two crossing edges for
/// phase 1, two order-3 paths through the w-stars for phase 2) into
/// Hamiltonian cycles; endpoint mismatches are internal-consistency errors.
std::vector<VertexSequence> assemble_cycles(const SidePaths& side_paths,
                                            const CrossingBudget& budget,
                                            int phase, int n);

/// One Hamiltonian cycle H with kappa(G - E(H)) >= k. Tries plain closure
/// extraction first; on a connectivity drop runs the repair machinery with
/// p = 2, q = 1.
PreserveCertificate preserve_one(const Graph& g, int k,
                                 const PreserveOptions& opts = {});

/// ell edge-disjoint Hamiltonian cycles with k-connected remainder; greedy
/// extraction, then repair with p = 2*ell, q = ell if needed.
PreserveCertificate preserve_many(const Graph& g, int k, int ell,
                                  const PreserveOptions& opts = {});

/// ell edge-disjoint Hamiltonian cycles with kappa(remainder) EXACTLY
/// kappa(G): the q1 = 0, q2 = ell pipeline on G itself with an order-3-only
/// bridge through the minimum cut.
PreserveCertificate preserve_exact(const Graph& g, int ell,
                                   const PreserveOptions& opts = {});

}  // namespace hp

#endif
