#ifndef HAMPRESERVE_HAMILTON_HPP
#define HAMPRESERVE_HAMILTON_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hampreserve/graph.hpp"

namespace hp {

/// A Hamiltonian cycle as a vertex sequence of length n (closing edge
/// implicit) or a Hamiltonian path of length n.
using VertexSequence = std::vector<int>;

/// One closure insertion: the edge and the degree sum that justified it.
struct ClosureStep {
    Edge edge;
    int degree_sum;
};

/// Result of the degree-sum closure: the fixpoint graph and the insertion
/// trace. Replaying the steps from the input reproduces the closure.
struct ClosureTrace {
    Graph closure;
    std::vector<ClosureStep> steps;
    int threshold = 0;
};

/// Fixpoint of joining nonadjacent u,v with deg(u)+deg(v) >= t.
ClosureTrace closure(const Graph& g, int t);

/// Hamiltonian cycle through the n-closure: build the trivial cycle in the
/// complete closure and unwind added edges in reverse insertion order via
/// crossing-chord rotations. Requires the n-closure to be complete
/// (guaranteed for delta >= n/2); otherwise throws NotApplicableError.
VertexSequence ham_cycle_dirac(const Graph& g);

/// True iff psi_j(G) < j-1 for every integer j with 2 <= j <= n/2
/// (Hamiltonian-connectedness sufficiency). Requires n >= 4.
bool ckk_condition(const Graph& g);

/// Hamiltonian u-v path under ckk_condition, via an apex vertex pinned to u
/// and v and the (n+1)-closure.
VertexSequence ham_path_between(const Graph& g, int u, int v);

/// Multiset of endpoint pairs; pairs may repeat.
using EndpointRequest = std::vector<std::pair<int, int>>;

/// l pairwise edge-disjoint Hamiltonian paths, path i connecting request
/// pair i. Requires n >= 4l and psi_j(G) < j-2l+1 for all
/// 2l <= j <= n/2 + 2(l-1); throws NotApplicableError naming the violating j
/// otherwise. Pairs are processed last to first, peeling each path's edges.
std::vector<VertexSequence> edge_disjoint_ham_paths(const Graph& g,
                                                    const EndpointRequest& req);

/// Degree-bound test that implies the edge_disjoint_ham_paths precondition:
/// every vertex of V1 has degree >= n/2 + 2l - 1 and every vertex of V2 has
/// degree >= |V2| + 2l. V1, V2 must partition V(G) with V1 nonempty.
bool lemma_h_applicable(const Graph& g, const VertexSet& v1, const VertexSet& v2,
                        int l);

/// Plain backtracking Hamiltonian cycle search with a node-expansion budget;
/// the oracle-grade fallback for graphs whose closure is not complete.
std::optional<VertexSequence> ham_cycle_backtracking(const Graph& g,
                                                     long long budget);

}  // namespace hp

#endif
