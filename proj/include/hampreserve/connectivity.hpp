#ifndef HAMPRESERVE_CONNECTIVITY_HPP
#define HAMPRESERVE_CONNECTIVITY_HPP

#include <vector>

#include "hampreserve/graph.hpp"

namespace hp {

/// Minimum vertex cut with a two-sided partition witness: cut, side_a and
/// side_b partition V(G) and no edge joins side_a to side_b in G - cut.
struct VertexCut {
    std::vector<int> cut;
    std::vector<int> side_a;
    std::vector<int> side_b;
};

/// Pairwise vertex-disjoint paths, each a vertex sequence whose consecutive
/// members are adjacent in the host graph.
struct PathSystem {
    std::vector<std::vector<int>> paths;

    /// All internal vertices (everything except the two endpoints), sorted.
    std::vector<int> internal_vertices() const;
    EdgeList all_edges() const;
};

/// Exact vertex connectivity; n-1 for complete graphs. Requires n >= 2.
int kappa(const Graph& g);

/// True iff kappa(G) >= k, with early exit once k disjoint paths are found
/// for every probed pair.
bool is_k_connected(const Graph& g, int k);

/// Requires G not complete and n >= 3.
VertexCut min_vertex_cut(const Graph& g);

/// k internally vertex-disjoint paths from A to B; endpoints may be shared
/// (so singleton A or B still admits k paths). Throws InfeasibleError
/// carrying a blocking cut of size < k when fewer paths exist.
PathSystem disjoint_paths(const Graph& g, const VertexSet& a, const VertexSet& b,
                          int k);

/// k vertex-disjoint A-B paths whose internal vertices are exactly all of W,
/// each of order 2, 3 or 4. Realized as a circulation with a lower bound of
/// one unit through every W-vertex and unit vertex capacities; order-4 paths
/// are forced to run from an A-heavy W-vertex to a B-heavy one. Set
/// allow_order4 = false to restrict every W-bearing path to order 3.
PathSystem covering_bridge_flow(const Graph& g, const VertexSet& a,
                                const VertexSet& b, const VertexSet& w, int k,
                                bool allow_order4 = true);

/// Reference implementation of the same object by iterative path
/// modification, capped at 2*k*|W| rounds. Kept as a cross-check for
/// covering_bridge_flow.
PathSystem covering_bridge_reference(const Graph& g, const VertexSet& a,
                                     const VertexSet& b, const VertexSet& w,
                                     int k);

/// Degree-sum sufficiency for k-connectivity: true iff
/// 2*delta(G) >= n + k - 2. False does not imply non-k-connected.
bool ch_sufficient(const Graph& g, int k);

}  // namespace hp

#endif
