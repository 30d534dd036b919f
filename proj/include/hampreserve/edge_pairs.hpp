#ifndef HAMPRESERVE_EDGE_PAIRS_HPP
#define HAMPRESERVE_EDGE_PAIRS_HPP

#include <utility>
#include <vector>

#include "hampreserve/graph.hpp"

namespace hp {

/// Two independent edges (no common endpoint), stored with e1 < e2.
struct EdgePair {
    Edge e1, e2;
    EdgePair() = default;
    EdgePair(Edge a, Edge b) : e1(a < b ? a : b), e2(a < b ? b : a) {}
    auto operator<=>(const EdgePair&) const = default;
};

/// Full partition of E(G) into edge-pairs.
using PairDecomposition = std::vector<EdgePair>;

bool edges_independent(const Edge& a, const Edge& b);

/// Phi(G) = |E(G)| - 2*Delta(G); the induction measure. May be negative.
int phi(const Graph& g);

/// True iff |E| is even, |E| >= 2*Delta, and not (|E| = 4 with a triangle).
/// Requires a nonempty edge set.
bool can_decompose(const Graph& g);

/// Partition of E(G) into |E|/2 edge-pairs, built by the double induction:
/// peel lexicographically-least pairs while Phi >= 2 (with the |E|=6
/// triangle guard), then split on the number of maximum-degree vertices.
/// Throws DomainError naming the violated condition when !can_decompose.
PairDecomposition decompose_into_pairs(const Graph& g);

/// Maximum number of edge-disjoint edge-pairs with a witness:
/// floor(|E|/2) when |E| >= 2*Delta, else |E| - Delta. Throws
/// ExceptionalInputError for K3 (+ isolates) and K3 u K2 (+ isolates).
std::pair<int, std::vector<EdgePair>> max_edge_disjoint_pairs(const Graph& g);

}  // namespace hp

#endif
