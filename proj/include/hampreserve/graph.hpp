#ifndef HAMPRESERVE_GRAPH_HPP
#define HAMPRESERVE_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "hampreserve/errors.hpp"

namespace hp {

/// Fixed-capacity vertex set backed by 64-bit words. All set algebra used by
/// the closure and flow kernels is word-parallel.
class VertexSet {
   public:
    VertexSet() : n_(0) {}
    explicit VertexSet(int n) : n_(n), words_((n + 63) / 64, 0) {}

    int capacity() const { return n_; }

    bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
    void insert(int v) { words_[v >> 6] |= uint64_t(1) << (v & 63); }
    void erase(int v) { words_[v >> 6] &= ~(uint64_t(1) << (v & 63)); }

    int size() const;
    bool empty() const { return size() == 0; }

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& subtract(const VertexSet& o);

    int intersection_size(const VertexSet& o) const;
    bool intersects(const VertexSet& o) const;

    /// Smallest member, or -1 when empty.
    int first() const;

    std::vector<int> to_vector() const;

    template <typename F>
    void for_each(F f) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t x = words_[w];
            while (x) {
                int b = __builtin_ctzll(x);
                f(int(w * 64 + b));
                x &= x - 1;
            }
        }
    }

    bool operator==(const VertexSet& o) const = default;

    static VertexSet of(int n, const std::vector<int>& vs) {
        VertexSet s(n);
        for (int v : vs) s.insert(v);
        return s;
    }
    static VertexSet full(int n) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) s.insert(v);
        return s;
    }

   private:
    int n_;
    std::vector<uint64_t> words_;
};

/// Undirected edge, stored with u < v.
struct Edge {
    int u, v;
    Edge() : u(-1), v(-1) {}
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    auto operator<=>(const Edge&) const = default;
};

using EdgeList = std::vector<Edge>;

/// Sorts and deduplicates in place.
void normalize(EdgeList& edges);

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
/// Immutable by convention once built: every algorithm takes graphs by
/// const reference and returns new ones.
class Graph {
   public:
    Graph() : n_(0), m_(0) {}
    explicit Graph(int n) : n_(n), m_(0), adj_(n, VertexSet(n)) {}
    Graph(int n, const EdgeList& edges);

    int order() const { return n_; }
    int size() const { return m_; }

    bool has_edge(int u, int v) const { return u != v && adj_[u].contains(v); }
    bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const { return adj_[v].size(); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }

    int min_degree() const;
    int max_degree() const;

    EdgeList edges() const;

    bool is_complete() const { return 2 * m_ == n_ * (n_ - 1); }

    bool operator==(const Graph& o) const = default;

   private:
    int n_;
    int m_;
    std::vector<VertexSet> adj_;
};

/// Subgraph together with the map from its labels back to the parent's.
struct Subgraph {
    Graph graph;
    std::vector<int> to_parent;  // to_parent[new label] = original label
};

/// Sorted degree sequence and the tail counters psi_j.
struct DegreeProfile {
    std::vector<int> sorted_degrees;
    int min_degree = 0;
    int max_degree = 0;
    /// Number of vertices of degree <= j.
    int psi(int j) const;
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& s);
Graph remove_edges(const Graph& g, const EdgeList& f);
Subgraph edge_induced(const Graph& g, const EdgeList& f);
EdgeList crossing_edges(const Graph& g, const VertexSet& a, const VertexSet& b);
DegreeProfile degree_profile(const Graph& g);

/// Translates a vertex sequence through a subgraph's index map.
std::vector<int> map_to_parent(const std::vector<int>& seq,
                               const std::vector<int>& to_parent);

/// FNV-1a over the order and the sorted edge list; ties certificates to
/// their input graph.
uint64_t graph_hash(const Graph& g);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);
bool has_triangle(const Graph& g);

}  // namespace hp

#endif
