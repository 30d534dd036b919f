#include "hampreserve/graph.hpp"

#include <algorithm>
#include <bit>

namespace hp {

int VertexSet::size() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

int VertexSet::intersection_size(const VertexSet& o) const {
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
        c += std::popcount(words_[i] & o.words_[i]);
    return c;
}

bool VertexSet::intersects(const VertexSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

int VertexSet::first() const {
    for (size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return int(i * 64 + std::countr_zero(words_[i]));
    return -1;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int v) { out.push_back(v); });
    return out;
}

void normalize(EdgeList& edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

Graph::Graph(int n, const EdgeList& edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw DomainError("self-loop");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("vertex out of range");
    if (adj_[u].contains(v)) return;
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++m_;
}

void Graph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) throw DomainError("edge not present");
    adj_[u].erase(v);
    adj_[v].erase(u);
    --m_;
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

EdgeList Graph::edges() const {
    EdgeList out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.push_back(Edge(u, v));
        });
    return out;
}

int DegreeProfile::psi(int j) const {
    auto it = std::upper_bound(sorted_degrees.begin(), sorted_degrees.end(), j);
    return int(it - sorted_degrees.begin());
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw DomainError("induced_subgraph: empty vertex set");
    std::vector<int> to_parent = s.to_vector();
    std::vector<int> to_child(g.order(), -1);
    for (size_t i = 0; i < to_parent.size(); ++i) to_child[to_parent[i]] = int(i);
    Graph h(int(to_parent.size()));
    for (size_t i = 0; i < to_parent.size(); ++i) {
        VertexSet nbrs = g.neighbors(to_parent[i]);
        nbrs &= s;
        nbrs.for_each([&](int v) {
            if (to_parent[i] < v) h.add_edge(int(i), to_child[v]);
        });
    }
    return {std::move(h), std::move(to_parent)};
}

Graph remove_edges(const Graph& g, const EdgeList& f) {
    Graph h = g;
    for (const Edge& e : f) {
        if (!g.has_edge(e)) throw DomainError("remove_edges: edge not in graph");
        if (h.has_edge(e)) h.remove_edge(e.u, e.v);
    }
    return h;
}

Subgraph edge_induced(const Graph& g, const EdgeList& f) {
    if (f.empty()) throw DomainError("edge_induced: empty edge set");
    VertexSet verts(g.order());
    for (const Edge& e : f) {
        if (!g.has_edge(e)) throw DomainError("edge_induced: edge not in graph");
        verts.insert(e.u);
        verts.insert(e.v);
    }
    std::vector<int> to_parent = verts.to_vector();
    std::vector<int> to_child(g.order(), -1);
    for (size_t i = 0; i < to_parent.size(); ++i) to_child[to_parent[i]] = int(i);
    Graph h(int(to_parent.size()));
    for (const Edge& e : f) h.add_edge(to_child[e.u], to_child[e.v]);
    return {std::move(h), std::move(to_parent)};
}

EdgeList crossing_edges(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.intersects(b)) throw DomainError("crossing_edges: sets overlap");
    EdgeList out;
    a.for_each([&](int u) {
        VertexSet nbrs = g.neighbors(u);
        nbrs &= b;
        nbrs.for_each([&](int v) { out.push_back(Edge(u, v)); });
    });
    normalize(out);
    return out;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    p.sorted_degrees.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) p.sorted_degrees.push_back(g.degree(v));
    std::sort(p.sorted_degrees.begin(), p.sorted_degrees.end());
    p.min_degree = p.sorted_degrees.empty() ? 0 : p.sorted_degrees.front();
    p.max_degree = p.sorted_degrees.empty() ? 0 : p.sorted_degrees.back();
    return p;
}

std::vector<int> map_to_parent(const std::vector<int>& seq,
                               const std::vector<int>& to_parent) {
    std::vector<int> out;
    out.reserve(seq.size());
    for (int v : seq) out.push_back(to_parent[v]);
    return out;
}

uint64_t graph_hash(const Graph& g) {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(uint64_t(g.order()));
    for (const Edge& e : g.edges()) {
        mix(uint64_t(e.u));
        mix(uint64_t(e.v));
    }
    return h;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.order(), 0);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            g.neighbors(u).for_each([&](int v) {
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.order() <= 1 || connected_components(g).size() == 1;
}

bool has_triangle(const Graph& g) {
    for (const Edge& e : g.edges())
        if (g.neighbors(e.u).intersects(g.neighbors(e.v))) return true;
    return false;
}

}  // namespace hp
