#ifndef ECC_GRAPH_HPP
#define ECC_GRAPH_HPP

#include "ecc/bitset.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ecc {

// Undirected edge; canonical form is (min, max).
using Edge = std::pair<int, int>;

inline Edge canonical(Edge e) {
    return e.first <= e.second ? e : Edge{e.second, e.first};
}

// Immutable simple undirected graph on vertices 0..n-1 with bitset adjacency.
class Graph {
public:
    Graph() = default;

    // Builds from an edge list; duplicates are merged. Throws
    // std::invalid_argument on a self-loop or out-of-range endpoint,
    // naming the offending pair.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    // Canonical (min,max) edges in lexicographic order.
    std::vector<Edge> edges() const;

    bool has_edge(Edge e) const {
        auto [u, v] = e;
        return u >= 0 && u < n_ && v >= 0 && v < n_ && u != v && adj_[u].test(v);
    }

    Graph complement() const;

    // FNV-1a over n and the canonical edge stream. Covers carry this so
    // validation always refers to the instance they were computed on.
    std::uint64_t content_hash() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> adj_;
};

// Set of edges of a fixed n-vertex graph, stored as a symmetric bit matrix.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(int n) : n_(n), bits_(std::size_t(n) * n) {}

    int vertex_count() const { return n_; }
    long long size() const { return count_; }

    bool contains(int u, int v) const { return bits_[idx(u, v)]; }
    bool contains(Edge e) const { return contains(e.first, e.second); }

    void insert(int u, int v) {
        if (!bits_[idx(u, v)]) {
            bits_[idx(u, v)] = true;
            bits_[idx(v, u)] = true;
            ++count_;
        }
    }
    void insert(Edge e) { insert(e.first, e.second); }

private:
    std::size_t idx(int u, int v) const { return std::size_t(u) * n_ + v; }

    int n_ = 0;
    long long count_ = 0;
    std::vector<bool> bits_;
};

// Vertex set asserted pairwise-adjacent; members kept sorted and unique.
struct Clique {
    std::vector<int> members;

    Clique() = default;
    Clique(std::initializer_list<int> vs);
    explicit Clique(std::vector<int> vs);

    int size() const { return int(members.size()); }
    bool operator==(const Clique& o) const = default;
    // Lexicographic on the sorted member lists.
    bool operator<(const Clique& o) const { return members < o.members; }
};

// Ordered list of cliques with per-clique provenance labels.
struct CliqueCover {
    std::vector<Clique> cliques;
    std::vector<std::string> provenance; // parallel to cliques
    std::uint64_t graph_hash = 0;

    int size() const { return int(cliques.size()); }
    void add(Clique c, std::string label) {
        cliques.push_back(std::move(c));
        provenance.push_back(std::move(label));
    }
};

struct CoverReport {
    bool valid = false;
    std::vector<int> non_clique_indices;
    std::vector<Edge> uncovered_edges; // canonical, lex sorted
    int size = 0;
};

// True iff every pair in vs is adjacent; |vs| <= 1 is a clique.
// Throws std::invalid_argument on an out-of-range vertex.
bool is_clique(const Graph& g, std::span<const int> vs);
bool is_clique(const Graph& g, const Clique& c);

// Reports every non-clique index and every edge of g covered by no clique.
// Malformed covers are reported, never rejected.
CoverReport validate_cover(const Graph& g, const CliqueCover& cover);

// Graph on the same vertices whose edges are edges(g) minus covered.
// Throws std::invalid_argument if a covered edge is not an edge of g.
Graph uncovered_subgraph(const Graph& g, std::span<const Edge> covered);
Graph uncovered_subgraph(const Graph& g, const EdgeSet& covered);

} // namespace ecc

#endif
