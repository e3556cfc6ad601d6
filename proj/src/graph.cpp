#include "ecc/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecc {

namespace {

std::string pair_str(Edge e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

} // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, Bitset(n));
    for (Edge e : edges) {
        auto [u, v] = e;
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + pair_str(e));
        if (u == v)
            throw std::invalid_argument("self-loop rejected: " + pair_str(e));
        if (!g.adj_[u].test(v)) {
            g.adj_[u].set(v);
            g.adj_[v].set(u);
            ++g.m_;
        }
    }
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(std::size_t(m_));
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (v > u) out.emplace_back(u, v);
        });
    return out;
}

Graph Graph::complement() const {
    Graph g;
    g.n_ = n_;
    g.adj_.assign(n_, Bitset(n_));
    for (int u = 0; u < n_; ++u) {
        g.adj_[u] = adj_[u].complement_set();
        g.adj_[u].reset(u);
    }
    g.m_ = (long long)(n_) * (n_ - 1) / 2 - m_;
    return g;
}

std::uint64_t Graph::content_hash() const {
    const std::uint64_t prime = 0x100000001b3ULL;
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](std::uint64_t x) {
        h ^= x;
        h *= prime;
    };
    mix(std::uint64_t(n_));
    for (auto [u, v] : edges()) {
        mix(std::uint64_t(u));
        mix(std::uint64_t(v));
    }
    return h;
}

Clique::Clique(std::initializer_list<int> vs) : members(vs) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

Clique::Clique(std::vector<int> vs) : members(std::move(vs)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool is_clique(const Graph& g, std::span<const int> vs) {
    for (int v : vs)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (vs[i] == vs[j]) continue;
            if (!g.adjacent(vs[i], vs[j])) return false;
        }
    return true;
}

bool is_clique(const Graph& g, const Clique& c) {
    return is_clique(g, std::span<const int>(c.members));
}

CoverReport validate_cover(const Graph& g, const CliqueCover& cover) {
    CoverReport rep;
    rep.size = cover.size();
    EdgeSet covered(g.vertex_count());
    for (int i = 0; i < cover.size(); ++i) {
        const Clique& c = cover.cliques[i];
        bool in_range = std::all_of(c.members.begin(), c.members.end(), [&](int v) {
            return v >= 0 && v < g.vertex_count();
        });
        if (!in_range || !is_clique(g, c)) {
            rep.non_clique_indices.push_back(i);
            continue;
        }
        for (std::size_t a = 0; a < c.members.size(); ++a)
            for (std::size_t b = a + 1; b < c.members.size(); ++b)
                covered.insert(c.members[a], c.members[b]);
    }
    for (Edge e : g.edges())
        if (!covered.contains(e)) rep.uncovered_edges.push_back(e);
    rep.valid = rep.non_clique_indices.empty() && rep.uncovered_edges.empty();
    return rep;
}

Graph uncovered_subgraph(const Graph& g, std::span<const Edge> covered) {
    EdgeSet set(g.vertex_count());
    for (Edge e : covered) {
        if (!g.has_edge(e))
            throw std::invalid_argument("covered edge not in graph: (" +
                                        std::to_string(e.first) + "," +
                                        std::to_string(e.second) + ")");
        set.insert(e);
    }
    return uncovered_subgraph(g, set);
}

Graph uncovered_subgraph(const Graph& g, const EdgeSet& covered) {
    std::vector<Edge> remaining;
    for (Edge e : g.edges())
        if (!covered.contains(e)) remaining.push_back(e);
    return Graph::from_edges(g.vertex_count(), remaining);
}

} // namespace ecc
