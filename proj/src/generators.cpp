#include "ecc/generators.hpp"

#include <array>
#include <random>
#include <stdexcept>

namespace ecc {

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0)
        throw std::invalid_argument("complete_bipartite: sides must be >= 0");
    std::vector<Edge> edges;
    edges.reserve(std::size_t(a) * b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph::from_edges(a + b, edges);
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("random_gnp: p must be in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double x = double(rng() >> 11) * 0x1.0p-53;
            if (x < p) edges.emplace_back(u, v);
        }
    return Graph::from_edges(n, edges);
}

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; (long long)d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

} // namespace

Graph incidence_c4free(int q) {
    if (!is_prime(q))
        throw std::invalid_argument("incidence_c4free: q must be a prime >= 2");
    // Homogeneous coordinates over F_q, normalized to leading coordinate 1:
    // (0,0,1), (0,1,c), (1,b,c). Lines use the same set; incidence is a zero
    // dot product.
    std::vector<std::array<int, 3>> pts;
    pts.push_back({0, 0, 1});
    for (int c = 0; c < q; ++c) pts.push_back({0, 1, c});
    for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) pts.push_back({1, b, c});
    const int np = int(pts.size()); // q^2 + q + 1

    std::vector<Edge> edges;
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j) {
            long long dot = 0;
            for (int k = 0; k < 3; ++k) dot += (long long)pts[i][k] * pts[j][k];
            if (dot % q == 0) edges.emplace_back(i, np + j);
        }
    return Graph::from_edges(2 * np, edges);
}

LowerBoundInstance join_lowerbound(const RamseyWitness& base) {
    const Graph& j = base.graph;
    auto stable = max_stable_exact(j);
    auto clique = max_clique_exact(j);
    if (int(stable.size()) >= base.s || int(clique.size()) != base.omega)
        throw std::invalid_argument("join_lowerbound: base witness fails certification");

    int m = j.vertex_count();
    std::vector<Edge> edges;
    for (auto [u, v] : j.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(u + m, v + m);
    }
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) edges.emplace_back(u, m + v);

    LowerBoundInstance inst;
    inst.base = base;
    inst.joined = Graph::from_edges(2 * m, edges);
    inst.cross_edges = (long long)m * m;
    long long cap = (long long)base.omega * base.omega;
    inst.clique_cross_cap = cap;
    inst.cover_lower_bound = cap > 0 ? (inst.cross_edges + cap - 1) / cap : 0;
    return inst;
}

} // namespace ecc
