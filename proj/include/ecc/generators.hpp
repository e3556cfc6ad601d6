#ifndef ECC_GENERATORS_HPP
#define ECC_GENERATORS_HPP

#include "ecc/graph.hpp"
#include "ecc/oracles.hpp"

#include <cstdint>

namespace ecc {

// K_{a,b} with sides {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(int a, int b);

// G(n,p); every pair is an edge independently with probability p.
// mt19937_64 driven, so the result is identical across platforms.
Graph random_gnp(int n, double p, std::uint64_t seed);

// Point-line incidence graph of the projective plane of prime order q:
// bipartite, 2(q^2+q+1) vertices, (q+1)(q^2+q+1) edges, girth >= 6, so it
// carries no K_{2,2} at all. Points come first, lines after. Throws for
// composite or q < 2.
Graph incidence_c4free(int q);

struct LowerBoundInstance {
    RamseyWitness base;            // the graph J with certified alpha, omega
    Graph joined;                  // two copies of J plus all cross edges
    long long cross_edges = 0;     // m^2
    long long clique_cross_cap = 0; // omega(J)^2
    long long cover_lower_bound = 0; // ceil(m^2 / omega(J)^2)
};

// Join construction: any clique of the join splits into a clique of each
// copy and covers at most omega(J)^2 of the m^2 cross edges, so every cover
// needs at least ceil(m^2/omega^2) cliques. Re-certifies the base witness
// with the exact oracles and rejects it if the certification fails.
LowerBoundInstance join_lowerbound(const RamseyWitness& base);

} // namespace ecc

#endif
