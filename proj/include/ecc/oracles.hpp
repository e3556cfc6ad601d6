#ifndef ECC_ORACLES_HPP
#define ECC_ORACLES_HPP

#include "ecc/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ecc {

// ---- maximum clique / stable set -------------------------------------

// omega(G[mask]). If target > 0 the search may stop early once a clique of
// size >= target is known; the return value is then >= target but not
// necessarily omega. Branch-and-bound with a greedy-coloring upper bound.
int clique_number_within(const Graph& g, const Bitset& mask, int target = 0);

// Lexicographically smallest clique of size exactly k inside mask, or empty
// if none exists.
std::vector<int> find_clique_lex(const Graph& g, const Bitset& mask, int k);

// Lexicographically smallest maximum clique of G[mask].
std::vector<int> max_clique_within(const Graph& g, const Bitset& mask);

// Lexicographically smallest maximum clique; empty only for the null graph.
std::vector<int> max_clique_exact(const Graph& g);

// Maximum stable set via the complement graph.
std::vector<int> max_stable_exact(const Graph& g);

int clique_number(const Graph& g);
int stable_number(const Graph& g);

// ---- induced K_{s,t} detection ---------------------------------------

struct KstWitness {
    std::vector<int> side_a; // stable, |side_a| = s
    std::vector<int> side_b; // stable, |side_b| = t, complete to side_a
};

// Disjoint stable sets A (|A|=s) and B (|B|=t) with every A-B pair adjacent.
// t = 0 (or s = 0) reduces to "a stable set of that size exists".
// Requires s, t >= 0 and s + t >= 1.
std::optional<KstWitness> find_induced_kst(const Graph& g, int s, int t);
bool contains_induced_kst(const Graph& g, int s, int t);

// ---- maximal clique enumeration --------------------------------------

// All maximal cliques (including singletons for isolated vertices), pivoted
// Bron-Kerbosch over a degeneracy ordering; output order is deterministic.
std::vector<Clique> maximal_cliques(const Graph& g);

// ---- minimum edge clique cover ---------------------------------------

struct EccResult {
    std::optional<CliqueCover> cover; // present iff proved optimal
    long long nodes_explored = 0;
    bool budget_exceeded = false;

    bool optimal() const { return cover.has_value(); }
};

// Provably minimum edge clique cover, or an explicit budget-exceeded signal.
// Set cover over the maximal cliques, branch-and-bound on the uncovered edge
// with fewest candidates, lower bound from a greedy packing of edges no two
// of which share a covering clique.
EccResult min_ecc_exact(const Graph& g, long long node_budget = 2'000'000);

// ---- randomized Ramsey-type witness search ----------------------------

struct RamseyWitness {
    Graph graph;
    int s = 0;               // certified alpha(graph) < s
    int omega = 0;           // certified omega(graph)
    std::uint64_t seed = 0;
    long long iterations_used = 0;
};

// Seeded local search for a graph with alpha < s and omega <= max_omega.
// Start from G(n,p) with p tuned to balance the two violation counts; each
// move toggles the edge minimizing (#stable s-sets + #cliques of size
// max_omega+1), ties by canonical edge order, bounded sideways moves, restart
// on local minima. Deterministic given seed. Failure after max_iters is a
// normal outcome.
std::optional<RamseyWitness> ramsey_search(int n, int s, int max_omega,
                                           std::uint64_t seed,
                                           long long max_iters);

// Exact subgraph counts, used by the search objective and its tests.
long long count_cliques_of_size(const Graph& g, int k);
long long count_stable_sets_of_size(const Graph& g, int k);

} // namespace ecc

#endif
