#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ecc/generators.hpp"
#include "ecc/graph.hpp"
#include "ecc/oracles.hpp"

#include <algorithm>
#include <set>

using namespace ecc;

namespace {

Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);     // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        edges.emplace_back(i, 5 + i);           // spokes
    }
    return Graph::from_edges(10, edges);
}

Graph cycle(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph complete(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

bool subset_is_clique(const Graph& g, unsigned mask) {
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if ((mask >> i & 1) && (mask >> j & 1) && !g.adjacent(i, j))
                return false;
    return true;
}

// exhaustive subset enumeration; the independent route the solvers are
// checked against
int brute_clique_number(const Graph& g) {
    int n = g.vertex_count(), best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (subset_is_clique(g, mask))
            best = std::max(best, __builtin_popcount(mask));
    return best;
}

int brute_stable_number(const Graph& g) { return brute_clique_number(g.complement()); }

std::vector<int> mask_to_set(unsigned mask, int n) {
    std::vector<int> vs;
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1) vs.push_back(i);
    return vs;
}

// lexicographically smallest maximum clique, by full enumeration
std::vector<int> brute_lex_max_clique(const Graph& g) {
    int n = g.vertex_count();
    int omega = brute_clique_number(g);
    std::vector<int> best;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != omega || !subset_is_clique(g, mask)) continue;
        auto vs = mask_to_set(mask, n);
        if (best.empty() || vs < best) best = vs;
    }
    return best;
}

bool brute_has_induced_kst(const Graph& g, int s, int t) {
    int n = g.vertex_count();
    Graph gc = g.complement();
    for (unsigned am = 0; am < (1u << n); ++am) {
        if (__builtin_popcount(am) != s || !subset_is_clique(gc, am)) continue;
        for (unsigned bm = 0; bm < (1u << n); ++bm) {
            if (bm & am) continue;
            if (__builtin_popcount(bm) != t || !subset_is_clique(gc, bm)) continue;
            bool complete = true;
            for (int i = 0; i < n && complete; ++i)
                for (int j = 0; j < n && complete; ++j)
                    if ((am >> i & 1) && (bm >> j & 1) && !g.adjacent(i, j))
                        complete = false;
            if (complete) return true;
        }
    }
    return false;
}

// depth-limited cover search over all cliques of size >= 2
bool brute_cover_exists(const Graph& g, const std::vector<unsigned>& cliques,
                        const std::vector<Edge>& edges, std::set<Edge>& covered,
                        int budget) {
    Edge missing{-1, -1};
    for (Edge e : edges)
        if (!covered.count(e)) {
            missing = e;
            break;
        }
    if (missing.first < 0) return true;
    if (budget == 0) return false;
    for (unsigned cm : cliques) {
        if (!((cm >> missing.first & 1) && (cm >> missing.second & 1))) continue;
        std::set<Edge> saved = covered;
        auto vs = mask_to_set(cm, g.vertex_count());
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                covered.insert({vs[i], vs[j]});
        if (brute_cover_exists(g, cliques, edges, covered, budget - 1)) return true;
        covered = saved;
    }
    return false;
}

int brute_min_ecc(const Graph& g) {
    int n = g.vertex_count();
    std::vector<unsigned> cliques;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (__builtin_popcount(mask) >= 2 && subset_is_clique(g, mask))
            cliques.push_back(mask);
    auto edges = g.edges();
    for (int k = 0;; ++k) {
        std::set<Edge> covered;
        if (brute_cover_exists(g, cliques, edges, covered, k)) return k;
    }
}

} // namespace

TEST_CASE("max clique on fixed graphs") {
    CHECK(max_clique_exact(cycle(5)).size() == 2);
    CHECK(max_clique_exact(complete(4)) == std::vector<int>{0, 1, 2, 3});
    CHECK(max_clique_exact(Graph::from_edges(0, {})).empty());
    CHECK(max_clique_exact(Graph::from_edges(3, {})) == std::vector<int>{0});
}

TEST_CASE("petersen alpha and omega against brute force") {
    Graph p = petersen();
    CHECK(brute_clique_number(p) == 2);
    CHECK(int(max_clique_exact(p).size()) == 2);
    CHECK(brute_stable_number(p) == 4);
    CHECK(int(max_stable_exact(p).size()) == 4);
}

TEST_CASE("max stable on fixed graphs") {
    CHECK(max_stable_exact(cycle(5)).size() == 2);
    CHECK(max_stable_exact(complete_bipartite(3, 3)).size() == 3);
}

TEST_CASE("exact solvers agree with subset enumeration on a random corpus") {
    int graphs = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        int n = 2 + int(seed % 7); // up to 8 vertices
        double p = 0.15 + 0.1 * double(seed % 8);
        Graph g = random_gnp(n, p, seed + 1);
        auto clique = max_clique_exact(g);
        auto stable = max_stable_exact(g);
        REQUIRE(int(clique.size()) == brute_clique_number(g));
        REQUIRE(int(stable.size()) == brute_stable_number(g));
        REQUIRE(is_clique(g, clique));
        ++graphs;
    }
    CHECK(graphs >= 1000);
}

TEST_CASE("returned maximum clique is the lexicographically smallest") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        Graph g = random_gnp(7, 0.5, seed + 77);
        CHECK(max_clique_exact(g) == brute_lex_max_clique(g));
    }
}

TEST_CASE("induced K_st detection on fixed graphs") {
    CHECK(contains_induced_kst(cycle(4), 2, 2));
    CHECK_FALSE(contains_induced_kst(complete(4), 2, 2));
    CHECK_FALSE(contains_induced_kst(petersen(), 2, 2));
    CHECK(brute_has_induced_kst(petersen(), 2, 2) == false);

    auto w = find_induced_kst(cycle(4), 2, 2);
    REQUIRE(w.has_value());
    CHECK(w->side_a == std::vector<int>{0, 2});
    CHECK(w->side_b == std::vector<int>{1, 3});

    CHECK_THROWS_AS(find_induced_kst(cycle(4), 0, 0), std::invalid_argument);
}

TEST_CASE("K_st detection properties") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        int n = 3 + int(seed % 5);
        Graph g = random_gnp(n, 0.2 + 0.1 * double(seed % 7), seed + 5);
        // s,0 reduces to a stable set of size s
        for (int s = 1; s <= 4; ++s)
            CHECK(contains_induced_kst(g, s, 0) ==
                  (int(max_stable_exact(g).size()) >= s));
        // 1,1 is just an edge
        CHECK(contains_induced_kst(g, 1, 1) == (g.edge_count() > 0));
        // full agreement with the exhaustive search
        for (int s = 1; s <= 3; ++s)
            for (int t = 1; t <= 3; ++t)
                CHECK(contains_induced_kst(g, s, t) == brute_has_induced_kst(g, s, t));
    }
}

TEST_CASE("maximal clique enumeration") {
    CHECK(maximal_cliques(complete(4)).size() == 1);
    CHECK(maximal_cliques(cycle(5)).size() == 5);
    CHECK(maximal_cliques(petersen()).size() == 15); // triangle-free: the edges

    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        int n = 2 + int(seed % 7);
        Graph g = random_gnp(n, 0.5, seed + 11);
        auto cliques = maximal_cliques(g);
        std::set<std::vector<int>> seen;
        for (const auto& c : cliques) {
            CHECK(is_clique(g, c));
            // maximality: no vertex extends it
            for (int v = 0; v < n; ++v) {
                if (std::find(c.members.begin(), c.members.end(), v) != c.members.end())
                    continue;
                bool extends = true;
                for (int u : c.members) extends = extends && g.adjacent(u, v);
                CHECK_FALSE(extends);
            }
            seen.insert(c.members);
        }
        CHECK(seen.size() == cliques.size());
        // count matches a brute enumeration of maximal cliques
        int brute = 0;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            if (!subset_is_clique(g, mask)) continue;
            bool maximal = true;
            for (int v = 0; v < n && maximal; ++v)
                if (!(mask >> v & 1) && subset_is_clique(g, mask | (1u << v)))
                    maximal = false;
            if (maximal) ++brute;
        }
        CHECK(int(cliques.size()) == brute);
    }
}

TEST_CASE("min ecc on fixed graphs") {
    auto k4 = min_ecc_exact(complete(4));
    REQUIRE(k4.optimal());
    CHECK(k4.cover->size() == 1);

    auto c4res = min_ecc_exact(cycle(4));
    REQUIRE(c4res.optimal());
    CHECK(c4res.cover->size() == 4);

    auto c5res = min_ecc_exact(cycle(5));
    REQUIRE(c5res.optimal());
    CHECK(c5res.cover->size() == 5);

    auto k33 = min_ecc_exact(complete_bipartite(3, 3));
    REQUIRE(k33.optimal());
    CHECK(k33.cover->size() == 9); // floor(36/4) at n = 6

    auto empty = min_ecc_exact(Graph::from_edges(5, {}));
    REQUIRE(empty.optimal());
    CHECK(empty.cover->size() == 0);
}

TEST_CASE("min ecc equals brute force on tiny graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = 3 + int(seed % 4); // up to 6
        Graph g = random_gnp(n, 0.45, seed + 23);
        auto res = min_ecc_exact(g);
        REQUIRE(res.optimal());
        CHECK(res.cover->size() == brute_min_ecc(g));
        CHECK(validate_cover(g, *res.cover).valid);
    }
}

TEST_CASE("min ecc is the edge count on triangle-free graphs") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = random_gnp(9, 0.2, seed + 57);
        if (count_cliques_of_size(g, 3) != 0) continue;
        auto res = min_ecc_exact(g);
        REQUIRE(res.optimal());
        CHECK(res.cover->size() == g.edge_count());
    }
    auto pet = min_ecc_exact(petersen());
    REQUIRE(pet.optimal());
    CHECK(pet.cover->size() == 15);
}

TEST_CASE("min ecc budget exceeded is an explicit signal") {
    // join of two C5 copies: the greedy incumbent is not certified by the
    // root lower bound, so real branching is required
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 1) % 5);
    }
    for (int u = 0; u < 5; ++u)
        for (int v = 5; v < 10; ++v) edges.emplace_back(u, v);
    Graph join = Graph::from_edges(10, edges);

    auto res = min_ecc_exact(join, 2);
    CHECK(res.budget_exceeded);
    CHECK_FALSE(res.cover.has_value());
    CHECK(res.nodes_explored > 2);

    auto full = min_ecc_exact(join);
    REQUIRE(full.optimal());
    // the 25 cross edges alone force at least ceil(25/4) = 7 cliques; the
    // side edges push the true optimum to 8
    CHECK(full.cover->size() == 8);
}

TEST_CASE("subgraph counting") {
    CHECK(count_cliques_of_size(complete(4), 3) == 4);
    CHECK(count_cliques_of_size(complete(4), 4) == 1);
    CHECK(count_cliques_of_size(complete(4), 5) == 0);
    CHECK(count_stable_sets_of_size(cycle(5), 2) == 5);
    CHECK(count_cliques_of_size(cycle(5), 2) == 5);
}

TEST_CASE("ramsey search finds a 5-vertex witness for alpha<3 omega<=2") {
    auto w = ramsey_search(5, 3, 2, 1234, 5000);
    REQUIRE(w.has_value());
    CHECK(w->omega <= 2);
    CHECK(int(max_stable_exact(w->graph).size()) < 3);
    CHECK(int(max_clique_exact(w->graph).size()) == w->omega);
}

TEST_CASE("no 6-vertex witness exists, and the search reports failure") {
    // exhaustive: every graph on 6 vertices has a triangle or a stable triple
    for (unsigned mask = 0; mask < (1u << 15); ++mask) {
        std::vector<Edge> edges;
        int id = 0;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j, ++id)
                if (mask >> id & 1) edges.emplace_back(i, j);
        Graph g = Graph::from_edges(6, edges);
        bool has_triangle = count_cliques_of_size(g, 3) > 0;
        bool has_stable3 = count_stable_sets_of_size(g, 3) > 0;
        REQUIRE((has_triangle || has_stable3));
    }
    CHECK_FALSE(ramsey_search(6, 3, 2, 42, 800).has_value());
}

TEST_CASE("ramsey search finds an 8-vertex witness for alpha<4 omega<=3") {
    auto w = ramsey_search(8, 4, 3, 7, 20000);
    REQUIRE(w.has_value());
    CHECK(w->omega <= 3);
    CHECK(int(max_stable_exact(w->graph).size()) < 4);
}
