#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ecc/harness.hpp"
#include "ecc/json_io.hpp"
#include "ecc/oracles.hpp"

#include <algorithm>
#include <set>

using namespace ecc;
using nlohmann::json;

namespace {

json small_spec() {
    return json::parse(R"({
        "seed": 11,
        "oracle_cutoff": 10,
        "instances": [
            {"family": "kab", "a": [2, 3], "b": [2, 3]},
            {"family": "gnp", "n": [8, 10], "p": [0.3, 0.6], "seeds": 2},
            {"family": "incidence", "q": 2}
        ],
        "algorithms": [
            {"algo": "quadratic"},
            {"algo": "threshold", "s": 3, "t": 2, "mode": "paper"},
            {"algo": "peel22", "mode": "practical"},
            {"algo": "partition-product", "s": 3, "mode": "practical"}
        ]
    })");
}

} // namespace

TEST_CASE("algorithm labels are canonical") {
    AlgorithmDef q{"quadratic", CoverParams(3, 2), true};
    CHECK(q.label() == "quadratic");
    AlgorithmDef t{"threshold", CoverParams(3, 2, Mode::Paper), true};
    CHECK(t.label() == "threshold(s=3,t=2,paper)");
    AlgorithmDef pp{"partition-product", CoverParams(4, 2, Mode::Practical), false};
    CHECK(pp.label() == "partition-product(s=4,practical,nodedupe)");
}

TEST_CASE("experiment expands instances and validates everything") {
    ExperimentSpec spec = parse_experiment_spec(small_spec(), 0);
    CHECK(spec.instances.size() == 4 + 8 + 1);
    CHECK(spec.algorithms.size() == 4);
    ExperimentResult result = run_experiment(spec);
    CHECK(result.rows.size() == spec.instances.size() * spec.algorithms.size());
    for (const ResultRow& row : result.rows) {
        CHECK(row.valid);
        if (row.oracle_min) CHECK(*row.oracle_min <= row.cover_size);
        if (row.n <= spec.oracle_cutoff) CHECK(row.oracle_min.has_value());
    }
}

TEST_CASE("kab quadratic rows respect n^2/4") {
    json j = json::parse(R"({
        "seed": 1,
        "instances": [{"family": "kab", "a": [2, 3], "b": [2, 3]}],
        "algorithms": [{"algo": "quadratic"}]
    })");
    ExperimentResult result = run_experiment(parse_experiment_spec(j, 0));
    CHECK(result.rows.size() == 4);
    for (const ResultRow& row : result.rows)
        CHECK(row.cover_size <= (row.n * row.n) / 4);
}

TEST_CASE("empty spec yields an empty table") {
    ExperimentResult result = run_experiment(parse_experiment_spec(json::object(), 0));
    CHECK(result.rows.empty());
    CHECK(experiment_csv(result) ==
          "instance,n,edge_count,algorithm,cover_size,bound_kind,bound_value,"
          "bound_shape_only,bound_ratio,oracle_min,valid\n");
}

TEST_CASE("experiment output is byte-identical across runs") {
    ExperimentSpec s1 = parse_experiment_spec(small_spec(), 0);
    ExperimentSpec s2 = parse_experiment_spec(small_spec(), 0);
    ExperimentResult r1 = run_experiment(s1);
    ExperimentResult r2 = run_experiment(s2);
    CHECK(experiment_csv(r1) == experiment_csv(r2));
    CHECK(experiment_json(s1, r1).dump(2) == experiment_json(s2, r2).dump(2));
}

TEST_CASE("join instances enter experiments with certified construction") {
    json j = json::parse(R"({
        "seed": 5,
        "oracle_cutoff": 0,
        "instances": [{"family": "join", "m": 5, "s": 3, "max_omega": 2,
                       "max_iters": 5000}],
        "algorithms": [{"algo": "quadratic"}]
    })");
    ExperimentSpec spec = parse_experiment_spec(j, 0);
    REQUIRE(spec.instances.size() == 1);
    CHECK(spec.instances[0].graph.vertex_count() == 10);
    ExperimentResult result = run_experiment(spec);
    CHECK(result.rows.size() == 1);
}

TEST_CASE("incidence + peel22 sweep reports a nonincreasing ratio trend") {
    json j = json::parse(R"({
        "seed": 1,
        "oracle_cutoff": 0,
        "instances": [{"family": "incidence", "q": [2, 3, 5]}],
        "algorithms": [{"algo": "peel22", "mode": "practical"}]
    })");
    ExperimentResult result = run_experiment(parse_experiment_spec(j, 0));
    REQUIRE(result.rows.size() == 3);
    CHECK(result.rows[0].bound_ratio >= result.rows[1].bound_ratio);
    CHECK(result.rows[1].bound_ratio >= result.rows[2].bound_ratio);
}

TEST_CASE("conjecture sweep is exhaustive for small n") {
    ConjectureReport report = conjecture_sweep(5, 0, 0);
    // one complement-of-triangle-free representative per isomorphism class
    std::vector<int> per_n(6, 0);
    for (const auto& row : report.rows) ++per_n[row.n];
    CHECK(per_n[1] == 1);
    CHECK(per_n[2] == 2);
    CHECK(per_n[3] == 3);
    CHECK(per_n[4] == 7);
    CHECK(per_n[5] == 14);
    CHECK(report.violations == 0);
    CHECK(report.skipped == 0);
    CHECK(report.checked == 1 + 2 + 3 + 7 + 14);

    // C5 is self-complementary, alpha = 2, and needs exactly n cliques
    bool c5_tight = false;
    for (const auto& row : report.rows)
        if (row.n == 5 && row.edges == 5 && row.min_ecc && *row.min_ecc == 5)
            c5_tight = true;
    CHECK(c5_tight);
}

TEST_CASE("conjecture enumeration matches a brute-force canonical count") {
    // independent route: enumerate all labeled triangle-free graphs on 5
    // vertices and count isomorphism classes via permutation-minimal masks
    const int n = 5;
    auto perm_min = [&](std::uint32_t mask) {
        std::vector<int> p{0, 1, 2, 3, 4};
        auto pair_index = [&](int i, int j) {
            return i * n - i * (i + 1) / 2 + (j - i - 1);
        };
        std::uint32_t best = ~0u;
        do {
            std::uint32_t out = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    if (!(mask >> pair_index(i, j) & 1)) continue;
                    int a = p[i], b = p[j];
                    if (a > b) std::swap(a, b);
                    out |= 1u << pair_index(a, b);
                }
            best = std::min(best, out);
        } while (std::next_permutation(p.begin(), p.end()));
        return best;
    };
    std::set<std::uint32_t> classes;
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
        bool trifree = true;
        for (int a = 0; a < n && trifree; ++a)
            for (int b = a + 1; b < n && trifree; ++b)
                for (int c = b + 1; c < n && trifree; ++c) {
                    auto has = [&](int i, int j) {
                        return mask >> (i * n - i * (i + 1) / 2 + (j - i - 1)) & 1;
                    };
                    if (has(a, b) && has(a, c) && has(b, c)) trifree = false;
                }
        if (trifree) classes.insert(perm_min(mask));
    }
    CHECK(classes.size() == 14);
}

TEST_CASE("conjecture sweep samples larger graphs deterministically") {
    ConjectureReport a = conjecture_sweep(8, 4, 99);
    ConjectureReport b = conjecture_sweep(8, 4, 99);
    CHECK(conjecture_csv(a) == conjecture_csv(b));
    int n8 = 0;
    for (const auto& row : a.rows)
        if (row.n == 8) ++n8;
    CHECK(n8 == 4);
    CHECK(a.violations == 0);
    CHECK_THROWS_AS(conjecture_sweep(10, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(conjecture_sweep(0, 1, 0), std::invalid_argument);
}

TEST_CASE("complement of petersen satisfies the conjecture") {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    Graph g = Graph::from_edges(10, edges).complement();
    CHECK(max_stable_exact(g).size() == 2);
    auto res = min_ecc_exact(g);
    REQUIRE(res.optimal());
    CHECK(res.cover->size() <= 10);
}

TEST_CASE("lowerbound experiment produces certified rows") {
    LowerBoundReport report = lowerbound_experiment(3, {1, 5}, 3, 4000);
    REQUIRE(report.rows.size() == 2);

    const LowerBoundRow& trivial = report.rows[0];
    CHECK(trivial.witness_found);
    CHECK(trivial.n == 2);
    CHECK(trivial.cover_lower_bound == 1);

    const LowerBoundRow& c5ish = report.rows[1];
    CHECK(c5ish.witness_found);
    CHECK(c5ish.omega == 2); // the only 5-vertex witness shape is the 5-cycle
    CHECK(c5ish.alpha == 2);
    CHECK(c5ish.n == 10);
    CHECK(c5ish.cover_lower_bound == 7);
    REQUIRE(c5ish.oracle_min.has_value());
    CHECK(*c5ish.oracle_min >= c5ish.cover_lower_bound);
    CHECK(*c5ish.oracle_min == 8); // exact optimum of the C5 join

    std::string csv = lowerbound_csv(report);
    CHECK(csv.find("m,witness_found") == 0);
}

TEST_CASE("cover json round trips through verify-style parsing") {
    Graph g = complete_bipartite(2, 2);
    AlgorithmDef def{"quadratic", CoverParams(3, 2), true};
    SingleCover sc = run_algorithm(def, g);
    auto j = cover_json(sc.cover);
    CliqueCover back = cover_from_json(json::parse(j.dump()));
    CHECK(back.size() == sc.cover.size());
    CHECK(back.graph_hash == g.content_hash());
    CHECK(validate_cover(g, back).valid);
}
