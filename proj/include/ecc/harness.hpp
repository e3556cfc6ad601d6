#ifndef ECC_HARNESS_HPP
#define ECC_HARNESS_HPP

#include "ecc/cover.hpp"
#include "ecc/generators.hpp"
#include "ecc/graph.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecc {

// ---- algorithm dispatch ----------------------------------------------

struct AlgorithmDef {
    std::string name; // quadratic | threshold | peel22 | peel23 | partition-product
    CoverParams params;
    bool dedupe = true; // partition-product only

    std::string label() const;
};

struct SingleCover {
    CliqueCover cover;
    std::optional<CoverTrace> trace;
    BoundValue bound;
    std::string bound_kind;
};

SingleCover run_algorithm(const AlgorithmDef& algo, const Graph& g);

// ---- experiment sweeps --------------------------------------------------

struct InstanceDef {
    std::string id;
    Graph graph;
};

struct ExperimentSpec {
    std::vector<InstanceDef> instances;
    std::vector<AlgorithmDef> algorithms;
    int oracle_cutoff = 10;
    long long oracle_budget = 2'000'000;
    bool emit_covers = false;
    std::uint64_t seed = 0;
    std::vector<std::string> notes; // expansion notes, e.g. failed witness searches
};

// Spec JSON: {"seed", "oracle_cutoff", "oracle_budget", "emit_covers",
// "instances": [{"family": "kab"|"gnp"|"incidence"|"join", ...params}],
// "algorithms": [{"algo", "s", "t", "mode", "dedupe"}]}. Numeric instance
// params accept a scalar or an array (expanded in order); gnp accepts
// "seeds": k for k consecutive seeds starting at the spec seed.
ExperimentSpec parse_experiment_spec(const nlohmann::json& j,
                                     std::uint64_t default_seed);

struct ResultRow {
    std::string instance_id;
    int n = 0;
    long long edge_count = 0;
    std::string algorithm;
    int cover_size = 0;
    double bound = 0.0;
    bool bound_shape_only = false;
    std::string bound_kind;
    double bound_ratio = 0.0;
    std::optional<int> oracle_min;
    bool valid = false;
    double runtime_ms = 0.0; // stderr diagnostics only, never in canonical output
};

struct ExperimentResult {
    std::vector<ResultRow> rows;
    std::vector<CliqueCover> covers; // parallel to rows
    std::vector<std::string> notes;
};

// Thrown when a produced cover fails validation or undercuts the oracle;
// carries the offending run serialized as JSON.
struct ExperimentError : std::runtime_error {
    ExperimentError(const std::string& msg, std::string payload)
        : std::runtime_error(msg), trace_json(std::move(payload)) {}
    std::string trace_json;
};

ExperimentResult run_experiment(const ExperimentSpec& spec);

std::string experiment_csv(const ExperimentResult& r);
nlohmann::ordered_json experiment_json(const ExperimentSpec& spec,
                                       const ExperimentResult& r);

// ---- conjecture sweep (alpha <= 2 needs at most n cliques) ---------------

struct ConjectureRow {
    int n = 0;
    std::uint64_t graph_hash = 0;
    long long edges = 0;
    std::optional<int> min_ecc; // absent when the oracle budget ran out
    bool ok = false;
    bool skipped = false;
};

struct ConjectureReport {
    int max_n = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    std::vector<ConjectureRow> rows;
    long long checked = 0;
    long long violations = 0;
    long long skipped = 0;
};

// Graphs with alpha <= 2 are exactly complements of triangle-free graphs.
// Exhaustive (one representative per isomorphism class, by canonical-form
// deduplication) for n <= 7; seeded maximal-triangle-free samples for
// n in 8..max_n. Requires 1 <= max_n <= 9.
ConjectureReport conjecture_sweep(int max_n, int samples, std::uint64_t seed,
                                  long long oracle_budget = 2'000'000);

std::string conjecture_csv(const ConjectureReport& r);
nlohmann::ordered_json conjecture_json(const ConjectureReport& r);

// ---- join lower-bound experiment ---------------------------------------

struct LowerBoundRow {
    int m = 0;
    bool witness_found = false;
    int alpha = 0, omega = 0; // of the base witness
    int n = 0;
    long long cover_lower_bound = 0;
    double shape_value = 0.0; // n^(2-4/(s+1)) / (log2 n)^2, constant 1
    std::optional<int> oracle_min;
    long long iterations = 0;
};

struct LowerBoundReport {
    int s = 0;
    std::uint64_t seed = 0;
    std::vector<LowerBoundRow> rows;
};

// For each m: search for a witness (smallest certifiable max clique first),
// build the join, and record the certified lower bound next to the shape
// value and, when small enough, the exact oracle minimum.
LowerBoundReport lowerbound_experiment(int s, const std::vector<int>& sizes,
                                       std::uint64_t seed,
                                       long long max_iters = 20'000,
                                       int oracle_cutoff = 12,
                                       long long oracle_budget = 2'000'000);

std::string lowerbound_csv(const LowerBoundReport& r);
nlohmann::ordered_json lowerbound_json(const LowerBoundReport& r);

} // namespace ecc

#endif
