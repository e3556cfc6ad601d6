#ifndef ECC_COVER_HPP
#define ECC_COVER_HPP

#include "ecc/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ecc {

enum class Mode { Paper, Practical };

// Parameters shared by the covering procedures. d = 1/(s+t) is never stored;
// thresholds are recomputed from the vertex count they apply to, in exact
// integer arithmetic.
struct CoverParams {
    int s = 3;
    int t = 2;
    Mode mode = Mode::Paper;
    double remainder_factor = 4.0; // peeling switches to singletons below rf*sqrt(n')
    double partition_factor = 1.0; // clique-partition size threshold scale

    CoverParams() = default;
    CoverParams(int s, int t, Mode mode = Mode::Paper);

    int exponent_denominator() const { return s + t; }

    // ceil(n^(1/(s+t))), exact
    long long phase1_threshold(long long n) const;
    // deg <= n^(1-1/(s+t)), exact while the powers fit 128 bits
    bool phase2_light(long long deg, long long n) const;

    double effective_remainder_factor() const {
        return mode == Mode::Practical ? 0.0 : remainder_factor;
    }
    double effective_partition_factor() const {
        return mode == Mode::Practical ? 0.0 : partition_factor;
    }
};

struct TraceStep {
    std::string phase; // phase1 | phase2 | fallback | peel-clique | peel-singleton
    Clique clique;
    long long new_edges = 0;
    std::optional<int> trigger;     // phase-2 vertex or peel vertex
    std::optional<int> range_index; // dyadic |M| range during peeling
};

struct CoverTrace {
    std::vector<TraceStep> steps;
    // False when practical-mode heavy-clique search may have missed a clique,
    // so a phase-1 stall is not a certificate.
    bool phase1_stalls_certified = true;
};

struct CoverRun {
    CliqueCover cover;
    CoverTrace trace;
};

// Pairwise-disjoint cliques whose union is the whole vertex set.
struct CliquePartition {
    std::vector<Clique> parts;
};

// Pick an edge xy, cover every edge at x or y with the common-neighbor
// triangles plus pendant pairs, delete x and y, repeat. Size <= floor(n^2/4).
CliqueCover quadratic_baseline_cover(const Graph& g);

// A clique of g covering at least `threshold` edges of h, or nullopt.
// Paper mode: exact branch-and-bound maximizing covered h-edges (nullopt is a
// certificate). Practical mode: greedy growth from each h-edge seed; may miss.
std::optional<Clique> find_heavy_clique(const Graph& h, const Graph& g,
                                        long long threshold, Mode mode);

// Phase 1: repeatedly add a clique covering >= ceil(n^d) new edges.
// Phase 2: while some vertex has between 1 and n^(1-d) uncovered incident
// edges, cover them with single edges. Phases loop until done; if both stall
// with edges left, one arbitrary uncovered edge is emitted to force progress.
CoverRun greedy_threshold_cover(const Graph& g, const CoverParams& p);

enum class PeelVariant { K22, K23 };

// Peel a minimum-uncovered-degree vertex v: cover its neighborhood D by
// greedily extracted maximum cliques while more than rf*sqrt(n') vertices of
// D remain, then singletons; emit {v} union part; repeat on the rest.
CoverRun mindeg_peeling_cover(const Graph& g, PeelVariant variant,
                              const CoverParams& p);

// Repeatedly extract maximum cliques of size >=
// factor * w^(1/(s-1)) * (log2 w)^((s-2)/(s-1)) at the current level, then
// recurse on the remainder with the threshold recomputed. If a level extracts
// nothing, one maximum clique is removed so the recursion always progresses.
CliquePartition clique_partition(const Graph& g, int s, const CoverParams& p);

// Cover { A_v : v in V, A in parts } with A_v = {v} union (N(v) ∩ A),
// restricted to |A_v| >= 2. With dedupe, duplicates and cliques covering no
// new edge (scanned in generation order) are dropped.
CliqueCover partition_product_cover(const Graph& g, const CliquePartition& parts,
                                    bool dedupe);

enum class BoundKind { Quadratic, MainST, Ks1, K22, K23, LowerStable };

struct BoundValue {
    double value = 0.0;
    bool shape_only = false; // an O(.) shape scaled by a caller constant
};

// Closed-form size bounds; logarithms are base 2. Shape-only kinds multiply
// an unspecified constant supplied by the caller.
BoundValue bound_value(BoundKind kind, long long n, int s = 0, int t = 0,
                       double constant = 1.0);

// ---- trace verification ------------------------------------------------

struct TraceCheckResult {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string msg) {
        ok = false;
        violations.push_back(std::move(msg));
    }
};

// Replays a greedy_threshold_cover trace: per-step new-edge counts, the
// phase-1 threshold, phase-2 lightness at selection, and (optionally) an
// exact no-heavy-clique confirmation at every phase-2 step.
TraceCheckResult check_threshold_trace(const Graph& g, const CoverParams& p,
                                       const CoverTrace& trace,
                                       bool posthoc_exact);

// Replays a mindeg_peeling_cover trace: each peel's trigger must have the
// minimum positive uncovered degree when selected.
TraceCheckResult check_peeling_trace(const Graph& g, const CoverTrace& trace);

} // namespace ecc

#endif
