#include "ecc/harness.hpp"

#include "ecc/json_io.hpp"
#include "ecc/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

namespace ecc {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

std::string mode_str(Mode m) { return m == Mode::Paper ? "paper" : "practical"; }

Mode mode_from_string(const std::string& s) {
    if (s == "paper") return Mode::Paper;
    if (s == "practical") return Mode::Practical;
    throw std::invalid_argument("unknown mode: " + s + " (want paper|practical)");
}

} // namespace

// ---- algorithm dispatch ---------------------------------------------------

std::string AlgorithmDef::label() const {
    if (name == "quadratic") return name;
    std::string l = name + "(";
    if (name == "threshold")
        l += "s=" + std::to_string(params.s) + ",t=" + std::to_string(params.t) + ",";
    if (name == "partition-product")
        l += "s=" + std::to_string(params.s) + ",";
    l += mode_str(params.mode);
    if (name == "partition-product") l += dedupe ? ",dedupe" : ",nodedupe";
    return l + ")";
}

SingleCover run_algorithm(const AlgorithmDef& algo, const Graph& g) {
    SingleCover out;
    long long n = g.vertex_count();
    if (algo.name == "quadratic") {
        out.cover = quadratic_baseline_cover(g);
        out.bound = bound_value(BoundKind::Quadratic, n);
        out.bound_kind = "quadratic";
    } else if (algo.name == "threshold") {
        CoverRun run = greedy_threshold_cover(g, algo.params);
        out.cover = std::move(run.cover);
        out.trace = std::move(run.trace);
        if (algo.params.s >= 3 && algo.params.t >= 2) {
            out.bound = bound_value(BoundKind::MainST, n, algo.params.s, algo.params.t);
            out.bound_kind = "main_st";
        } else {
            out.bound = bound_value(BoundKind::Quadratic, n);
            out.bound_kind = "quadratic";
        }
    } else if (algo.name == "peel22" || algo.name == "peel23") {
        PeelVariant variant =
            algo.name == "peel22" ? PeelVariant::K22 : PeelVariant::K23;
        CoverRun run = mindeg_peeling_cover(g, variant, algo.params);
        out.cover = std::move(run.cover);
        out.trace = std::move(run.trace);
        if (algo.name == "peel22") {
            out.bound = bound_value(BoundKind::K22, n);
            out.bound_kind = "k22";
        } else if (n >= 2) {
            out.bound = bound_value(BoundKind::K23, n);
            out.bound_kind = "k23";
        } else {
            out.bound = bound_value(BoundKind::Quadratic, n);
            out.bound_kind = "quadratic";
        }
    } else if (algo.name == "partition-product") {
        CliquePartition parts = clique_partition(g, algo.params.s, algo.params);
        out.cover = partition_product_cover(g, parts, algo.dedupe);
        if (algo.params.s >= 3 && n >= 2) {
            out.bound = bound_value(BoundKind::Ks1, n, algo.params.s);
            out.bound_kind = "ks1";
        } else {
            out.bound = bound_value(BoundKind::Quadratic, n);
            out.bound_kind = "quadratic";
        }
    } else {
        throw std::invalid_argument("unknown algorithm: " + algo.name);
    }
    return out;
}

// ---- spec parsing -----------------------------------------------------------

namespace {

template <typename T>
std::vector<T> expand_values(const json& inst, const char* key,
                             std::optional<T> fallback = std::nullopt) {
    if (!inst.contains(key)) {
        if (fallback) return {*fallback};
        throw std::invalid_argument(std::string("instance missing field: ") + key);
    }
    const json& v = inst.at(key);
    if (v.is_array()) return v.get<std::vector<T>>();
    return {v.get<T>()};
}

AlgorithmDef parse_algorithm(const json& a) {
    AlgorithmDef def;
    def.name = a.at("algo").get<std::string>();
    int s = a.value("s", 3);
    int t = a.value("t", 2);
    Mode mode = mode_from_string(a.value("mode", std::string("paper")));
    def.params = CoverParams(s, t, mode);
    if (a.contains("remainder_factor"))
        def.params.remainder_factor = a["remainder_factor"].get<double>();
    if (a.contains("partition_factor"))
        def.params.partition_factor = a["partition_factor"].get<double>();
    def.dedupe = a.value("dedupe", true);
    return def;
}

} // namespace

ExperimentSpec parse_experiment_spec(const json& j, std::uint64_t default_seed) {
    ExperimentSpec spec;
    spec.seed = j.value("seed", default_seed);
    spec.oracle_cutoff = j.value("oracle_cutoff", 10);
    spec.oracle_budget = j.value("oracle_budget", (long long)2'000'000);
    spec.emit_covers = j.value("emit_covers", false);

    for (const json& inst : j.value("instances", json::array())) {
        std::string family = inst.at("family").get<std::string>();
        if (family == "kab") {
            for (int a : expand_values<int>(inst, "a"))
                for (int b : expand_values<int>(inst, "b"))
                    spec.instances.push_back(
                        {"kab(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")",
                         complete_bipartite(a, b)});
        } else if (family == "gnp") {
            std::vector<std::uint64_t> seeds;
            if (inst.contains("seeds")) {
                int k = inst["seeds"].get<int>();
                for (int i = 0; i < k; ++i) seeds.push_back(spec.seed + i);
            } else {
                seeds = expand_values<std::uint64_t>(inst, "seed",
                                                     std::optional<std::uint64_t>(spec.seed));
            }
            for (int n : expand_values<int>(inst, "n"))
                for (double p : expand_values<double>(inst, "p"))
                    for (std::uint64_t sd : seeds)
                        spec.instances.push_back(
                            {"gnp(n=" + std::to_string(n) + ",p=" + fmt_double(p) +
                                 ",seed=" + std::to_string(sd) + ")",
                             random_gnp(n, p, sd)});
        } else if (family == "incidence") {
            for (int q : expand_values<int>(inst, "q"))
                spec.instances.push_back(
                    {"incidence(q=" + std::to_string(q) + ")", incidence_c4free(q)});
        } else if (family == "join") {
            int s = inst.at("s").get<int>();
            int maxw = inst.at("max_omega").get<int>();
            long long iters = inst.value("max_iters", (long long)20'000);
            std::uint64_t sd = inst.value("seed", spec.seed);
            for (int m : expand_values<int>(inst, "m")) {
                auto w = ramsey_search(m, s, maxw, sd, iters);
                std::string id = "join(m=" + std::to_string(m) + ",s=" + std::to_string(s) +
                                 ",maxw=" + std::to_string(maxw) + ",seed=" + std::to_string(sd) + ")";
                if (!w) {
                    spec.notes.push_back(id + ": witness search failed after " +
                                         std::to_string(iters) + " iterations");
                    continue;
                }
                spec.instances.push_back({id, join_lowerbound(*w).joined});
            }
        } else {
            throw std::invalid_argument("unknown instance family: " + family);
        }
    }

    for (const json& a : j.value("algorithms", json::array()))
        spec.algorithms.push_back(parse_algorithm(a));
    return spec;
}

// ---- experiment driver ---------------------------------------------------------

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    ExperimentResult result;
    result.notes = spec.notes;
    for (const InstanceDef& inst : spec.instances) {
        const Graph& g = inst.graph;
        std::optional<int> oracle_min;
        if (g.vertex_count() <= spec.oracle_cutoff) {
            EccResult ecc = min_ecc_exact(g, spec.oracle_budget);
            if (ecc.optimal())
                oracle_min = ecc.cover->size();
            else
                result.notes.push_back(inst.id + ": oracle budget exceeded");
        }
        for (const AlgorithmDef& algo : spec.algorithms) {
            auto t0 = std::chrono::steady_clock::now();
            SingleCover sc = run_algorithm(algo, g);
            auto t1 = std::chrono::steady_clock::now();

            CoverReport rep = validate_cover(g, sc.cover);
            if (!rep.valid) {
                ordered_json payload;
                payload["instance"] = inst.id;
                payload["algorithm"] = algo.label();
                payload["report"] = report_json(rep);
                payload["cover"] = cover_json(sc.cover);
                if (sc.trace) payload["trace"] = trace_json(*sc.trace);
                throw ExperimentError("invalid cover from " + algo.label() + " on " + inst.id,
                                      payload.dump(2));
            }
            if (oracle_min && sc.cover.size() < *oracle_min) {
                ordered_json payload;
                payload["instance"] = inst.id;
                payload["algorithm"] = algo.label();
                payload["cover"] = cover_json(sc.cover);
                payload["oracle_min"] = *oracle_min;
                throw ExperimentError("cover beats the exact oracle; validation bug",
                                      payload.dump(2));
            }

            ResultRow row;
            row.instance_id = inst.id;
            row.n = g.vertex_count();
            row.edge_count = g.edge_count();
            row.algorithm = algo.label();
            row.cover_size = sc.cover.size();
            row.bound = sc.bound.value;
            row.bound_shape_only = sc.bound.shape_only;
            row.bound_kind = sc.bound_kind;
            row.bound_ratio = sc.bound.value > 0 ? sc.cover.size() / sc.bound.value : 0.0;
            row.oracle_min = oracle_min;
            row.valid = true;
            row.runtime_ms =
                std::chrono::duration<double, std::milli>(t1 - t0).count();
            result.rows.push_back(std::move(row));
            result.covers.push_back(std::move(sc.cover));
        }
    }
    return result;
}

std::string experiment_csv(const ExperimentResult& r) {
    std::ostringstream out;
    out << "instance,n,edge_count,algorithm,cover_size,bound_kind,bound_value,"
           "bound_shape_only,bound_ratio,oracle_min,valid\n";
    for (const ResultRow& row : r.rows) {
        out << row.instance_id << ',' << row.n << ',' << row.edge_count << ','
            << row.algorithm << ',' << row.cover_size << ',' << row.bound_kind << ','
            << fmt_double(row.bound) << ',' << (row.bound_shape_only ? 1 : 0) << ','
            << fmt_double(row.bound_ratio) << ',';
        if (row.oracle_min) out << *row.oracle_min;
        out << ',' << (row.valid ? 1 : 0) << '\n';
    }
    return out.str();
}

ordered_json experiment_json(const ExperimentSpec& spec, const ExperimentResult& r) {
    ordered_json j;
    j["seed"] = spec.seed;
    j["oracle_cutoff"] = spec.oracle_cutoff;
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        const ResultRow& row = r.rows[i];
        ordered_json rj;
        rj["instance"] = row.instance_id;
        rj["n"] = row.n;
        rj["edge_count"] = row.edge_count;
        rj["algorithm"] = row.algorithm;
        rj["cover_size"] = row.cover_size;
        rj["bound_kind"] = row.bound_kind;
        rj["bound_value"] = row.bound;
        rj["bound_shape_only"] = row.bound_shape_only;
        rj["bound_ratio"] = row.bound_ratio;
        if (row.oracle_min)
            rj["oracle_min"] = *row.oracle_min;
        else
            rj["oracle_min"] = nullptr;
        rj["valid"] = row.valid;
        if (spec.emit_covers) rj["cover"] = cover_json(r.covers[i]);
        rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
    j["notes"] = r.notes;
    return j;
}

// ---- conjecture sweep ------------------------------------------------------------

namespace {

// Upper-triangle pair indexing for small-graph masks.
int pair_index(int i, int j, int n) {
    // i < j
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::uint32_t permute_mask(std::uint32_t mask, const std::vector<int>& p, int n) {
    std::uint32_t out = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (!(mask >> pair_index(i, j, n) & 1)) continue;
            int a = p[i], b = p[j];
            if (a > b) std::swap(a, b);
            out |= std::uint32_t(1) << pair_index(a, b, n);
        }
    return out;
}

std::uint32_t canonical_mask(std::uint32_t mask, int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::uint32_t best = mask;
    while (std::next_permutation(p.begin(), p.end()))
        best = std::min(best, permute_mask(mask, p, n));
    return best;
}

Graph mask_to_graph(std::uint32_t mask, int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mask >> pair_index(i, j, n) & 1) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

// One canonical representative per isomorphism class of triangle-free graphs,
// per vertex count 1..up_to. Built by vertex extension: every triangle-free
// graph arises from a smaller one by adding a vertex whose neighborhood is a
// stable set.
std::vector<std::vector<std::uint32_t>> trianglefree_canonical(int up_to) {
    std::vector<std::vector<std::uint32_t>> levels(up_to + 1);
    if (up_to >= 1) levels[1] = {0};
    for (int k = 1; k < up_to; ++k) {
        std::set<std::uint32_t> next;
        for (std::uint32_t mask : levels[k]) {
            // adjacency rows of the k-vertex graph
            std::vector<std::uint32_t> adj(k, 0);
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j)
                    if (mask >> pair_index(i, j, k) & 1) {
                        adj[i] |= 1u << j;
                        adj[j] |= 1u << i;
                    }
            for (std::uint32_t nb = 0; nb < (1u << k); ++nb) {
                bool stable = true;
                for (int i = 0; i < k && stable; ++i)
                    if (nb >> i & 1 && (adj[i] & nb)) stable = false;
                if (!stable) continue;
                std::uint32_t ext = 0;
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j)
                        if (mask >> pair_index(i, j, k) & 1)
                            ext |= std::uint32_t(1) << pair_index(i, j, k + 1);
                for (int i = 0; i < k; ++i)
                    if (nb >> i & 1)
                        ext |= std::uint32_t(1) << pair_index(i, k, k + 1);
                next.insert(canonical_mask(ext, k + 1));
            }
        }
        levels[k + 1].assign(next.begin(), next.end());
    }
    return levels;
}

Graph sample_maximal_trianglefree(int n, std::mt19937_64& rng) {
    std::vector<Edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    for (std::size_t i = pairs.size(); i > 1; --i)
        std::swap(pairs[i - 1], pairs[rng() % i]);
    std::vector<Bitset> adj(n, Bitset(n));
    std::vector<Edge> chosen;
    for (auto [u, v] : pairs) {
        if (adj[u].intersects(adj[v])) continue; // would close a triangle
        adj[u].set(v);
        adj[v].set(u);
        chosen.emplace_back(u, v);
    }
    return Graph::from_edges(n, chosen);
}

} // namespace

ConjectureReport conjecture_sweep(int max_n, int samples, std::uint64_t seed,
                                  long long oracle_budget) {
    if (max_n < 1 || max_n > 9)
        throw std::invalid_argument("conjecture_sweep: max_n must be in [1,9]");
    ConjectureReport report;
    report.max_n = max_n;
    report.samples = samples;
    report.seed = seed;

    auto record = [&](const Graph& complement_of_tf) {
        const Graph& g = complement_of_tf;
        ConjectureRow row;
        row.n = g.vertex_count();
        row.graph_hash = g.content_hash();
        row.edges = g.edge_count();
        EccResult ecc = min_ecc_exact(g, oracle_budget);
        if (!ecc.optimal()) {
            row.skipped = true;
            ++report.skipped;
        } else {
            row.min_ecc = ecc.cover->size();
            row.ok = *row.min_ecc <= row.n;
            ++report.checked;
            if (!row.ok) ++report.violations;
        }
        report.rows.push_back(std::move(row));
    };

    int exhaustive_to = std::min(max_n, 7);
    auto levels = trianglefree_canonical(exhaustive_to);
    for (int n = 1; n <= exhaustive_to; ++n)
        for (std::uint32_t mask : levels[n]) record(mask_to_graph(mask, n).complement());

    std::mt19937_64 rng(seed);
    for (int n = 8; n <= max_n; ++n)
        for (int i = 0; i < samples; ++i)
            record(sample_maximal_trianglefree(n, rng).complement());
    return report;
}

std::string conjecture_csv(const ConjectureReport& r) {
    std::ostringstream out;
    out << "n,graph_hash,edges,min_ecc,ok,skipped\n";
    for (const ConjectureRow& row : r.rows) {
        out << row.n << ',' << row.graph_hash << ',' << row.edges << ',';
        if (row.min_ecc) out << *row.min_ecc;
        out << ',' << (row.ok ? 1 : 0) << ',' << (row.skipped ? 1 : 0) << '\n';
    }
    return out.str();
}

ordered_json conjecture_json(const ConjectureReport& r) {
    ordered_json j;
    j["max_n"] = r.max_n;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["checked"] = r.checked;
    j["violations"] = r.violations;
    j["skipped"] = r.skipped;
    ordered_json rows = ordered_json::array();
    for (const ConjectureRow& row : r.rows) {
        ordered_json rj;
        rj["n"] = row.n;
        rj["graph_hash"] = row.graph_hash;
        rj["edges"] = row.edges;
        if (row.min_ecc)
            rj["min_ecc"] = *row.min_ecc;
        else
            rj["min_ecc"] = nullptr;
        rj["ok"] = row.ok;
        rj["skipped"] = row.skipped;
        rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
    return j;
}

// ---- join lower-bound experiment -----------------------------------------------

LowerBoundReport lowerbound_experiment(int s, const std::vector<int>& sizes,
                                       std::uint64_t seed, long long max_iters,
                                       int oracle_cutoff, long long oracle_budget) {
    if (s < 3) throw std::invalid_argument("lowerbound_experiment: need s >= 3");
    LowerBoundReport report;
    report.s = s;
    report.seed = seed;
    const long long probe_iters = std::min<long long>(max_iters, 1500);

    for (int m : sizes) {
        LowerBoundRow row;
        row.m = m;
        std::optional<RamseyWitness> witness;
        long long spent = 0;
        for (int w = 1; w <= m && !witness; ++w) {
            long long budget = (w == m) ? max_iters : probe_iters;
            witness = ramsey_search(m, s, w, seed, budget);
            spent += witness ? witness->iterations_used : budget;
        }
        row.iterations = spent;
        if (!witness) {
            report.rows.push_back(std::move(row));
            continue;
        }
        row.witness_found = true;
        row.alpha = int(max_stable_exact(witness->graph).size());
        row.omega = witness->omega;
        LowerBoundInstance inst = join_lowerbound(*witness);
        row.n = inst.joined.vertex_count();
        row.cover_lower_bound = inst.cover_lower_bound;
        row.shape_value =
            row.n >= 2 ? bound_value(BoundKind::LowerStable, row.n, s).value : 0.0;
        if (row.n <= oracle_cutoff) {
            EccResult ecc = min_ecc_exact(inst.joined, oracle_budget);
            if (ecc.optimal()) row.oracle_min = ecc.cover->size();
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string lowerbound_csv(const LowerBoundReport& r) {
    std::ostringstream out;
    out << "m,witness_found,alpha,omega,n,cover_lower_bound,shape_value,oracle_min,"
           "iterations\n";
    for (const LowerBoundRow& row : r.rows) {
        out << row.m << ',' << (row.witness_found ? 1 : 0) << ',' << row.alpha << ','
            << row.omega << ',' << row.n << ',' << row.cover_lower_bound << ','
            << fmt_double(row.shape_value) << ',';
        if (row.oracle_min) out << *row.oracle_min;
        out << ',' << row.iterations << '\n';
    }
    return out.str();
}

ordered_json lowerbound_json(const LowerBoundReport& r) {
    ordered_json j;
    j["s"] = r.s;
    j["seed"] = r.seed;
    ordered_json rows = ordered_json::array();
    for (const LowerBoundRow& row : r.rows) {
        ordered_json rj;
        rj["m"] = row.m;
        rj["witness_found"] = row.witness_found;
        rj["alpha"] = row.alpha;
        rj["omega"] = row.omega;
        rj["n"] = row.n;
        rj["cover_lower_bound"] = row.cover_lower_bound;
        rj["shape_value"] = row.shape_value;
        if (row.oracle_min)
            rj["oracle_min"] = *row.oracle_min;
        else
            rj["oracle_min"] = nullptr;
        rj["iterations"] = row.iterations;
        rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
    return j;
}

} // namespace ecc
