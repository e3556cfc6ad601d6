// lab: generate instances, run covering algorithms, query the exact oracles,
// and drive reproducible experiment sweeps. All outputs are deterministic
// given the seed; exit status is nonzero iff a validity check fails.

#include "ecc/cover.hpp"
#include "ecc/edgelist.hpp"
#include "ecc/generators.hpp"
#include "ecc/harness.hpp"
#include "ecc/json_io.hpp"
#include "ecc/oracles.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& cli_seed) {
    if (cli_seed) return *cli_seed;
    if (const char* env = std::getenv("LAB_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 0;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

int cmd_gen(const std::string& family, int a, int b, int n, double p, int q, int m,
            int s, int max_omega, long long max_iters,
            const std::optional<std::uint64_t>& seed_opt, const std::string& out) {
    std::uint64_t seed = resolve_seed(seed_opt);
    ecc::Graph g;
    ordered_json side;
    side["family"] = family;
    if (family == "kab") {
        g = ecc::complete_bipartite(a, b);
        side["a"] = a;
        side["b"] = b;
        side["alpha"] = std::max(a, b);
        side["omega"] = (a >= 1 && b >= 1) ? 2 : (a + b >= 1 ? 1 : 0);
    } else if (family == "gnp") {
        g = ecc::random_gnp(n, p, seed);
        side["p"] = p;
        side["seed"] = seed;
    } else if (family == "incidence") {
        g = ecc::incidence_c4free(q);
        side["q"] = q;
        side["degree"] = q + 1;
        side["k22_free"] = !ecc::contains_induced_kst(g, 2, 2);
    } else if (family == "join") {
        auto witness = ecc::ramsey_search(m, s, max_omega, seed, max_iters);
        if (!witness) {
            std::cerr << "witness search failed: m=" << m << " s=" << s
                      << " max_omega=" << max_omega << " after " << max_iters
                      << " iterations\n";
            return 2;
        }
        ecc::LowerBoundInstance inst = ecc::join_lowerbound(*witness);
        g = inst.joined;
        side["m"] = m;
        side["s"] = s;
        side["max_omega"] = max_omega;
        side["seed"] = seed;
        side["iterations"] = witness->iterations_used;
        side["alpha_base"] = ecc::max_stable_exact(witness->graph).size();
        side["omega_base"] = witness->omega;
        side["cross_edges"] = inst.cross_edges;
        side["clique_cross_cap"] = inst.clique_cross_cap;
        side["cover_lower_bound"] = inst.cover_lower_bound;
        if (g.vertex_count() <= 24) {
            side["alpha_join"] = ecc::max_stable_exact(g).size();
            side["omega_join"] = ecc::max_clique_exact(g).size();
        }
    } else {
        std::cerr << "unknown family: " << family << "\n";
        return 2;
    }
    side["n"] = g.vertex_count();
    side["edge_count"] = g.edge_count();
    side["graph_hash"] = g.content_hash();
    write_text(out, ecc::write_edge_list(g));
    if (!out.empty() && out != "-")
        write_text(out + ".json", side.dump(2) + "\n");
    else
        std::cerr << side.dump(2) << "\n";
    return 0;
}

int cmd_cover(const std::string& input, const std::string& out,
              const std::string& algo, int s, int t, const std::string& mode,
              bool nodedupe, const std::optional<std::uint64_t>& seed_opt) {
    ecc::Graph g = ecc::read_edge_list_file(input);
    ecc::AlgorithmDef def;
    def.name = algo;
    def.params = ecc::CoverParams(
        s, t, mode == "practical" ? ecc::Mode::Practical : ecc::Mode::Paper);
    def.dedupe = !nodedupe;
    ecc::SingleCover sc = ecc::run_algorithm(def, g);
    ecc::CoverReport rep = ecc::validate_cover(g, sc.cover);

    ordered_json j;
    j["algorithm"] = def.label();
    ordered_json params;
    params["s"] = s;
    params["t"] = t;
    params["mode"] = mode;
    params["seed"] = resolve_seed(seed_opt);
    j["params"] = std::move(params);
    j["size"] = sc.cover.size();
    ordered_json cliques = ordered_json::array();
    for (const auto& c : sc.cover.cliques) cliques.push_back(ecc::clique_json(c));
    j["cliques"] = std::move(cliques);
    j["provenance"] = sc.cover.provenance;
    if (sc.trace)
        j["trace"] = ecc::trace_json(*sc.trace);
    else
        j["trace"] = nullptr;
    ordered_json bound;
    bound["kind"] = sc.bound_kind;
    bound["value"] = sc.bound.value;
    bound["shape_only"] = sc.bound.shape_only;
    j["bound"] = std::move(bound);
    j["bound_ratio"] = sc.bound.value > 0 ? sc.cover.size() / sc.bound.value : 0.0;
    j["valid"] = rep.valid;
    j["graph_hash"] = g.content_hash();
    write_text(out, j.dump(2) + "\n");
    return rep.valid ? 0 : 1;
}

int cmd_exact(const std::string& input, long long budget, const std::string& out) {
    ecc::Graph g = ecc::read_edge_list_file(input);
    ordered_json j = ecc::oracle_json(g, budget);
    j["graph_hash"] = g.content_hash();
    write_text(out, j.dump(2) + "\n");
    return 0;
}

int cmd_verify(const std::string& input, const std::string& cover_path) {
    ecc::Graph g = ecc::read_edge_list_file(input);
    json cj = load_json_file(cover_path);
    ecc::CliqueCover cover = ecc::cover_from_json(cj);
    bool hash_ok = cover.graph_hash == 0 || cover.graph_hash == g.content_hash();
    ecc::CoverReport rep = ecc::validate_cover(g, cover);
    ordered_json j = ecc::report_json(rep);
    j["graph_hash_matches"] = hash_ok;
    std::cout << j.dump(2) << "\n";
    return (rep.valid && hash_ok) ? 0 : 1;
}

int cmd_experiment(const std::string& spec_path, const std::string& out,
                   const std::string& json_out, bool emit_covers,
                   const std::optional<std::uint64_t>& seed_opt) {
    json spec_json = load_json_file(spec_path);
    if (spec_json.contains("lowerbound")) {
        const json& lb = spec_json["lowerbound"];
        ecc::LowerBoundReport report = ecc::lowerbound_experiment(
            lb.at("s").get<int>(), lb.at("sizes").get<std::vector<int>>(),
            lb.value("seed", resolve_seed(seed_opt)),
            lb.value("max_iters", (long long)20'000), lb.value("oracle_cutoff", 12),
            lb.value("oracle_budget", (long long)2'000'000));
        write_text(out, ecc::lowerbound_csv(report));
        if (!json_out.empty())
            write_text(json_out, ecc::lowerbound_json(report).dump(2) + "\n");
        return 0;
    }
    ecc::ExperimentSpec spec =
        ecc::parse_experiment_spec(spec_json, resolve_seed(seed_opt));
    if (emit_covers) spec.emit_covers = true;
    try {
        ecc::ExperimentResult result = ecc::run_experiment(spec);
        write_text(out, ecc::experiment_csv(result));
        if (!json_out.empty())
            write_text(json_out, ecc::experiment_json(spec, result).dump(2) + "\n");
        double total_ms = 0;
        for (const auto& row : result.rows) total_ms += row.runtime_ms;
        std::cerr << result.rows.size() << " rows, " << total_ms << " ms total\n";
        for (const auto& note : result.notes) std::cerr << "note: " << note << "\n";
        return 0;
    } catch (const ecc::ExperimentError& err) {
        std::cerr << "experiment aborted: " << err.what() << "\n"
                  << err.trace_json << "\n";
        return 1;
    }
}

int cmd_conjecture(int max_n, int samples, const std::optional<std::uint64_t>& seed_opt,
                   const std::string& out, const std::string& json_out) {
    ecc::ConjectureReport report =
        ecc::conjecture_sweep(max_n, samples, resolve_seed(seed_opt));
    write_text(out, ecc::conjecture_csv(report));
    if (!json_out.empty())
        write_text(json_out, ecc::conjecture_json(report).dump(2) + "\n");
    std::cerr << "checked " << report.checked << " graphs, " << report.violations
              << " violations, " << report.skipped << " skipped\n";
    if (report.violations > 0) {
        std::cerr << "CONJECTURE VIOLATION FOUND\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"clique-cover laboratory"};
    app.require_subcommand(1);

    std::optional<std::uint64_t> seed;

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance family member");
    std::string family, gen_out;
    int a = 2, b = 2, n = 10, q = 3, m = 5, gen_s = 3, max_omega = 2;
    double p = 0.5;
    long long max_iters = 20'000;
    gen->add_option("--family", family, "kab|gnp|incidence|join")->required();
    gen->add_option("--a", a);
    gen->add_option("--b", b);
    gen->add_option("--n", n);
    gen->add_option("--p", p);
    gen->add_option("--q", q);
    gen->add_option("--m", m);
    gen->add_option("--s", gen_s);
    gen->add_option("--max-omega", max_omega);
    gen->add_option("--max-iters", max_iters);
    gen->add_option("--seed", seed);
    gen->add_option("-o,--output", gen_out, "edge list path; sidecar <path>.json");

    // cover
    auto* cover = app.add_subcommand("cover", "run a covering algorithm");
    std::string cov_in, cov_out, algo, mode = "paper";
    int cov_s = 3, cov_t = 2;
    bool nodedupe = false;
    cover->add_option("-i,--input", cov_in, "edge list file")->required();
    cover->add_option("-o,--output", cov_out);
    cover->add_option("--algo", algo,
                      "quadratic|threshold|peel22|peel23|partition-product")
        ->required();
    cover->add_option("--s", cov_s);
    cover->add_option("--t", cov_t);
    cover->add_option("--mode", mode, "paper|practical");
    cover->add_flag("--no-dedupe", nodedupe, "keep duplicate product cliques");
    cover->add_option("--seed", seed);

    // exact
    auto* exact = app.add_subcommand("exact", "exact oracle report");
    std::string ex_in, ex_out;
    long long budget = 2'000'000;
    exact->add_option("-i,--input", ex_in)->required();
    exact->add_option("-o,--output", ex_out);
    exact->add_option("--budget", budget, "node budget for the cover oracle");

    // verify
    auto* verify = app.add_subcommand("verify", "validate a cover JSON against a graph");
    std::string ver_in, ver_cover;
    verify->add_option("-i,--input", ver_in)->required();
    verify->add_option("--cover", ver_cover)->required();

    // experiment
    auto* experiment = app.add_subcommand("experiment", "run a sweep from a spec file");
    std::string spec_path, exp_out, exp_json;
    bool emit_covers = false;
    experiment->add_option("--spec", spec_path)->required();
    experiment->add_option("-o,--output", exp_out, "CSV output (default stdout)");
    experiment->add_option("--json", exp_json, "JSON output path");
    experiment->add_flag("--emit-covers", emit_covers);
    experiment->add_option("--seed", seed);

    // conjecture
    auto* conjecture =
        app.add_subcommand("conjecture", "sweep graphs with alpha <= 2 for covers of size > n");
    int max_n = 7, samples = 25;
    std::string con_out, con_json;
    conjecture->add_option("--max-n", max_n)->required();
    conjecture->add_option("--samples", samples, "samples per n above 7");
    conjecture->add_option("--seed", seed);
    conjecture->add_option("-o,--output", con_out);
    conjecture->add_option("--json", con_json);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(family, a, b, n, p, q, m, gen_s, max_omega, max_iters, seed,
                           gen_out);
        if (cover->parsed())
            return cmd_cover(cov_in, cov_out, algo, cov_s, cov_t, mode, nodedupe, seed);
        if (exact->parsed()) return cmd_exact(ex_in, budget, ex_out);
        if (verify->parsed()) return cmd_verify(ver_in, ver_cover);
        if (experiment->parsed())
            return cmd_experiment(spec_path, exp_out, exp_json, emit_covers, seed);
        if (conjecture->parsed())
            return cmd_conjecture(max_n, samples, seed, con_out, con_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
