#include "ecc/json_io.hpp"

namespace ecc {

using nlohmann::ordered_json;

ordered_json clique_json(const Clique& c) { return ordered_json(c.members); }

ordered_json cover_json(const CliqueCover& cover) {
    ordered_json j;
    j["size"] = cover.size();
    ordered_json cliques = ordered_json::array();
    for (const auto& c : cover.cliques) cliques.push_back(clique_json(c));
    j["cliques"] = std::move(cliques);
    j["provenance"] = cover.provenance;
    j["graph_hash"] = cover.graph_hash;
    return j;
}

ordered_json trace_json(const CoverTrace& trace) {
    ordered_json steps = ordered_json::array();
    for (const auto& s : trace.steps) {
        ordered_json step;
        step["phase"] = s.phase;
        step["clique"] = clique_json(s.clique);
        step["new_edges"] = s.new_edges;
        if (s.trigger) step["trigger"] = *s.trigger;
        if (s.range_index) step["range"] = *s.range_index;
        steps.push_back(std::move(step));
    }
    ordered_json j;
    j["steps"] = std::move(steps);
    j["phase1_stalls_certified"] = trace.phase1_stalls_certified;
    return j;
}

ordered_json report_json(const CoverReport& report) {
    ordered_json j;
    j["valid"] = report.valid;
    j["size"] = report.size;
    j["non_clique_indices"] = report.non_clique_indices;
    ordered_json uncovered = ordered_json::array();
    for (auto [u, v] : report.uncovered_edges) uncovered.push_back({u, v});
    j["uncovered_edges"] = std::move(uncovered);
    return j;
}

CliqueCover cover_from_json(const nlohmann::json& j) {
    CliqueCover cover;
    for (const auto& c : j.at("cliques"))
        cover.cliques.push_back(Clique(c.get<std::vector<int>>()));
    if (j.contains("provenance"))
        cover.provenance = j["provenance"].get<std::vector<std::string>>();
    cover.provenance.resize(cover.cliques.size());
    if (j.contains("graph_hash")) cover.graph_hash = j["graph_hash"].get<std::uint64_t>();
    return cover;
}

ordered_json oracle_json(const Graph& g, long long node_budget) {
    ordered_json j;
    auto clique = max_clique_exact(g);
    auto stable = max_stable_exact(g);
    j["alpha"] = stable.size();
    j["omega"] = clique.size();
    EccResult ecc = min_ecc_exact(g, node_budget);
    if (ecc.optimal())
        j["min_ecc"] = ecc.cover->size();
    else
        j["min_ecc"] = nullptr;
    ordered_json witness;
    witness["max_clique"] = clique;
    witness["max_stable"] = stable;
    if (ecc.optimal()) {
        ordered_json cliques = ordered_json::array();
        for (const auto& c : ecc.cover->cliques) cliques.push_back(clique_json(c));
        witness["min_cover"] = std::move(cliques);
    } else {
        witness["min_cover"] = nullptr;
    }
    j["witness_sets"] = std::move(witness);
    j["budget_exceeded"] = ecc.budget_exceeded;
    return j;
}

} // namespace ecc
