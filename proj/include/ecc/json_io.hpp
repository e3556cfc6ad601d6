#ifndef ECC_JSON_IO_HPP
#define ECC_JSON_IO_HPP

#include "ecc/cover.hpp"
#include "ecc/graph.hpp"
#include "ecc/oracles.hpp"

#include <json.hpp>

namespace ecc {

nlohmann::ordered_json clique_json(const Clique& c);
nlohmann::ordered_json cover_json(const CliqueCover& cover);
nlohmann::ordered_json trace_json(const CoverTrace& trace);
nlohmann::ordered_json report_json(const CoverReport& report);

// Round-trip for `lab verify`: reads the "cliques" / "provenance" /
// "graph_hash" fields written by cover_json.
CliqueCover cover_from_json(const nlohmann::json& j);

// {alpha, omega, min_ecc, witness_sets}; min_ecc is null when the oracle
// budget was exceeded.
nlohmann::ordered_json oracle_json(const Graph& g, long long node_budget);

} // namespace ecc

#endif
