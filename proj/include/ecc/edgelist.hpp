#ifndef ECC_EDGELIST_HPP
#define ECC_EDGELIST_HPP

#include "ecc/graph.hpp"

#include <iosfwd>
#include <string>

namespace ecc {

// Text format: first line "n m", then m lines "u v" (0-based), whitespace
// separated. Lines starting with '#' are comments and may appear anywhere.
// Canonical output sorts edges lexicographically; parse(write(g)) == g and
// write(parse(s)) == s for canonical s.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_string(const std::string& text);
Graph read_edge_list_file(const std::string& path);

std::string write_edge_list(const Graph& g);
void write_edge_list_file(const Graph& g, const std::string& path);

} // namespace ecc

#endif
