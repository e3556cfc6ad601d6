#include "ecc/edgelist.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ecc {

namespace {

// Next non-comment, non-blank line; false at EOF.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

} // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line))
        throw std::runtime_error("edge list: missing header line");
    long long n, m;
    {
        std::istringstream hs(line);
        if (!(hs >> n >> m) || n < 0 || m < 0)
            throw std::runtime_error("edge list: malformed header: " + line);
        std::string rest;
        if (hs >> rest)
            throw std::runtime_error("edge list: trailing tokens in header: " + line);
    }
    std::vector<Edge> edges;
    edges.reserve(std::size_t(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line))
            throw std::runtime_error("edge list: expected " + std::to_string(m) +
                                     " edges, got " + std::to_string(i));
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v))
            throw std::runtime_error("edge list: malformed edge line: " + line);
        std::string rest;
        if (es >> rest)
            throw std::runtime_error("edge list: trailing tokens in edge line: " + line);
        edges.emplace_back(int(u), int(v));
    }
    return Graph::from_edges(int(n), edges);
}

Graph read_edge_list_string(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges(); // already canonical and lex sorted
    out << g.vertex_count() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << write_edge_list(g);
}

} // namespace ecc
