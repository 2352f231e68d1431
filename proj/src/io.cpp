#include "avec/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

namespace avec {

namespace {

// Lines may be blank or start with '#'; both are skipped.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

ParsedGraph read_edge_list(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) throw ParseError("empty input, expected a 'n m' header line");
    int n = 0, m = 0;
    {
        std::istringstream header(line);
        if (!(header >> n >> m)) throw ParseError("malformed header line: " + line);
    }
    if (n < 1 || m < 0) throw ParseError("header must satisfy n >= 1, m >= 0");

    std::vector<std::pair<int, int>> edges;
    std::vector<double> weights;
    bool had_weights = false;
    for (int i = 0; i < m; ++i) {
        if (!next_data_line(in, line))
            throw ParseError("expected " + std::to_string(m) + " edge lines, got " +
                             std::to_string(i));
        std::istringstream row(line);
        int u = 0, v = 0;
        if (!(row >> u >> v)) throw ParseError("malformed edge line: " + line);
        double w = 1.0;
        if (row >> w)
            had_weights = true;
        edges.emplace_back(u, v);
        weights.push_back(w);
    }

    Graph g = Graph::make(n, edges);
    // Reorder the weight column to the graph's edge index order.
    std::vector<double> by_index(g.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        Edge e(edges[i].first, edges[i].second);
        by_index[*g.edge_index(e.u, e.v)] = weights[i];
    }
    return {std::move(g), std::move(by_index), had_weights};
}

ParsedGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g,
                     const std::optional<WeightFunction>& w) {
    out << g.order() << ' ' << g.size() << '\n';
    out << std::setprecision(17);
    for (int i = 0; i < g.size(); ++i) {
        const Edge& e = g.edge(i);
        out << e.u << ' ' << e.v;
        if (w) out << ' ' << (*w)[i];
        out << '\n';
    }
}

std::vector<double> read_weights(std::istream& in, const Graph& g) {
    std::vector<double> w(g.size());
    std::vector<char> seen(g.size(), 0);
    std::string line;
    while (next_data_line(in, line)) {
        std::istringstream row(line);
        int u = 0, v = 0;
        double x = 0.0;
        if (!(row >> u >> v >> x)) throw ParseError("malformed weight line: " + line);
        auto idx = g.edge_index(u, v);
        if (!idx)
            throw DomainMismatch("weight given for non-edge (" + std::to_string(u) + "," +
                                 std::to_string(v) + ")");
        if (seen[*idx])
            throw DomainMismatch("duplicate weight for edge (" + std::to_string(u) + "," +
                                 std::to_string(v) + ")");
        seen[*idx] = 1;
        w[*idx] = x;
    }
    for (int i = 0; i < g.size(); ++i)
        if (!seen[i])
            throw DomainMismatch("missing weight for edge (" + std::to_string(g.edge(i).u) + "," +
                                 std::to_string(g.edge(i).v) + ")");
    return w;
}

std::vector<double> read_weights_file(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return read_weights(in, g);
}

void write_weights(std::ostream& out, const Graph& g, const WeightFunction& w) {
    out << std::setprecision(17);
    for (int i = 0; i < g.size(); ++i)
        out << g.edge(i).u << ' ' << g.edge(i).v << ' ' << w[i] << '\n';
}

}  // namespace avec
