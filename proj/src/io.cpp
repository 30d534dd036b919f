#include "hampreserve/io.hpp"

#include <fstream>
#include <sstream>

namespace hp {

namespace {

std::string err_at(int line, const std::string& what) {
    return "line " + std::to_string(line) + ": " + what;
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    bool dimacs = false;

    // header
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#' || line[0] == 'c') continue;
        std::istringstream ss(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            if (!(ss >> p >> fmt >> n >> m) || fmt != "edge")
                throw ParseError(err_at(lineno, "bad DIMACS problem line"));
            dimacs = true;
        } else {
            if (!(ss >> n >> m))
                throw ParseError(err_at(lineno, "expected \"n m\" header"));
        }
        break;
    }
    if (n < 0) throw ParseError("empty input");
    if (n == 0 || m < 0) throw ParseError("invalid header counts");

    Graph g(n);
    int seen = 0;
    while (seen < m && std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#' || line[0] == 'c') continue;
        std::istringstream ss(line);
        int u, v;
        if (dimacs) {
            std::string e;
            if (!(ss >> e >> u >> v) || e != "e")
                throw ParseError(err_at(lineno, "bad DIMACS edge line"));
            --u;
            --v;
        } else {
            if (!(ss >> u >> v))
                throw ParseError(err_at(lineno, "expected \"u v\""));
        }
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(err_at(lineno, "vertex out of range"));
        if (u == v) throw ParseError(err_at(lineno, "self-loop"));
        if (!g.has_edge(u, v)) g.add_edge(u, v);
        ++seen;
    }
    if (seen < m) throw ParseError("unexpected end of input: missing edges");
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_graph(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::string& header) {
    if (!header.empty()) out << "# " << header << "\n";
    out << g.order() << " " << g.size() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g,
                          const std::string& header) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path);
    write_edge_list(out, g, header);
}

}  // namespace hp
