#include "unnlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

namespace unnlab {

namespace {

bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#')
            return true;
        if (!std::isspace(static_cast<unsigned char>(c)))
            return false;
    }
    return true;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t)
        toks.push_back(t);
    return toks;
}

int parse_int(const std::string& tok, const std::string& what, int lineno) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw InputError("line " + std::to_string(lineno) + ": cannot parse " + what +
                         " from '" + tok + "'");
    }
    if (pos != tok.size())
        throw InputError("line " + std::to_string(lineno) + ": cannot parse " + what +
                         " from '" + tok + "'");
    return value;
}

} // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    bool have_header = false;
    Graph g;
    std::set<Edge> seen;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank_or_comment(line))
            continue;
        auto toks = tokens_of(line);
        if (!have_header) {
            if (toks.size() != 2 || toks[0] != "n")
                throw InputError("line " + std::to_string(lineno) +
                                 ": expected header 'n <node-count>'");
            int n = parse_int(toks[1], "node count", lineno);
            if (n < 0)
                throw InputError("line " + std::to_string(lineno) +
                                 ": node count must be nonnegative");
            g = Graph(n);
            have_header = true;
            continue;
        }
        if (toks.size() != 2)
            throw InputError("line " + std::to_string(lineno) +
                             ": expected edge 'u v', got " + std::to_string(toks.size()) +
                             " tokens");
        int u = parse_int(toks[0], "node", lineno);
        int v = parse_int(toks[1], "node", lineno);
        g.check_node(u);
        g.check_node(v);
        if (u == v)
            throw InputError("line " + std::to_string(lineno) + ": self-loop " +
                             std::to_string(u) + " " + std::to_string(v));
        Edge key{std::min(u, v), std::max(u, v)};
        if (!seen.insert(key).second)
            throw InputError("line " + std::to_string(lineno) + ": duplicate edge " +
                             std::to_string(u) + " " + std::to_string(v) +
                             " (reversed pairs count as duplicates)");
        g.add_edge(u, v);
    }
    if (!have_header)
        throw InputError("missing 'n <node-count>' header");
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    if (path == "-")
        return read_edge_list(std::cin);
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "' for reading");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, std::optional<int> bipartite_n1) {
    if (bipartite_n1)
        out << "# bipartite n1=" << *bipartite_n1 << "\n";
    out << "n " << g.node_count() << "\n";
    for (const Edge& e : g.edges())
        out << e.first << " " << e.second << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g,
                          std::optional<int> bipartite_n1) {
    if (path == "-") {
        write_edge_list(std::cout, g, bipartite_n1);
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot open '" + path + "' for writing");
    write_edge_list(out, g, bipartite_n1);
}

Signing read_signing(std::istream& in, const Graph& base) {
    Signing s{base, {}};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank_or_comment(line))
            continue;
        auto toks = tokens_of(line);
        if (toks.size() != 3)
            throw InputError("line " + std::to_string(lineno) +
                             ": expected 'u v s' with s in {+1, -1}");
        int u = parse_int(toks[0], "node", lineno);
        int v = parse_int(toks[1], "node", lineno);
        int sgn = parse_int(toks[2], "sign", lineno);
        if (sgn != 1 && sgn != -1)
            throw InputError("line " + std::to_string(lineno) + ": sign must be +1 or -1");
        if (!base.has_edge(u, v))
            throw InputError("line " + std::to_string(lineno) + ": " + std::to_string(u) +
                             " " + std::to_string(v) + " is not an edge of the base graph");
        Edge key{std::min(u, v), std::max(u, v)};
        if (s.sign.count(key))
            throw InputError("line " + std::to_string(lineno) + ": edge signed twice");
        s.sign[key] = sgn;
    }
    s.validate(); // catches missing edges
    return s;
}

Signing read_signing_file(const std::string& path, const Graph& base) {
    if (path == "-")
        return read_signing(std::cin, base);
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open '" + path + "' for reading");
    return read_signing(in, base);
}

void write_dot(std::ostream& out, const Graph& g) {
    out << "graph G {\n";
    for (int v = 0; v < g.node_count(); ++v)
        out << "  " << v << ";\n";
    for (const Edge& e : g.edges())
        out << "  " << e.first << " -- " << e.second << ";\n";
    out << "}\n";
}

} // namespace unnlab
