#include "unnlab/constructions.hpp"

#include <algorithm>
#include <string>

#include "unnlab/rng.hpp"

namespace unnlab {

Signing Signing::constant(const Graph& base, int s) {
    if (s != 1 && s != -1)
        throw InputError("sign must be +1 or -1");
    Signing out{base, {}};
    for (const Edge& e : base.edges())
        out.sign[e] = s;
    return out;
}

Signing Signing::random(const Graph& base, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    Signing out{base, {}};
    for (const Edge& e : base.edges())
        out.sign[e] = (eng() & 1) ? 1 : -1;
    return out;
}

void Signing::validate() const {
    const auto edges = base.edges();
    if (sign.size() != edges.size())
        throw InputError("signing domain does not match the base edge set: " +
                         std::to_string(sign.size()) + " signs for " +
                         std::to_string(edges.size()) + " edges");
    for (const Edge& e : edges) {
        auto it = sign.find(e);
        if (it == sign.end())
            throw InputError("signing missing edge " + std::to_string(e.first) + " " +
                             std::to_string(e.second));
        if (it->second != 1 && it->second != -1)
            throw InputError("sign of edge " + std::to_string(e.first) + " " +
                             std::to_string(e.second) + " must be +1 or -1");
    }
}

Graph BipartiteGraph::to_graph() const {
    Graph g(n1 + n2);
    for (const auto& [i, j] : cross_edges)
        g.add_edge(i, n1 + j);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1)
        throw InputError("complete graph needs n >= 1, got " + std::to_string(n));
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw InputError("cycle graph needs n >= 3, got " + std::to_string(n));
    Graph g(n);
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1)
        throw InputError("complete bipartite graph needs both sides >= 1");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            g.add_edge(u, a + v);
    return g;
}

Graph empty_graph(int n) {
    if (n < 1)
        throw InputError("empty graph needs n >= 1, got " + std::to_string(n));
    return Graph(n);
}

Graph twin_cycle(int m) {
    if (m < 4 || m % 2 != 0)
        throw InputError("twin cycle needs an even cycle length m >= 4, got " +
                         std::to_string(m));
    Graph g(m + 2);
    for (int i = 0; i < m; ++i)
        g.add_edge(i, (i + 1) % m);
    g.add_edge(m, 0);
    g.add_edge(m, 1);
    g.add_edge(m + 1, 0);
    g.add_edge(m + 1, 1);
    return g;
}

Graph two_lift(const Signing& s) {
    s.validate();
    const int n = s.base.node_count();
    Graph lifted(2 * n);
    for (const auto& [e, sgn] : s.sign) {
        const auto [x, y] = e;
        if (sgn == 1) {
            lifted.add_edge(x, y);
            lifted.add_edge(x + n, y + n);
        } else {
            lifted.add_edge(x, y + n);
            lifted.add_edge(x + n, y);
        }
    }
    return lifted;
}

Graph break_unn(const Graph& g, int x, int y) {
    g.check_node(x);
    g.check_node(y);
    if (x == y)
        throw InputError("break_unn needs two distinct nodes");
    if (g.has_edge(x, y))
        throw PreconditionError("break_unn needs a non-adjacent pair; " +
                                std::to_string(x) + " and " + std::to_string(y) +
                                " are adjacent");
    if (g.edge_count() < 1)
        throw PreconditionError("break_unn needs a graph with at least one edge");

    // Snapshot both neighborhoods before mutating; the rule uses the
    // original sets on both sides.
    const std::vector<int> nx = g.neighbors(x);
    const std::vector<int> ny = g.neighbors(y);
    Graph out = g;
    for (int w : ny)
        if (w != x)
            out.add_edge(x, w);
    for (int w : nx)
        if (w != y)
            out.add_edge(y, w);
    return out;
}

BipartiteGraph random_bipartite(int n, int m, double p, std::uint64_t seed) {
    if (n < 1 || m < 1)
        throw InputError("random bipartite graph needs both sides >= 1");
    if (!(p > 0.0 && p < 1.0))
        throw InputError("edge probability must lie strictly in (0, 1)");
    std::mt19937_64 eng(seed);
    BipartiteGraph bg;
    bg.n1 = n;
    bg.n2 = m;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            if (uniform01(eng) < p)
                bg.cross_edges.emplace_back(i, j);
    return bg;
}

double q_value(const BipartiteModelParams& params) {
    if (params.n < 1 || params.m < 1)
        throw InputError("model needs both sides >= 1");
    if (!(params.p > 0.0 && params.p < 1.0))
        throw InputError("edge probability must lie strictly in (0, 1)");
    const double total = static_cast<double>(params.n) + static_cast<double>(params.m);
    const double r = (params.n / total) * (params.m / total) * params.p;
    return r * (1.0 - r);
}

} // namespace unnlab
