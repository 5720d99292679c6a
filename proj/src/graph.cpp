#include "unnlab/graph.hpp"

#include <algorithm>
#include <string>

namespace unnlab {

Graph::Graph(int n) {
    if (n < 0)
        throw InputError("node count must be nonnegative, got " + std::to_string(n));
    n_ = n;
    adj_.resize(static_cast<std::size_t>(n));
}

void Graph::check_node(int v) const {
    if (v < 0 || v >= n_)
        throw InputError("node " + std::to_string(v) + " out of range [0, " +
                         std::to_string(n_) + ")");
}

bool Graph::add_edge(int u, int v) {
    check_node(u);
    check_node(v);
    if (u == v)
        throw InputError("self-loop at node " + std::to_string(u) + " not allowed");
    auto& nu = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
        return false;
    nu.insert(it, v);
    auto& nv = adj_[static_cast<std::size_t>(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++m_;
    return true;
}

bool Graph::has_edge(int u, int v) const {
    check_node(u);
    check_node(v);
    if (u == v)
        return false;
    const auto& nu = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nu.begin(), nu.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_node(v);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
    check_node(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_)
        d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v)
        deg[static_cast<std::size_t>(v)] = g.degree(v);
    return deg;
}

bool is_connected(const Graph& g) {
    const int n = g.node_count();
    if (n <= 1)
        return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

} // namespace unnlab
