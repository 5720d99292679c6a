#ifndef UNNLAB_GRAPH_HPP
#define UNNLAB_GRAPH_HPP

#include <utility>
#include <vector>

#include "unnlab/errors.hpp"

namespace unnlab {

// An edge as a normalized (min, max) node pair.
using Edge = std::pair<int, int>;

// Undirected simple graph on nodes 0..n-1. No self-loops, no parallel
// edges; adjacency is kept symmetric by construction. Neighbor lists are
// sorted ascending. Treat instances as immutable once built: every
// algorithm in this library is a pure function of its inputs, so shared
// graphs are safe to read from any number of threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int node_count() const { return n_; }
    int edge_count() const { return m_; }

    // Inserts {u, v}. Returns false if the edge was already present.
    // Throws InputError on a self-loop or an out-of-range endpoint.
    bool add_edge(int u, int v);

    bool has_edge(int u, int v) const;

    // Open neighborhood nb(v), sorted ascending; v itself never appears.
    const std::vector<int>& neighbors(int v) const;

    int degree(int v) const;
    int max_degree() const;

    // All edges as (min, max) pairs, sorted.
    std::vector<Edge> edges() const;

    void check_node(int v) const;

    bool operator==(const Graph& other) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Degree sequence (deg(0), ..., deg(n-1)); sums to 2 * edge_count.
std::vector<int> degree_sequence(const Graph& g);

bool is_connected(const Graph& g);

} // namespace unnlab

#endif
