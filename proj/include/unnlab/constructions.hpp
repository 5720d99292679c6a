#ifndef UNNLAB_CONSTRUCTIONS_HPP
#define UNNLAB_CONSTRUCTIONS_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "unnlab/graph.hpp"

namespace unnlab {

// An assignment of +1/-1 to each edge of a base graph; parameterizes a
// 2-lift. The sign map's domain is exactly the base's edge set, keyed by
// normalized (min, max) pairs.
struct Signing {
    Graph base;
    std::map<Edge, int> sign;

    // Every base edge signed s (s in {+1, -1}).
    static Signing constant(const Graph& base, int s);
    // Seeded uniform +-1 per edge, in sorted edge order.
    static Signing random(const Graph& base, std::uint64_t seed);

    // Throws InputError unless the sign map covers exactly the edge set
    // with values in {+1, -1}.
    void validate() const;
};

// Bipartite graph with sides V1 (size n1) and V2 (size n2); edges only
// across the bipartition, stored as (i, j) with i in V1 and j in V2.
struct BipartiteGraph {
    int n1 = 0;
    int n2 = 0;
    std::vector<std::pair<int, int>> cross_edges;

    // Graph on n1 + n2 nodes; V2 node j becomes node n1 + j.
    Graph to_graph() const;
};

// Parameters of the random bipartite model, plus the derived per-term
// probability q = r * (1 - r) with r = n/(n+m) * m/(n+m) * p.
struct BipartiteModelParams {
    int n = 1;
    int m = 1;
    double p = 0.5;
};

Graph complete_graph(int n);          // n >= 1
Graph cycle_graph(int n);             // n >= 3
Graph complete_bipartite(int a, int b); // a, b >= 1
Graph empty_graph(int n);             // n >= 1

// Cycle on nodes 0..m-1 plus twin nodes m and m+1, each adjacent to
// exactly nodes 0 and 1. m even, m >= 4. The twins share the
// neighborhood {0, 1}, so the result is never a UNN.
Graph twin_cycle(int m);

// 2-lift of the signing's base graph: node x becomes x (copy 1) and
// x + n (copy 2); a +1 edge {x, y} lifts to {x, y} and {x+n, y+n}, a -1
// edge to {x, y+n} and {x+n, y}.
Graph two_lift(const Signing& s);

// Equalizes the open neighborhoods of x and y by adding edges from x to
// nb(y) and from y to nb(x), destroying the distinctness reading of the
// UNN property while never decreasing the Cheeger constant. Requires
// x != y, x and y non-adjacent, and at least one edge in g.
Graph break_unn(const Graph& g, int x, int y);

// Each of the n*m potential cross edges independently with probability p,
// driven by mt19937_64(seed) with pairs visited in row-major order
// (i over V1 outer, j over V2 inner). Identical parameters always
// reproduce the identical graph.
BipartiteGraph random_bipartite(int n, int m, double p, std::uint64_t seed);

// q per the model: the probability that a uniformly chosen matrix
// position is an edge while its partner position is not.
double q_value(const BipartiteModelParams& params);

} // namespace unnlab

#endif
