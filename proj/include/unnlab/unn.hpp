#ifndef UNNLAB_UNN_HPP
#define UNNLAB_UNN_HPP

#include <optional>
#include <utility>
#include <vector>

#include "unnlab/graph.hpp"

namespace unnlab {

// Integer matrix with entry(i, j) = |nb(i) \ nb(j)|, the number of
// neighbors of i that are not neighbors of j. A zero off-diagonal entry
// witnesses the containment nb(i) <= nb(j); the diagonal is always zero.
struct BMatrix {
    int n = 0;
    std::vector<int> entries; // row-major, n*n

    int at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(j)];
    }
};

// Which reading of the unique-neighborhood property to test.
enum class UnnPredicate {
    Distinct,  // all open neighborhoods pairwise distinct
    Antichain, // no open neighborhood contained in another node's
};

// Verdict of both unique-neighborhood readings, with the
// lexicographically smallest violating pair per failed reading.
// antichain implies distinct: an equal pair is in particular a
// contained pair, so is_unn_antichain can never hold alone.
struct UnnReport {
    bool is_unn_distinct = true;
    bool is_unn_antichain = true;
    // Smallest pair (u, v), u < v, with nb(u) == nb(v).
    std::optional<std::pair<int, int>> witness_distinct;
    // Smallest ordered pair (u, v), u != v, with nb(u) contained in nb(v).
    std::optional<std::pair<int, int>> witness_antichain;

    bool verdict(UnnPredicate which) const {
        return which == UnnPredicate::Distinct ? is_unn_distinct : is_unn_antichain;
    }
    const std::optional<std::pair<int, int>>& witness(UnnPredicate which) const {
        return which == UnnPredicate::Distinct ? witness_distinct : witness_antichain;
    }
};

// entry(i, j) = sum_k a_ik * (1 - a_kj), computed in exact integer
// arithmetic.
BMatrix b_matrix(const Graph& g);

// Evaluates both unique-neighborhood readings. Graphs with fewer than
// two nodes satisfy both vacuously.
UnnReport check_unn(const Graph& g);

} // namespace unnlab

#endif
