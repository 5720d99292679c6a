#include "unnlab/unn.hpp"

#include <cstdint>

namespace unnlab {

namespace {

// Adjacency rows packed into 64-bit words, one row per node. Subset and
// equality tests on open neighborhoods become word-wise operations.
struct BitRows {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;

    explicit BitRows(const Graph& g)
        : n(g.node_count()), words((g.node_count() + 63) / 64),
          bits(static_cast<std::size_t>(n) * static_cast<std::size_t>(words), 0) {
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v))
                bits[row(v) + static_cast<std::size_t>(w / 64)] |= std::uint64_t{1} << (w % 64);
    }

    std::size_t row(int v) const {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(words);
    }

    // nb(u) subset of (or equal to) nb(v)
    bool subset(int u, int v) const {
        std::size_t ru = row(u), rv = row(v);
        for (int k = 0; k < words; ++k)
            if (bits[ru + static_cast<std::size_t>(k)] & ~bits[rv + static_cast<std::size_t>(k)])
                return false;
        return true;
    }

    bool equal(int u, int v) const {
        std::size_t ru = row(u), rv = row(v);
        for (int k = 0; k < words; ++k)
            if (bits[ru + static_cast<std::size_t>(k)] != bits[rv + static_cast<std::size_t>(k)])
                return false;
        return true;
    }
};

} // namespace

BMatrix b_matrix(const Graph& g) {
    const int n = g.node_count();
    BMatrix b;
    b.n = n;
    b.entries.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            int count = 0;
            for (int k : g.neighbors(i))
                if (!g.has_edge(k, j))
                    ++count;
            b.entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(j)] = count;
        }
    }
    return b;
}

UnnReport check_unn(const Graph& g) {
    const int n = g.node_count();
    UnnReport report;
    if (n < 2)
        return report;
    BitRows rows(g);

    // Distinctness: scan unordered pairs in lexicographic order.
    for (int u = 0; u < n && !report.witness_distinct; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rows.equal(u, v)) {
                report.witness_distinct = {u, v};
                break;
            }
    report.is_unn_distinct = !report.witness_distinct.has_value();

    // Antichain: ordered pairs; equality counts as containment.
    for (int u = 0; u < n && !report.witness_antichain; ++u)
        for (int v = 0; v < n; ++v)
            if (v != u && rows.subset(u, v)) {
                report.witness_antichain = {u, v};
                break;
            }
    report.is_unn_antichain = !report.witness_antichain.has_value();

    return report;
}

} // namespace unnlab
