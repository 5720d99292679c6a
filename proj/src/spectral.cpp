#include "unnlab/spectral.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

namespace unnlab {

namespace {

std::vector<int> mask_to_nodes(std::uint64_t mask) {
    std::vector<int> nodes;
    while (mask) {
        nodes.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return nodes;
}

// candidate < best under (ratio, |S|, lexicographic node list)
bool improves(std::int64_t cand_num, std::int64_t cand_den, std::uint64_t cand_mask,
              std::int64_t best_num, std::int64_t best_den, std::uint64_t best_mask) {
    const std::int64_t lhs = cand_num * best_den;
    const std::int64_t rhs = best_num * cand_den;
    if (lhs != rhs)
        return lhs < rhs;
    const int cand_size = std::popcount(cand_mask);
    const int best_size = std::popcount(best_mask);
    if (cand_size != best_size)
        return cand_size < best_size;
    const auto a = mask_to_nodes(cand_mask);
    const auto b = mask_to_nodes(best_mask);
    return a < b;
}

// Walks all nonempty subsets of {0..n-1} in reflected Gray-code order,
// maintaining |S|, |boundary(S)| and vol(S) incrementally; one node is
// toggled per step at O(degree) cost. visit(mask, size, boundary, vol)
// is called for every subset.
template <typename Visit>
void enumerate_subsets(const Graph& g, Visit visit) {
    const int n = g.node_count();
    std::vector<std::uint64_t> nb_mask(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v))
            nb_mask[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;

    std::uint64_t mask = 0;
    int size = 0;
    std::int64_t boundary = 0;
    std::int64_t vol = 0;
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < count; ++k) {
        const int b = std::countr_zero(k);
        const std::uint64_t bit = std::uint64_t{1} << b;
        const std::int64_t deg = g.degree(b);
        if (mask & bit) {
            mask ^= bit;
            const std::int64_t inside = std::popcount(nb_mask[static_cast<std::size_t>(b)] & mask);
            boundary -= deg - 2 * inside;
            vol -= deg;
            --size;
        } else {
            const std::int64_t inside = std::popcount(nb_mask[static_cast<std::size_t>(b)] & mask);
            mask ^= bit;
            boundary += deg - 2 * inside;
            vol += deg;
            ++size;
        }
        visit(mask, size, boundary, vol);
    }
}

void check_exact_size(const Graph& g, int max_exact_n, const char* what) {
    const int n = g.node_count();
    if (n < 2)
        throw UndefinedError(std::string(what) +
                             " undefined for graphs with fewer than two nodes");
    if (max_exact_n > 62)
        max_exact_n = 62;
    if (n > max_exact_n)
        throw SizeLimitError("exhaustive " + std::string(what) + " search capped at n = " +
                             std::to_string(max_exact_n) + ", got n = " + std::to_string(n) +
                             "; use the spectral bounds instead");
}

} // namespace

std::vector<Edge> boundary_edges(const Graph& g, const std::vector<int>& s) {
    std::vector<char> in_s(static_cast<std::size_t>(g.node_count()), 0);
    for (int v : s) {
        g.check_node(v);
        in_s[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (in_s[static_cast<std::size_t>(e.first)] != in_s[static_cast<std::size_t>(e.second)])
            out.push_back(e);
    return out;
}

CheegerCertificate cheeger_exact(const Graph& g, int max_exact_n) {
    check_exact_size(g, max_exact_n, "Cheeger");
    const int half = g.node_count() / 2;
    std::int64_t best_num = -1, best_den = 1;
    std::uint64_t best_mask = 0;
    enumerate_subsets(g, [&](std::uint64_t mask, int size, std::int64_t boundary,
                             std::int64_t /*vol*/) {
        if (size < 1 || size > half)
            return;
        if (best_num < 0 || improves(boundary, size, mask, best_num, best_den, best_mask)) {
            best_num = boundary;
            best_den = size;
            best_mask = mask;
        }
    });
    return CheegerCertificate{Rational::of(best_num, best_den), mask_to_nodes(best_mask)};
}

ConductanceCertificate conductance_exact(const Graph& g, int max_exact_n) {
    check_exact_size(g, max_exact_n, "conductance");
    if (g.edge_count() == 0)
        throw UndefinedError("conductance undefined for an edgeless graph");
    const std::int64_t total_vol = 2 * static_cast<std::int64_t>(g.edge_count());
    std::int64_t best_num = -1, best_den = 1;
    std::uint64_t best_mask = 0;
    enumerate_subsets(g, [&](std::uint64_t mask, int size, std::int64_t boundary,
                             std::int64_t vol) {
        if (size < 1 || size > g.node_count() - 1)
            return;
        const std::int64_t small = std::min(vol, total_vol - vol);
        if (small == 0)
            return;
        if (best_num < 0 || improves(boundary, small, mask, best_num, best_den, best_mask)) {
            best_num = boundary;
            best_den = small;
            best_mask = mask;
        }
    });
    return ConductanceCertificate{Rational::of(best_num, best_den), mask_to_nodes(best_mask)};
}

Eigen::MatrixXd normalized_laplacian(const Graph& g) {
    const int n = g.node_count();
    std::vector<double> inv_sqrt_deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        if (d == 0)
            throw DegenerateDegreeError("node " + std::to_string(v) +
                                        " is isolated; D^{-1/2} is undefined");
        inv_sqrt_deg[static_cast<std::size_t>(v)] = 1.0 / std::sqrt(static_cast<double>(d));
    }
    Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(n, n);
    for (const Edge& e : g.edges()) {
        const double w = -inv_sqrt_deg[static_cast<std::size_t>(e.first)] *
                         inv_sqrt_deg[static_cast<std::size_t>(e.second)];
        lap(e.first, e.second) = w;
        lap(e.second, e.first) = w;
    }
    return lap;
}

std::vector<double> laplacian_spectrum(const Graph& g) {
    const Eigen::MatrixXd lap = normalized_laplacian(g);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap, Eigen::EigenvaluesOnly);
    const auto& values = solver.eigenvalues();
    return std::vector<double>(values.data(), values.data() + values.size());
}

SpectralReport spectral_report(const Graph& g) {
    if (g.node_count() < 2)
        throw UndefinedError("lambda2 undefined for graphs with fewer than two nodes");
    SpectralReport report;
    if (!is_connected(g)) {
        report.connected = false;
        return report; // lambda2 = 0 exactly; h = 0 in this case
    }
    const auto spectrum = laplacian_spectrum(g);
    double lambda2 = spectrum[1];
    if (lambda2 < 0.0 && lambda2 > -1e-9)
        lambda2 = 0.0; // round-off below the reporting tolerance
    report.lambda2 = lambda2;
    report.h_lower = lambda2 / 2.0;
    report.h_upper = std::sqrt(2.0 * lambda2);
    return report;
}

bool is_expander(const Graph& g, const ExpanderParams& params, int max_exact_n) {
    if (g.node_count() != params.n)
        throw InputError("graph has " + std::to_string(g.node_count()) +
                         " nodes but params expect " + std::to_string(params.n));
    if (g.max_degree() > params.d)
        return false;
    const CheegerCertificate cert = cheeger_exact(g, max_exact_n);
    return cert.h.value() >= params.eps;
}

} // namespace unnlab
