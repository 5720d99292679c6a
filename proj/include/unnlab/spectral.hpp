#ifndef UNNLAB_SPECTRAL_HPP
#define UNNLAB_SPECTRAL_HPP

#include <Eigen/Dense>
#include <vector>

#include "unnlab/graph.hpp"
#include "unnlab/rational.hpp"

namespace unnlab {

// Default cap on exhaustive subset searches. The CLI lets the
// UNNLAB_MAX_EXACT_N environment variable override it.
inline constexpr int kDefaultExactLimit = 20;

// Exact edge expansion h = |boundary(S)| / |S| together with a minimizing
// set S, 1 <= |S| <= floor(n/2). Ties broken by smallest |S|, then by
// lexicographically smallest S.
struct CheegerCertificate {
    Rational h;
    std::vector<int> witness; // sorted ascending
};

// Exact conductance phi = |boundary(S)| / min(vol(S), vol(complement)),
// the volume-normalized variant bounded by the spectral gap.
struct ConductanceCertificate {
    Rational phi;
    std::vector<int> witness; // sorted ascending
};

// Second-smallest eigenvalue of the normalized Laplacian and the Cheeger
// bounds it implies on conductance: lambda2/2 <= phi <= sqrt(2*lambda2).
// For a d-regular graph, h = d * phi converts to the edge-expansion form.
struct SpectralReport {
    double lambda2 = 0.0;
    double h_lower = 0.0;
    double h_upper = 0.0;
    bool connected = true;
};

// A graph meets these iff max degree <= d and h(G) >= eps.
struct ExpanderParams {
    int n = 0;
    double eps = 1.0;
    int d = 0;
};

// Edges with exactly one endpoint in s, as sorted (min, max) pairs.
// s is a node set; duplicates are ignored.
std::vector<Edge> boundary_edges(const Graph& g, const std::vector<int>& s);

// Exhaustive minimization over all nonempty S with |S| <= floor(n/2).
// Throws UndefinedError for n < 2 and SizeLimitError above max_exact_n.
CheegerCertificate cheeger_exact(const Graph& g, int max_exact_n = kDefaultExactLimit);

// Exhaustive minimization over nonempty proper S; subsets whose smaller
// side has volume zero are skipped. Throws UndefinedError for n < 2 or
// an edgeless graph, SizeLimitError above max_exact_n.
ConductanceCertificate conductance_exact(const Graph& g,
                                         int max_exact_n = kDefaultExactLimit);

// L = I - D^{-1/2} A D^{-1/2}. Throws DegenerateDegreeError when an
// isolated node makes D^{-1/2} undefined.
Eigen::MatrixXd normalized_laplacian(const Graph& g);

// All eigenvalues of the normalized Laplacian, sorted ascending.
std::vector<double> laplacian_spectrum(const Graph& g);

// lambda2 plus derived conductance bounds. A disconnected graph is
// reported with lambda2 = 0 and connected = false instead of an error.
SpectralReport spectral_report(const Graph& g);

// max degree <= params.d and cheeger_exact(g).h >= params.eps.
// Throws InputError when g.n != params.n; propagates cheeger_exact errors.
bool is_expander(const Graph& g, const ExpanderParams& params,
                 int max_exact_n = kDefaultExactLimit);

} // namespace unnlab

#endif
