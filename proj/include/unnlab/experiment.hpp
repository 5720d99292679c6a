#ifndef UNNLAB_EXPERIMENT_HPP
#define UNNLAB_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "unnlab/rational.hpp"
#include "unnlab/spectral.hpp"
#include "unnlab/unn.hpp"

namespace unnlab {

// Monte Carlo study of the unique-neighborhood rate in random bipartite
// graphs across a list of (n, m) sizes.
struct ExperimentConfig {
    std::vector<std::pair<int, int>> sizes;
    double p = 0.5;
    int trials = 1000;
    std::uint64_t master_seed = 0;
    UnnPredicate predicate = UnnPredicate::Distinct;
};

struct ExperimentRow {
    int n = 0;
    int m = 0;
    int trials = 0;
    int unn_count = 0;
    double p_hat = 0.0;
    double ci_halfwidth = 0.0; // 95% normal-approximation half-width

    bool operator==(const ExperimentRow&) const = default;
};

// One row per configured size. Trial t of row (n, m) uses the seed
// trial_seed(master_seed, n, m, t); the result depends only on cfg.
std::vector<ExperimentRow> run_unn_experiment(const ExperimentConfig& cfg);

// CSV with header n,m,trials,unn_count,p_hat,ci_halfwidth. Floats are
// written in shortest round-trip form, so rows written and re-parsed
// compare equal and repeated runs are byte-identical.
void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
std::vector<ExperimentRow> read_csv(std::istream& in);

// One reproduction row per cell of the UNN-vs-Cheeger independence
// table: which family, the instance size chosen for the given eps, the
// computed h, and the verdicts, all re-verified before being returned.
enum class HProvenance {
    Exact,   // h from the exhaustive search
    Formula, // closed form (upper bound for the twin cycle family)
};

struct Table1Row {
    std::string family;       // complete | cycle | complete_bipartite | twin_cycle
    std::string param_name;   // the family's size parameter: n, k or m
    int param_value = 0;
    int nodes = 0;            // total node count
    bool expect_unn = false;  // the cell's UNN claim
    bool h_at_least_eps = false; // true: claims h >= eps; false: claims h < eps
    Rational h;               // exact h, or formula value / upper bound
    HProvenance provenance = HProvenance::Exact;
};

// Emits the four rows for the given eps > 0. Every claim is re-checked
// (check_unn always; cheeger_exact when the instance fits under
// max_exact_n, the closed form otherwise) and a failed re-check throws.
std::vector<Table1Row> table1_report(double eps, int max_exact_n = kDefaultExactLimit);

void write_table1(std::ostream& out, const std::vector<Table1Row>& rows, double eps);
std::string table1_to_json(const std::vector<Table1Row>& rows, double eps);

} // namespace unnlab

#endif
