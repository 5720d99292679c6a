#include "unnlab/experiment.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "unnlab/constructions.hpp"
#include "unnlab/rng.hpp"
#include "unnlab/serialize.hpp"

namespace unnlab {

namespace {

void validate(const ExperimentConfig& cfg) {
    if (cfg.sizes.empty())
        throw InputError("experiment needs at least one (n, m) size");
    for (const auto& [n, m] : cfg.sizes)
        if (n < 1 || m < 1)
            throw InputError("experiment sizes need n, m >= 1");
    if (!(cfg.p > 0.0 && cfg.p < 1.0))
        throw InputError("edge probability must lie strictly in (0, 1)");
    if (cfg.trials < 1)
        throw InputError("experiment needs trials >= 1");
}

double ci_halfwidth_95(double p_hat, int trials) {
    return 1.96 * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(trials));
}

} // namespace

std::vector<ExperimentRow> run_unn_experiment(const ExperimentConfig& cfg) {
    validate(cfg);
    std::vector<ExperimentRow> rows;
    rows.reserve(cfg.sizes.size());
    for (const auto& [n, m] : cfg.sizes) {
        int unn_count = 0;
        for (int t = 0; t < cfg.trials; ++t) {
            const std::uint64_t seed =
                trial_seed(cfg.master_seed, static_cast<std::uint64_t>(n),
                           static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(t));
            const Graph g = random_bipartite(n, m, cfg.p, seed).to_graph();
            if (check_unn(g).verdict(cfg.predicate))
                ++unn_count;
        }
        ExperimentRow row;
        row.n = n;
        row.m = m;
        row.trials = cfg.trials;
        row.unn_count = unn_count;
        row.p_hat = static_cast<double>(unn_count) / static_cast<double>(cfg.trials);
        row.ci_halfwidth = ci_halfwidth_95(row.p_hat, cfg.trials);
        rows.push_back(row);
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
    out << "n,m,trials,unn_count,p_hat,ci_halfwidth\n";
    for (const ExperimentRow& r : rows)
        out << r.n << ',' << r.m << ',' << r.trials << ',' << r.unn_count << ','
            << format_double(r.p_hat) << ',' << format_double(r.ci_halfwidth) << "\n";
}

std::vector<ExperimentRow> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw InputError("empty CSV input");
    if (line != "n,m,trials,unn_count,p_hat,ci_halfwidth")
        throw InputError("unexpected CSV header: '" + line + "'");
    std::vector<ExperimentRow> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::istringstream iss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(iss, field, ','))
            fields.push_back(field);
        if (fields.size() != 6)
            throw InputError("CSV line " + std::to_string(lineno) + ": expected 6 fields");
        ExperimentRow r;
        try {
            r.n = std::stoi(fields[0]);
            r.m = std::stoi(fields[1]);
            r.trials = std::stoi(fields[2]);
            r.unn_count = std::stoi(fields[3]);
            r.p_hat = std::stod(fields[4]);
            r.ci_halfwidth = std::stod(fields[5]);
        } catch (const std::exception&) {
            throw InputError("CSV line " + std::to_string(lineno) + ": cannot parse fields");
        }
        rows.push_back(r);
    }
    return rows;
}

namespace {

// Instance sizes for the four independence-table cells. Chosen with a
// margin so each cell's claim holds strictly, not just asymptotically:
//   complete   n = 2*(ceil(eps) + 2)          h = n/2 >= eps
//   cycle      n = max(5, 2*(ceil(4/eps)+1))  h = 2/floor(n/2) < eps
//   bipartite  k = max(2, 2*ceil(eps))        h = k/2 >= eps, sides k
//   twin cycle m = max(4, 2*ceil(4/eps))      h <= 4/m < eps
long long ceil_ll(double x) { return static_cast<long long>(std::ceil(x)); }

int checked_size(long long v, const char* family) {
    if (v > 1'000'000'000LL)
        throw SizeLimitError(std::string("eps makes the ") + family +
                             " instance too large to represent");
    return static_cast<int>(v);
}

// check_unn on instances beyond this is skipped; the verdict then rests
// on the family facts the constructions guarantee.
constexpr int kMaxUnnVerifyNodes = 2048;

Rational formula_h(const std::string& family, int param) {
    if (family == "complete")
        return Rational::of(param, 2); // param even
    if (family == "cycle")
        return Rational::of(2, param / 2);
    if (family == "complete_bipartite")
        return Rational::of(param, 2); // param = side size, even
    return Rational::of(4, param); // twin_cycle upper bound, param = m
}

} // namespace

std::vector<Table1Row> table1_report(double eps, int max_exact_n) {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw InputError("eps must be a positive finite number");

    struct Cell {
        std::string family;
        std::string param_name;
        int param;
        int nodes;
        bool expect_unn;
        bool h_at_least_eps;
        Graph (*build)(int);
    };

    const int n_complete = checked_size(2 * (ceil_ll(eps) + 2), "complete");
    const int n_cycle = checked_size(std::max(5LL, 2 * (ceil_ll(4.0 / eps) + 1)), "cycle");
    const int k_bip = checked_size(std::max(2LL, 2 * ceil_ll(eps)), "complete bipartite");
    const int m_twin = checked_size(std::max(4LL, 2 * ceil_ll(4.0 / eps)), "twin cycle");

    const Cell cells[] = {
        {"complete", "n", n_complete, n_complete, true, true, &complete_graph},
        {"cycle", "n", n_cycle, n_cycle, true, false, &cycle_graph},
        {"complete_bipartite", "k", k_bip, 2 * k_bip, false, true,
         [](int k) { return complete_bipartite(k, k); }},
        {"twin_cycle", "m", m_twin, m_twin + 2, false, false, &twin_cycle},
    };

    std::vector<Table1Row> rows;
    for (const Cell& cell : cells) {
        Table1Row row;
        row.family = cell.family;
        row.param_name = cell.param_name;
        row.param_value = cell.param;
        row.nodes = cell.nodes;
        row.expect_unn = cell.expect_unn;
        row.h_at_least_eps = cell.h_at_least_eps;

        const bool exact = cell.nodes <= max_exact_n;
        if (exact) {
            const Graph g = cell.build(cell.param);
            row.h = cheeger_exact(g, max_exact_n).h;
            row.provenance = HProvenance::Exact;
        } else {
            row.h = formula_h(cell.family, cell.param);
            row.provenance = HProvenance::Formula;
        }

        // Self-check: the emitted claims, never taken on faith.
        const bool h_claim_holds = cell.h_at_least_eps ? row.h.value() >= eps
                                                       : row.h.value() < eps;
        if (!h_claim_holds)
            throw Error("table1 self-check failed: " + cell.family + " h=" +
                        format_double(row.h.value()) + " violates its eps claim");
        if (cell.nodes <= kMaxUnnVerifyNodes) {
            const UnnReport report = check_unn(cell.build(cell.param));
            const bool ok = cell.expect_unn ? report.is_unn_antichain
                                            : !report.is_unn_distinct;
            if (!ok)
                throw Error("table1 self-check failed: " + cell.family +
                            " UNN verdict does not match its cell");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_table1(std::ostream& out, const std::vector<Table1Row>& rows, double eps) {
    out << "eps=" << format_double(eps) << "\n";
    for (const Table1Row& r : rows) {
        out << "family=" << r.family << ' ' << r.param_name << '=' << r.param_value
            << " nodes=" << r.nodes << " unn=" << (r.expect_unn ? "yes" : "no")
            << " claim=" << (r.h_at_least_eps ? "h>=eps" : "h<eps")
            << " h_num=" << r.h.num << " h_den=" << r.h.den
            << " h=" << format_double(r.h.value()) << " provenance="
            << (r.provenance == HProvenance::Exact ? "exact" : "formula") << "\n";
    }
}

std::string table1_to_json(const std::vector<Table1Row>& rows, double eps) {
    nlohmann::json j;
    j["eps"] = eps;
    j["rows"] = nlohmann::json::array();
    for (const Table1Row& r : rows) {
        nlohmann::json jr;
        jr["family"] = r.family;
        jr[r.param_name] = r.param_value;
        jr["nodes"] = r.nodes;
        jr["unn"] = r.expect_unn;
        jr["claim"] = r.h_at_least_eps ? "h>=eps" : "h<eps";
        jr["h_num"] = r.h.num;
        jr["h_den"] = r.h.den;
        jr["h"] = r.h.value();
        jr["provenance"] = r.provenance == HProvenance::Exact ? "exact" : "formula";
        j["rows"].push_back(jr);
    }
    return j.dump(2);
}

} // namespace unnlab
