// Acceptance gate: one PASS/FAIL line per release criterion, exit code =
// number of failures. argv[1] is the path to the command-line binary;
// criteria that specify end-to-end behavior run through it, the rest
// drive the library directly.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "unnlab/constructions.hpp"
#include "unnlab/experiment.hpp"
#include "unnlab/rng.hpp"
#include "unnlab/spectral.hpp"
#include "unnlab/unn.hpp"

using namespace unnlab;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli;
int g_failures = 0;

void report(int index, const std::string& what, bool ok, const std::string& detail) {
    std::printf("[%d] %s: %s%s%s\n", index, what.c_str(), ok ? "PASS" : "FAIL",
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok)
        ++g_failures;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    double seconds = 0.0;
};

RunResult run_cli(const std::string& args) {
    RunResult r;
    const std::string cmd = g_cli + " " + args + " 2>/dev/null";
    const auto t0 = Clock::now();
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    const int status = pclose(pipe);
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// key=value fields of the table row for one family, or empty if missing.
std::map<std::string, std::string> table_row(const std::string& text,
                                             const std::string& family) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.rfind("family=" + family + " ", 0) != 0)
            continue;
        std::map<std::string, std::string> kv;
        std::istringstream toks(line);
        std::string tok;
        while (toks >> tok) {
            const auto eq = tok.find('=');
            if (eq != std::string::npos)
                kv[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
        return kv;
    }
    return {};
}

Graph random_graph(int n, double p, std::mt19937_64& eng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform01(eng) < p)
                g.add_edge(u, v);
    return g;
}

Graph random_connected_graph(int n, double p, std::mt19937_64& eng) {
    for (;;) {
        Graph g = random_graph(n, p, eng);
        if (is_connected(g))
            return g;
    }
}

template <typename Fn>
void enumerate_all_graphs(int n, Fn&& fn) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            slots.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        Graph g(n);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1)
                g.add_edge(slots[i].first, slots[i].second);
        fn(g);
    }
}

std::set<int> nb_set(const Graph& g, int v) {
    const auto& nb = g.neighbors(v);
    return std::set<int>(nb.begin(), nb.end());
}

// ---- criterion 1: the independence table at eps = 1, end to end -------

void criterion_table() {
    const RunResult r = run_cli("table1 --eps 1");
    std::string why;
    bool ok = r.exit_code == 0;
    if (!ok)
        why = "exit code " + std::to_string(r.exit_code);

    auto expect = [&](const std::string& family, const std::string& num,
                      const std::string& den, const std::string& unn) {
        const auto kv = table_row(r.out, family);
        if (kv.empty()) {
            ok = false;
            why = "no row for " + family;
            return;
        }
        if (kv.at("h_num") != num || kv.at("h_den") != den || kv.at("unn") != unn) {
            ok = false;
            why = family + " row mismatch";
        }
    };
    if (ok) {
        expect("complete", "3", "1", "yes");          // K_6: h = 3, UNN
        expect("cycle", "2", "5", "yes");             // C_10: h = 2/5, UNN
        expect("complete_bipartite", "1", "1", "no"); // K_{2,2}: h = 1, not UNN
        expect("twin_cycle", "2", "5", "no");         // h = 2/5 <= 1/2, not UNN
    }
    if (ok && r.seconds >= 1.0) {
        ok = false;
        why = "took " + std::to_string(r.seconds) + "s";
    }
    report(1, "independence table at eps=1 (exact h values, under 1s)", ok, why);
}

// ---- criterion 2: antichain preservation under 1000 lifts -------------

void criterion_lifts() {
    const auto t0 = Clock::now();
    std::mt19937_64 eng(20260816);
    int bases = 0, lifts_ok = 0, lifts_total = 0;
    while (bases < 200) {
        const int n = 2 + static_cast<int>(eng() % 11); // 2..12
        const double p = 0.2 + 0.6 * uniform01(eng);
        const Graph base = random_graph(n, p, eng);
        if (!check_unn(base).is_unn_antichain)
            continue;
        ++bases;
        for (int s = 0; s < 5; ++s) {
            const Graph lift = two_lift(Signing::random(base, eng()));
            ++lifts_total;
            if (check_unn(lift).is_unn_antichain)
                ++lifts_ok;
        }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool ok = lifts_ok == 1000 && lifts_total == 1000 && secs < 10.0;
    report(2, "antichain property preserved by 1000 random 2-lifts (under 10s)", ok,
           std::to_string(lifts_ok) + "/" + std::to_string(lifts_total) + " in " +
               std::to_string(secs) + "s");
}

// ---- criterion 3: neighborhood equalization on 100 random graphs ------

void criterion_equalize() {
    std::mt19937_64 eng(31337);
    int done = 0, ok_count = 0;
    while (done < 100) {
        const int n = 4 + static_cast<int>(eng() % 9); // 4..12
        const Graph g = random_connected_graph(n, 0.35, eng);
        std::vector<std::pair<int, int>> gaps;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!g.has_edge(u, v))
                    gaps.emplace_back(u, v);
        if (gaps.empty())
            continue;
        ++done;
        const auto [x, y] = gaps[eng() % gaps.size()];
        const Graph out = break_unn(g, x, y);
        const bool not_unn = !check_unn(out).is_unn_distinct;
        const bool degree_ok = out.max_degree() <= 2 * g.max_degree();
        const bool h_ok = cheeger_exact(out, 12).h >= cheeger_exact(g, 12).h;
        if (not_unn && degree_ok && h_ok)
            ++ok_count;
    }
    report(3,
           "equalizing a non-adjacent pair kills UNN, bounds degree, keeps expansion "
           "(100 graphs)",
           ok_count == 100, std::to_string(ok_count) + "/100");
}

// ---- criteria 4 and 7: the Monte Carlo trend, end to end ---------------

const char* kExperimentArgs =
    "experiment --sizes 4x4,8x8,16x16,32x32 --p 0.5 --trials 1000 --seed 1";

void criterion_trend() {
    const std::string csv_path = "acceptance_trend.csv";
    const RunResult r = run_cli(std::string(kExperimentArgs) + " --csv " + csv_path);
    bool ok = r.exit_code == 0;
    std::string why = ok ? "" : "exit code " + std::to_string(r.exit_code);

    std::vector<ExperimentRow> rows;
    if (ok) {
        std::ifstream in(csv_path);
        try {
            rows = read_csv(in);
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
    }
    if (ok && rows.size() != 4) {
        ok = false;
        why = "expected 4 rows, got " + std::to_string(rows.size());
    }
    if (ok) {
        for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
            const bool rising = rows[i + 1].p_hat >= rows[i].p_hat;
            const bool overlap = rows[i + 1].p_hat + rows[i + 1].ci_halfwidth >=
                                 rows[i].p_hat - rows[i].ci_halfwidth;
            if (!rising && !overlap) {
                ok = false;
                why = "drop beyond CI overlap at row " + std::to_string(i + 1);
            }
        }
    }
    if (ok && !(rows.back().p_hat >= 0.99)) {
        ok = false;
        why = "p_hat(32x32) = " + std::to_string(rows.back().p_hat);
    }
    if (ok && r.seconds >= 60.0) {
        ok = false;
        why = "took " + std::to_string(r.seconds) + "s";
    }
    if (ok)
        why = "p_hat: " + std::to_string(rows[0].p_hat) + " -> " +
              std::to_string(rows[1].p_hat) + " -> " + std::to_string(rows[2].p_hat) +
              " -> " + std::to_string(rows[3].p_hat) + " in " +
              std::to_string(r.seconds) + "s";
    std::remove(csv_path.c_str());
    report(4, "UNN rate rises with size and reaches 0.99 at 32x32 (under 60s)", ok, why);
}

void criterion_determinism() {
    const RunResult a = run_cli(kExperimentArgs);
    const RunResult b = run_cli(kExperimentArgs);
    const bool ok = a.exit_code == 0 && b.exit_code == 0 && !a.out.empty() &&
                    a.out == b.out;
    report(7, "repeated experiment runs emit byte-identical CSV", ok,
           ok ? "" : "outputs differ or nonzero exit");
}

// ---- criterion 5: optimized checks vs set-based oracles ----------------

void criterion_oracles() {
    long long discrepancies = 0, graphs = 0;

    auto audit = [&](const Graph& g) {
        ++graphs;
        const int n = g.node_count();
        const BMatrix b = b_matrix(g);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const auto a = nb_set(g, i), bb = nb_set(g, j);
                std::vector<int> diff;
                std::set_difference(a.begin(), a.end(), bb.begin(), bb.end(),
                                    std::back_inserter(diff));
                if (b.at(i, j) != static_cast<int>(diff.size()))
                    ++discrepancies;
                if (i != j) {
                    const bool contained = diff.empty();
                    if ((b.at(i, j) == 0) != contained)
                        ++discrepancies;
                }
            }
        const UnnReport fast = check_unn(g);
        bool distinct = true, antichain = true;
        for (int u = 0; u < n && (distinct || antichain); ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v)
                    continue;
                const auto a = nb_set(g, u), bb = nb_set(g, v);
                if (u < v && a == bb)
                    distinct = false;
                if (std::includes(bb.begin(), bb.end(), a.begin(), a.end()))
                    antichain = false;
            }
        if (fast.is_unn_distinct != distinct || fast.is_unn_antichain != antichain)
            ++discrepancies;
    };

    for (int n = 0; n <= 5; ++n)
        enumerate_all_graphs(n, audit);
    std::mt19937_64 eng(777);
    for (int rep = 0; rep < 500; ++rep) {
        const int n = 2 + static_cast<int>(eng() % 11);
        audit(random_graph(n, 0.15 + 0.7 * uniform01(eng), eng));
    }
    report(5, "difference matrix and UNN checks agree with set-based oracles",
           discrepancies == 0,
           std::to_string(graphs) + " graphs, " + std::to_string(discrepancies) +
               " discrepancies");
}

// ---- criterion 6: spectral bounds against exact conductance ------------

void criterion_spectral() {
    std::vector<Graph> corpus;
    for (int n = 3; n <= 12; ++n)
        corpus.push_back(cycle_graph(n));
    for (int n = 2; n <= 12; ++n)
        corpus.push_back(complete_graph(n));
    for (int k = 1; k <= 6; ++k)
        corpus.push_back(complete_bipartite(k, k));
    corpus.push_back(twin_cycle(8));
    corpus.push_back(twin_cycle(10));
    std::mt19937_64 eng(909);
    for (int rep = 0; rep < 300; ++rep) {
        const int n = 2 + static_cast<int>(eng() % 11);
        Graph g = random_connected_graph(n, 0.3 + 0.4 * uniform01(eng), eng);
        if (g.edge_count() > 0)
            corpus.push_back(std::move(g));
    }

    int violations = 0, regular_mismatches = 0, checked = 0, regulars = 0;
    for (const Graph& g : corpus) {
        if (!is_connected(g) || g.edge_count() == 0)
            continue;
        ++checked;
        const double phi = conductance_exact(g, 12).phi.value();
        const SpectralReport sr = spectral_report(g);
        if (!(sr.lambda2 / 2.0 <= phi + 1e-9 &&
              phi <= std::sqrt(2.0 * sr.lambda2) + 1e-9))
            ++violations;
        const auto ds = degree_sequence(g);
        const bool regular = std::set<int>(ds.begin(), ds.end()).size() == 1;
        if (regular) {
            ++regulars;
            const Rational h = cheeger_exact(g, 12).h;
            const Rational phi_exact = conductance_exact(g, 12).phi;
            if (!(h == Rational::of(g.max_degree() * phi_exact.num, phi_exact.den)))
                ++regular_mismatches;
        }
    }
    const bool ok = violations == 0 && regular_mismatches == 0 && checked > 300;
    report(6,
           "lambda2/2 <= conductance <= sqrt(2*lambda2); h = d*conductance when regular",
           ok,
           std::to_string(checked) + " graphs (" + std::to_string(regulars) +
               " regular), " + std::to_string(violations) + " bound violations, " +
               std::to_string(regular_mismatches) + " regular mismatches");
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: %s <path-to-cli-binary>\n", argv[0]);
        return 99;
    }
    g_cli = argv[1];

    criterion_table();
    criterion_lifts();
    criterion_equalize();
    criterion_trend();
    criterion_oracles();
    criterion_spectral();
    criterion_determinism();

    if (g_failures == 0)
        std::printf("all acceptance checks passed\n");
    else
        std::printf("%d acceptance check(s) failed\n", g_failures);
    return g_failures;
}
