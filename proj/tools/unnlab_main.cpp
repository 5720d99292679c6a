// unnlab: decide unique-neighborhood properties, compute exact and
// spectral Cheeger bounds, build the counterexample families and
// expander transforms, and run the random-bipartite experiments.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "unnlab/constructions.hpp"
#include "unnlab/experiment.hpp"
#include "unnlab/io.hpp"
#include "unnlab/serialize.hpp"
#include "unnlab/spectral.hpp"
#include "unnlab/unn.hpp"

namespace {

using namespace unnlab;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int exact_limit_from_env() {
    const char* raw = std::getenv("UNNLAB_MAX_EXACT_N");
    if (!raw)
        return kDefaultExactLimit;
    try {
        std::size_t pos = 0;
        int value = std::stoi(raw, &pos);
        if (pos != std::string(raw).size() || value < 2)
            throw std::invalid_argument("bad");
        return value;
    } catch (const std::exception&) {
        throw InputError("UNNLAB_MAX_EXACT_N must be an integer >= 2, got '" +
                         std::string(raw) + "'");
    }
}

UnnPredicate parse_predicate(const std::string& name) {
    if (name == "distinct")
        return UnnPredicate::Distinct;
    if (name == "antichain")
        return UnnPredicate::Antichain;
    throw UsageError("predicate must be 'distinct' or 'antichain', got '" + name + "'");
}

std::vector<std::pair<int, int>> parse_sizes(const std::string& arg) {
    std::vector<std::pair<int, int>> sizes;
    std::size_t start = 0;
    while (start <= arg.size()) {
        std::size_t end = arg.find(',', start);
        if (end == std::string::npos)
            end = arg.size();
        const std::string tok = arg.substr(start, end - start);
        const std::size_t x = tok.find('x');
        try {
            if (tok.empty() || x == std::string::npos)
                throw std::invalid_argument("bad");
            std::size_t p1 = 0, p2 = 0;
            const std::string left = tok.substr(0, x), right = tok.substr(x + 1);
            int n = std::stoi(left, &p1);
            int m = std::stoi(right, &p2);
            if (p1 != left.size() || p2 != right.size())
                throw std::invalid_argument("bad");
            sizes.emplace_back(n, m);
        } catch (const std::exception&) {
            throw UsageError("cannot parse size '" + tok + "'; expected e.g. 8x8");
        }
        start = end + 1;
    }
    return sizes;
}

void emit_graph(const std::string& path, const Graph& g, bool dot,
                std::optional<int> bipartite_n1 = std::nullopt) {
    if (dot) {
        if (path == "-") {
            write_dot(std::cout, g);
        } else {
            std::ofstream out(path);
            if (!out)
                throw InputError("cannot open '" + path + "' for writing");
            write_dot(out, g);
        }
        return;
    }
    write_edge_list_file(path, g, bipartite_n1);
}

void print_unn_line(std::ostream& out, const UnnReport& report, UnnPredicate which) {
    const char* label = which == UnnPredicate::Distinct ? "distinct" : "antichain";
    if (report.verdict(which)) {
        out << "UNN: yes (" << label << ")\n";
    } else {
        const auto& w = *report.witness(which);
        out << "UNN: no (" << label << "); witness: " << w.first << " " << w.second
            << "\n";
    }
}

int run_check(const std::string& file, const std::string& predicate, bool json) {
    const Graph g = read_edge_list_file(file);
    const UnnReport report = check_unn(g);
    if (json) {
        nlohmann::json j;
        j["is_unn_distinct"] = report.is_unn_distinct;
        j["is_unn_antichain"] = report.is_unn_antichain;
        j["witness_distinct"] = nullptr;
        j["witness_antichain"] = nullptr;
        if (report.witness_distinct)
            j["witness_distinct"] = {report.witness_distinct->first,
                                     report.witness_distinct->second};
        if (report.witness_antichain)
            j["witness_antichain"] = {report.witness_antichain->first,
                                      report.witness_antichain->second};
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (predicate.empty()) {
        print_unn_line(std::cout, report, UnnPredicate::Distinct);
        print_unn_line(std::cout, report, UnnPredicate::Antichain);
    } else {
        print_unn_line(std::cout, report, parse_predicate(predicate));
    }
    return 0;
}

int run_cheeger(const std::string& file, bool spectral, bool json) {
    const Graph g = read_edge_list_file(file);
    if (spectral) {
        const SpectralReport report = spectral_report(g);
        if (json)
            std::cout << to_json(report) << "\n";
        else
            write_kv(std::cout, report);
    } else {
        const CheegerCertificate cert = cheeger_exact(g, exact_limit_from_env());
        if (json)
            std::cout << to_json(cert) << "\n";
        else
            write_kv(std::cout, cert);
    }
    return 0;
}

long long param_ll(const std::vector<std::string>& params, std::size_t i,
                   const char* what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(params.at(i), &pos);
        if (pos != params[i].size())
            throw std::invalid_argument("bad");
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("cannot parse ") + what + " from '" + params[i] + "'");
    }
}

int run_generate(const std::string& family, const std::vector<std::string>& params,
                 const std::string& out, bool dot) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw UsageError("family '" + family + "' takes " + std::to_string(k) +
                             " parameter(s), got " + std::to_string(params.size()));
    };
    if (family == "complete") {
        need(1);
        emit_graph(out, complete_graph(static_cast<int>(param_ll(params, 0, "n"))), dot);
    } else if (family == "cycle") {
        need(1);
        emit_graph(out, cycle_graph(static_cast<int>(param_ll(params, 0, "n"))), dot);
    } else if (family == "complete-bipartite") {
        need(2);
        emit_graph(out,
                   complete_bipartite(static_cast<int>(param_ll(params, 0, "a")),
                                      static_cast<int>(param_ll(params, 1, "b"))),
                   dot);
    } else if (family == "empty") {
        need(1);
        emit_graph(out, empty_graph(static_cast<int>(param_ll(params, 0, "n"))), dot);
    } else if (family == "twin-cycle") {
        need(1);
        emit_graph(out, twin_cycle(static_cast<int>(param_ll(params, 0, "m"))), dot);
    } else if (family == "random-bipartite") {
        need(4);
        const int n = static_cast<int>(param_ll(params, 0, "n"));
        const int m = static_cast<int>(param_ll(params, 1, "m"));
        double p = 0.0;
        try {
            std::size_t pos = 0;
            p = std::stod(params[2], &pos);
            if (pos != params[2].size())
                throw std::invalid_argument("bad");
        } catch (const std::exception&) {
            throw UsageError("cannot parse p from '" + params[2] + "'");
        }
        const auto seed = static_cast<std::uint64_t>(param_ll(params, 3, "seed"));
        const BipartiteGraph bg = random_bipartite(n, m, p, seed);
        emit_graph(out, bg.to_graph(), dot, bg.n1);
    } else {
        throw UsageError("unknown family '" + family +
                         "'; expected complete|cycle|complete-bipartite|empty|"
                         "twin-cycle|random-bipartite");
    }
    return 0;
}

int run_lift(const std::string& file, const std::string& signs, const std::string& out,
             bool dot) {
    const Graph base = read_edge_list_file(file);
    Signing signing;
    if (signs.rfind("random:", 0) == 0) {
        const std::string seed_str = signs.substr(7);
        try {
            std::size_t pos = 0;
            const std::uint64_t seed = std::stoull(seed_str, &pos);
            if (pos != seed_str.size())
                throw std::invalid_argument("bad");
            signing = Signing::random(base, seed);
        } catch (const std::exception&) {
            throw UsageError("cannot parse seed from '" + signs + "'");
        }
    } else {
        signing = read_signing_file(signs, base);
    }
    emit_graph(out, two_lift(signing), dot);
    return 0;
}

int run_break_unn(const std::string& file, int x, int y, const std::string& out,
                  bool dot) {
    emit_graph(out, break_unn(read_edge_list_file(file), x, y), dot);
    return 0;
}

int run_experiment(const std::string& sizes_arg, double p, int trials,
                   std::uint64_t seed, const std::string& predicate,
                   const std::string& csv_path) {
    ExperimentConfig cfg;
    cfg.sizes = parse_sizes(sizes_arg);
    cfg.p = p;
    cfg.trials = trials;
    cfg.master_seed = seed;
    cfg.predicate = parse_predicate(predicate);
    const auto rows = run_unn_experiment(cfg);
    if (csv_path == "-") {
        write_csv(std::cout, rows);
    } else {
        std::ofstream out(csv_path);
        if (!out)
            throw InputError("cannot open '" + csv_path + "' for writing");
        write_csv(out, rows);
    }
    return 0;
}

int run_table1(double eps, bool json) {
    const auto rows = table1_report(eps, exact_limit_from_env());
    if (json)
        std::cout << table1_to_json(rows, eps) << "\n";
    else
        write_table1(std::cout, rows, eps);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"unique-neighborhood and Cheeger-constant toolkit"};
    app.require_subcommand(1);

    // check
    std::string check_file, check_predicate;
    bool check_json = false;
    auto* check = app.add_subcommand("check", "decide the unique-neighborhood property");
    check->add_option("file", check_file, "edge-list file, '-' for stdin")->required();
    check->add_option("--predicate", check_predicate,
                      "report only one reading: distinct|antichain");
    check->add_flag("--json", check_json, "emit the full report as JSON");

    // cheeger
    std::string cheeger_file;
    bool want_exact = false, want_spectral = false, cheeger_json = false;
    auto* cheeger = app.add_subcommand("cheeger", "Cheeger constant, exact or bounds");
    cheeger->add_option("file", cheeger_file, "edge-list file, '-' for stdin")->required();
    auto* exact_flag = cheeger->add_flag("--exact", want_exact,
                                         "exhaustive exact certificate (default)");
    cheeger->add_flag("--spectral", want_spectral, "normalized-Laplacian bounds")
        ->excludes(exact_flag);
    cheeger->add_flag("--json", cheeger_json, "emit JSON instead of key=value lines");

    // generate
    std::string gen_family, gen_out = "-";
    std::vector<std::string> gen_params;
    bool gen_dot = false;
    auto* generate = app.add_subcommand("generate", "emit one of the graph families");
    generate->add_option("family", gen_family,
                         "complete|cycle|complete-bipartite|empty|twin-cycle|"
                         "random-bipartite")
        ->required();
    generate->add_option("params", gen_params, "family parameters");
    generate->add_option("-o,--output", gen_out, "output file, '-' for stdout");
    generate->add_flag("--dot", gen_dot, "emit Graphviz DOT instead of an edge list");

    // lift
    std::string lift_file, lift_signs, lift_out = "-";
    bool lift_dot = false;
    auto* lift = app.add_subcommand("lift", "2-lift of a base graph under a signing");
    lift->add_option("file", lift_file, "base edge-list file, '-' for stdin")->required();
    lift->add_option("--signs", lift_signs, "signing file, or random:<seed>")->required();
    lift->add_option("-o,--output", lift_out, "output file, '-' for stdout");
    lift->add_flag("--dot", lift_dot, "emit Graphviz DOT instead of an edge list");

    // break-unn
    std::string break_file, break_out = "-";
    int break_x = 0, break_y = 0;
    bool break_dot = false;
    auto* breaker = app.add_subcommand(
        "break-unn", "equalize two non-adjacent nodes' neighborhoods");
    breaker->add_option("file", break_file, "edge-list file, '-' for stdin")->required();
    breaker->add_option("--x", break_x, "first node")->required();
    breaker->add_option("--y", break_y, "second node")->required();
    breaker->add_option("-o,--output", break_out, "output file, '-' for stdout");
    breaker->add_flag("--dot", break_dot, "emit Graphviz DOT instead of an edge list");

    // experiment
    std::string exp_sizes, exp_predicate = "distinct", exp_csv = "-";
    double exp_p = 0.5;
    int exp_trials = 1000;
    std::uint64_t exp_seed = 0;
    auto* experiment = app.add_subcommand(
        "experiment", "Monte Carlo UNN rate over random bipartite graphs");
    experiment->add_option("--sizes", exp_sizes, "comma-separated n x m list, e.g. 4x4,8x8")
        ->required();
    experiment->add_option("--p", exp_p, "edge probability in (0,1)");
    experiment->add_option("--trials", exp_trials, "trials per size");
    experiment->add_option("--seed", exp_seed, "master seed");
    experiment->add_option("--predicate", exp_predicate, "distinct|antichain");
    experiment->add_option("--csv", exp_csv, "CSV output file, '-' for stdout");

    // table1
    double t1_eps = 1.0;
    bool t1_json = false;
    auto* table1 = app.add_subcommand(
        "table1", "UNN-vs-Cheeger independence table, one row per cell");
    table1->add_option("--eps", t1_eps, "expansion threshold eps > 0")->required();
    table1->add_flag("--json", t1_json, "emit JSON instead of key=value rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed())
            return run_check(check_file, check_predicate, check_json);
        if (cheeger->parsed())
            return run_cheeger(cheeger_file, want_spectral, cheeger_json);
        if (generate->parsed())
            return run_generate(gen_family, gen_params, gen_out, gen_dot);
        if (lift->parsed())
            return run_lift(lift_file, lift_signs, lift_out, lift_dot);
        if (breaker->parsed())
            return run_break_unn(break_file, break_x, break_y, break_out, break_dot);
        if (experiment->parsed())
            return run_experiment(exp_sizes, exp_p, exp_trials, exp_seed, exp_predicate,
                                  exp_csv);
        if (table1->parsed())
            return run_table1(t1_eps, t1_json);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
