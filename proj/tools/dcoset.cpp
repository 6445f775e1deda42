// dcoset.cpp - command-line front end: classification verdicts, certified
// infiniteness witnesses, orbit-count evidence, and whole-table sweeps.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "dcoset/query.hpp"

namespace {

using namespace dcoset;

struct CommonArgs {
    std::string group;
    std::string factors;
    std::string parabolic;
    std::string output = "text";
    std::string strategy = "lemma";
    std::string oracle;     // comma-separated primes; empty means not requested
    std::string budget;     // "<flags>,<seconds>"
};

void add_triple(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("group", args.group, "ambient group, e.g. C4")->required();
    cmd->add_option("factors", args.factors, "factor list, e.g. C2*C2 or A1[gl]*T1")->required();
    cmd->add_option("parabolic", args.parabolic, "crossed nodes, e.g. P1, P2,4 or Pn+")
        ->required();
}

void add_output(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--output", args.output, "text, json or csv");
}

OracleBudget parse_budget(const std::string& text) {
    OracleBudget b;
    if (text.empty()) return b;
    const size_t comma = text.find(',');
    try {
        if (comma == std::string::npos) {
            b.max_flags = std::stoll(text);
        } else {
            b.max_flags = std::stoll(text.substr(0, comma));
            b.max_seconds = std::stod(text.substr(comma + 1));
        }
    } catch (...) {
        throw std::invalid_argument("budget must look like <flags>,<seconds>");
    }
    if (b.max_flags < 1 || b.max_seconds <= 0)
        throw std::invalid_argument("budget values must be positive");
    return b;
}

// Reassemble the documented query grammar so every front-end path runs
// through the same parser as scripted input.
Query query_of(const CommonArgs& args) {
    std::string line = "classify " + args.group + ' ' + args.factors + ' ' + args.parabolic;
    if (!args.oracle.empty()) line += " --oracle " + args.oracle;
    line += " --strategy " + args.strategy;
    line += " --output " + args.output;
    return parse_query(line);
}

int run_classify_cmd(const CommonArgs& args) {
    const Query q = query_of(args);
    const ClassifyReport rep = run_classify(q, parse_budget(args.budget));
    std::cout << render_classify(rep);
    return rep.agreement ? 0 : 1;
}

int run_witness_cmd(const CommonArgs& args) {
    const Query q = query_of(args);
    const RootSystem g = build_root_system(q.family, q.rank);
    const CriterionReport rep = search_infiniteness_witness(g, q.subgroup, q.parabolic,
                                                            q.strategy);
    std::cout << render_criterion(rep, q.output);
    return 0;
}

int run_oracle_cmd(const CommonArgs& args, const std::string& export_prefix) {
    CommonArgs with_default = args;
    if (with_default.oracle.empty()) with_default.oracle = "2,3,5";
    const Query q = query_of(with_default);
    const OracleBudget budget = parse_budget(args.budget);
    const StabilizationReport rep =
        stabilization_test(q.family, q.rank, q.subgroup, q.parabolic, *q.q_list, budget);
    std::cout << render_oracle(rep, q.output);
    if (!export_prefix.empty()) {
        for (int prime : rep.q_run) {
            const FormedSpace space = build_formed_space(q.family, q.rank, prime);
            const FlagSet flags = enumerate_flags(space, q.parabolic, budget);
            const std::string path = export_prefix + ".q" + std::to_string(prime) + ".csv";
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot write " + path);
            out << flag_set_csv(flags);
        }
    }
    return 0;
}

int run_sweep_cmd(int rank_bound, const CommonArgs& args) {
    std::vector<int> q_list{2, 3, 5};
    const bool with_oracle = !args.oracle.empty();
    if (with_oracle) q_list = detail::parse_prime_list(args.oracle, 0);
    const SweepReport rep = run_sweep(rank_bound, with_oracle, parse_budget(args.budget), q_list,
                                      parse_strategy(args.strategy));
    std::cout << render_sweep(rep, parse_output_format(args.output));
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finiteness of double coset collections for classical groups"};
    app.require_subcommand(1);
    CommonArgs args;
    std::string export_prefix;
    int rank_bound = 0;

    CLI::App* classify = app.add_subcommand("classify", "table verdict with provenance");
    add_triple(classify, args);
    add_output(classify, args);
    classify->add_option("--oracle", args.oracle, "orbit-count primes, e.g. 2,3,5");
    classify->add_option("--strategy", args.strategy, "lemma, b2a3 or full");
    classify->add_option("--budget", args.budget, "oracle budget <flags>,<seconds>");

    CLI::App* witness = app.add_subcommand("witness", "certified infiniteness witness search");
    add_triple(witness, args);
    add_output(witness, args);
    witness->add_option("--strategy", args.strategy, "lemma, b2a3 or full");

    CLI::App* oracle = app.add_subcommand("oracle", "orbit counts over a prime list");
    add_triple(oracle, args);
    add_output(oracle, args);
    oracle->add_option("--oracle", args.oracle, "primes, default 2,3,5");
    oracle->add_option("--budget", args.budget, "budget <flags>,<seconds>");
    oracle->add_option("--export-flags", export_prefix, "write flag sets to <prefix>.q<q>.csv");

    CLI::App* sweep = app.add_subcommand("sweep", "classify every subgroup at every maximal P");
    sweep->add_option("rank_bound", rank_bound, "largest ambient rank")->required();
    add_output(sweep, args);
    sweep->add_option("--oracle", args.oracle, "run orbit counts over these primes");
    sweep->add_option("--strategy", args.strategy, "lemma, b2a3 or full");
    sweep->add_option("--budget", args.budget, "oracle budget <flags>,<seconds>");

    CLI::App* tables = app.add_subcommand("tables", "print the embedded rule data");
    add_output(tables, args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return run_classify_cmd(args);
        if (witness->parsed()) return run_witness_cmd(args);
        if (oracle->parsed()) return run_oracle_cmd(args, export_prefix);
        if (sweep->parsed()) return run_sweep_cmd(rank_bound, args);
        if (tables->parsed()) {
            std::cout << render_tables(parse_output_format(args.output));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
