/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <prc/errors.hh>
#include <prc/families.hh>
#include <prc/harness.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

using namespace prc;

using std::cerr;
using std::cout;
using std::string;

namespace
{
    auto exit_code_for(const Error & e) -> int
    {
        switch (e.kind()) {
            case ErrorKind::UnsupportedSize:
            case ErrorKind::TooLarge:
                return 3;
            default:
                return 2;
        }
    }

    auto read_input_graph(const string & graph6, const string & edge_list) -> Graph
    {
        if (! edge_list.empty()) {
            std::ifstream in{edge_list};
            if (! in)
                throw Error(ErrorKind::MalformedRecord, "cannot open " + edge_list);
            return parse_edge_list(in);
        }
        return parse_graph6(graph6);
    }

    auto print_summary(const nlohmann::json & doc) -> void
    {
        cout << "graph6 " << doc["graph6"].get<string>() << "  n=" << doc["n"] << " m=" << doc["m"] << '\n';
        cout << "PRC = " << doc["prc"] << '\n';
        if (doc.contains("certificate")) {
            auto & c = doc["certificate"];
            for (std::size_t i = 0 ; i < c["blocks"].size() ; ++i) {
                cout << "  V" << i << " = " << c["blocks"][i].dump() << "  ";
                auto & role = c["roles"][i];
                if (role["kind"] == "partner")
                    cout << "partners V" << role["partner"] << '\n';
                else
                    cout << "singleton dominating\n";
            }
        }
        cout << "nodes " << doc["stats"]["nodes"] << ", partitions tested " << doc["stats"]["partitions_tested"]
            << ", " << doc["stats"]["wall_ms"] << " ms\n";
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Perfect coalition partitions: exact PRC(G), sweeps and theorem suites"};
    app.require_subcommand(1);

    string graph6, edge_list;
    bool as_json = false, bruteforce = false;
    int workers = 1;
    auto compute = app.add_subcommand("compute", "Compute PRC(G) with a certificate");
    auto compute_inputs = compute->add_option_group("input");
    compute_inputs->add_option("--graph6", graph6, "Graph as a graph6 record");
    compute_inputs->add_option("--edge-list", edge_list, "Edge-list file: 'n m' then m lines 'u v'");
    compute_inputs->require_option(1);
    compute->add_flag("--json", as_json, "Print the JSON document");
    compute->add_flag("--bruteforce", bruteforce, "Use the exhaustive oracle (n <= 11)");
    compute->add_option("--workers", workers, "Search threads")->check(CLI::PositiveNumber);

    string sweep_in, sweep_out;
    bool resume = false;
    SweepOptions sweep_options;
    int max_n = -1;
    auto sweep = app.add_subcommand("sweep", "Compute PRC for every graph6 line of a file, writing JSONL");
    sweep->add_option("--in", sweep_in, "graph6 stream")->required();
    sweep->add_option("--out", sweep_out, "JSONL output")->required();
    sweep->add_flag("--resume", resume, "Continue after the records already in --out");
    sweep->add_flag("--with-c", sweep_options.with_c_number, "Also compute the coalition number (n <= 10)");
    sweep->add_option("--max-n", max_n, "Reject graphs above this order");
    sweep->add_option("--workers", sweep_options.workers, "Worker threads")->check(CLI::PositiveNumber);
    sweep->add_flag("--timing", sweep_options.timing, "Record elapsed_ms (makes output run-dependent)");

    string enum_graph6, kind = "pds";
    int k = 0;
    auto enumerate = app.add_subcommand("enumerate", "List perfect dominating sets of one size");
    enumerate->add_option("--graph6", enum_graph6, "Graph as a graph6 record")->required();
    enumerate->add_option("--k", k, "Set size")->required();
    enumerate->add_option("--kind", kind, "Set kind")->check(CLI::IsMember({"pds"}));

    string suite;
    auto verify = app.add_subcommand("verify", "Run a theorem suite");
    verify->add_option("--suite", suite, "Suite name, or 'all'")->required();

    string spec_text, emit = "graph6";
    auto family = app.add_subcommand("family", "Generate a named graph");
    family->add_option("--spec", spec_text, "e.g. path:9, cycle:12, gdelta:4, t2:3,4,1, tree-r")->required();
    family->add_option("--emit", emit, "Output format")->check(CLI::IsMember({"graph6", "edges"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compute) {
            auto g = read_input_graph(graph6, edge_list);
            auto doc = cmd_compute(g, ComputeOptions{bruteforce, workers});
            if (as_json)
                cout << doc.dump() << '\n';
            else
                print_summary(doc);
            return 0;
        }

        if (*sweep) {
            if (max_n >= 0)
                sweep_options.max_n = max_n;
            auto written = cmd_sweep(sweep_in, sweep_out, resume, sweep_options);
            cerr << written << " records written to " << sweep_out << '\n';
            return 0;
        }

        if (*enumerate) {
            auto g = parse_graph6(enum_graph6);
            for (auto & line : cmd_enumerate(g, k))
                cout << line << '\n';
            return 0;
        }

        if (*verify) {
            if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
                cerr << "unknown suite '" << suite << "'; known:";
                for (auto & name : suite_names())
                    cerr << ' ' << name;
                cerr << '\n';
                return 2;
            }
            bool passed = true;
            for (auto & name : suite_names())
                if (suite == "all" || suite == name) {
                    auto report = run_suite(name);
                    print_report(cout, report);
                    passed = passed && report.passed();
                }
            return passed ? 0 : 1;
        }

        if (*family) {
            auto g = generate(parse_family_spec(spec_text));
            if (emit == "edges")
                write_edge_list(cout, g);
            else
                cout << encode_graph6(g) << '\n';
            return 0;
        }
    }
    catch (const Error & e) {
        cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }

    return 0;
}
