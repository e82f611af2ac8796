/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "support.hh"

#include <prc/catalog.hh>
#include <prc/errors.hh>
#include <prc/families.hh>
#include <prc/harness.hh>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace prc;
using namespace test_support;

using nlohmann::json;

namespace fs = std::filesystem;

namespace
{
    struct ScratchDir
    {
        fs::path path;

        explicit ScratchDir(const std::string & name) :
            path(fs::temp_directory_path() / ("prc-test-" + name + "-" + std::to_string(::getpid())))
        {
            fs::remove_all(path);
            fs::create_directories(path);
        }

        ~ScratchDir()
        {
            std::error_code ignored;
            fs::remove_all(path, ignored);
        }
    };

    auto slurp(const fs::path & p) -> std::string
    {
        std::ifstream in{p, std::ios::binary};
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto spit(const fs::path & p, const std::string & text) -> void
    {
        std::ofstream out{p, std::ios::binary};
        out << text;
    }

    auto lines_of(const std::string & text) -> std::vector<std::string>
    {
        std::vector<std::string> result;
        std::istringstream in{text};
        std::string line;
        while (std::getline(in, line))
            result.push_back(line);
        return result;
    }
}

TEST_CASE("compute documents")
{
    auto p4 = cmd_compute(path(4));
    CHECK(p4["prc"] == 4);
    CHECK(p4["n"] == 4);
    CHECK(p4["m"] == 3);
    CHECK(p4["graph6"] == "Ch");
    CHECK(p4["certificate"]["blocks"] == json::parse("[[0],[1],[2],[3]]"));

    auto k1 = cmd_compute(build_graph(1, {}));
    CHECK(k1["prc"] == 1);
    CHECK(k1["certificate"]["roles"][0]["kind"] == "singleton_dominating");

    auto p3 = cmd_compute(path(3));
    CHECK(p3["prc"] == 0);
    CHECK(! p3.contains("certificate"));

    auto brute = cmd_compute(cycle(6), ComputeOptions{true, 1});
    CHECK(brute["prc"] == 6);
    CHECK(brute["stats"]["partitions_tested"] == 203);
}

TEST_CASE("certificate json round trip")
{
    for (auto & g : {path(7), cycle(9), build_graph(1, {}), complete(3)}) {
        auto result = prc_solve(g);
        REQUIRE(result.certificate);
        auto doc = certificate_to_json(*result.certificate);
        CHECK(certificate_from_json(doc) == *result.certificate);
        CHECK(certificate_from_json(json::parse(doc.dump())) == *result.certificate);
    }

    for (auto bad : {"[]", "{}", R"({"blocks":[[0]]})", R"({"blocks":[[0]],"roles":[{"kind":"other"}]})",
            R"({"blocks":[[-1]],"roles":[]})", R"({"blocks":[["a"]],"roles":[]})", R"({"blocks":[[0]],"roles":[{"kind":"partner"}]})"})
        CHECK_THROWS_AS(certificate_from_json(json::parse(bad)), Error);
}

TEST_CASE("sweep over the connected graphs on four vertices")
{
    std::ostringstream input;
    for (auto & g : graphs_up_to_isomorphism(4))
        if (is_connected(g))
            input << encode_graph6(g) << '\n';

    std::istringstream in{input.str()};
    std::ostringstream out;
    SweepOptions options;
    options.with_c_number = true;
    CHECK(sweep_stream(in, out, 0, options) == 6);

    auto records = lines_of(out.str());
    REQUIRE(records.size() == 6);
    for (std::size_t i = 0 ; i < records.size() ; ++i) {
        auto r = json::parse(records[i]);
        CHECK(r["line"] == i);
        CHECK(r["n"] == 4);
        CHECK(r["prc"].get<int>() <= r["c_number"].get<int>());
        CHECK(r["delta_bound_ok"] == true);
        CHECK(r["elapsed_ms"] == 0);
        auto g = parse_graph6(r["graph6"].get<std::string>());
        CHECK(r["c_number"] == oracle::coalition_number(to_oracle(g)));
        CHECK(r["prc"] == oracle::prc_number(to_oracle(g)));
    }
}

TEST_CASE("sweep isolates malformed lines")
{
    std::istringstream in{"Bg\nnot graph6\nCh\r\n~?A?\n"};
    std::ostringstream out;
    SweepOptions options;
    options.workers = 3;
    CHECK(sweep_stream(in, out, 0, options) == 4);
    auto records = lines_of(out.str());
    REQUIRE(records.size() == 4);
    CHECK(json::parse(records[0])["prc"] == 0);
    auto bad = json::parse(records[1]);
    CHECK(bad["line"] == 1);
    CHECK(bad["input"] == "not graph6");
    CHECK(bad.contains("error"));
    CHECK(json::parse(records[2])["prc"] == 4);
    CHECK(json::parse(records[2])["graph6"] == "Ch");
    CHECK(json::parse(records[3]).contains("error"));

    std::istringstream big{"Ch\nE]r?\n"};
    std::ostringstream limited;
    SweepOptions capped;
    capped.max_n = 5;
    sweep_stream(big, limited, 0, capped);
    auto capped_records = lines_of(limited.str());
    CHECK(json::parse(capped_records[0])["prc"] == 4);
    CHECK(json::parse(capped_records[1]).contains("error"));
}

TEST_CASE("resumed sweeps reproduce a fresh run byte for byte")
{
    ScratchDir dir{"resume"};
    std::string input;
    for (int n = 1 ; n <= 5 ; ++n)
        for (auto & g : graphs_up_to_isomorphism(n))
            input += encode_graph6(g) + "\n";
    spit(dir.path / "in.g6", input);

    SweepOptions options;
    options.with_c_number = true;
    auto total = cmd_sweep(dir.path / "in.g6", dir.path / "fresh.jsonl", false, options);
    CHECK(total == 1 + 2 + 4 + 11 + 34);
    auto fresh = slurp(dir.path / "fresh.jsonl");

    auto lines = lines_of(fresh);
    for (std::size_t keep : {std::size_t{0}, std::size_t{5}, std::size_t{30}, lines.size()}) {
        std::string partial;
        for (std::size_t i = 0 ; i < keep ; ++i)
            partial += lines[i] + "\n";
        spit(dir.path / "partial.jsonl", partial);
        auto written = cmd_sweep(dir.path / "in.g6", dir.path / "partial.jsonl", true, options);
        CHECK(written == lines.size() - keep);
        CHECK(slurp(dir.path / "partial.jsonl") == fresh);
    }

    // A torn final record is discarded and recomputed.
    spit(dir.path / "torn.jsonl", lines[0] + "\n" + lines[1] + "\n" + lines[2].substr(0, 7));
    cmd_sweep(dir.path / "in.g6", dir.path / "torn.jsonl", true, options);
    CHECK(slurp(dir.path / "torn.jsonl") == fresh);

    CHECK_THROWS_AS(cmd_sweep(dir.path / "missing.g6", dir.path / "x.jsonl", false, options), Error);
}

TEST_CASE("enumerate")
{
    auto p8 = cmd_enumerate(path(8), 4);
    CHECK(p8.size() == 6);
    CHECK(p8.front() == "[1,2,3,6]");
    CHECK(cmd_enumerate(build_graph(1, {}), 0).empty());
    CHECK(cmd_enumerate(path(8), 5).size() == oracle::perfect_dominating_sets(to_oracle(path(8)), 5).size());
}

TEST_CASE("suites")
{
    CHECK(suite_names().size() == 11);
    CHECK_THROWS_AS(run_suite("no-such-suite"), Error);

    auto report = run_suite("paths");
    CHECK(report.passed());
    CHECK(report.cases == 14);

    std::ostringstream out;
    print_report(out, report);
    CHECK(out.str().find("[PASS]") != std::string::npos);
}

TEST_CASE("delta bound flag")
{
    auto k3k2 = generate(FamilySpec{FamilyKind::KmUnionK2, {3}});
    auto result = prc_solve(k3k2);
    REQUIRE(result.certificate);
    CHECK(delta_bound_holds(k3k2, result.certificate));
    CHECK(delta_bound_holds(path(3), std::nullopt));
}
