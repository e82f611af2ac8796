/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PRC_HARNESS_HH
#define PRC_HARNESS_HH 1

#include <prc/coalition.hh>
#include <prc/graph.hh>
#include <prc/solver.hh>

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace prc
{
    // JSON interchange. Blocks are sorted 0-based vertex arrays; roles are
    // {"kind": "singleton_dominating"} or {"kind": "partner", "partner": j}.
    auto certificate_to_json(const PrcCertificate & certificate) -> nlohmann::json;

    /// Throws MalformedRecord on a document that does not match the schema.
    auto certificate_from_json(const nlohmann::json & doc) -> PrcCertificate;

    struct ComputeOptions
    {
        bool bruteforce = false;
        int workers = 1;
    };

    /// {graph6, n, m, prc, certificate?, stats}; certificate only when prc > 0.
    auto cmd_compute(const Graph & g, const ComputeOptions & options = {}) -> nlohmann::json;

    /// True iff every block's partner count stays within the maximum degree,
    /// plus one when g is disconnected. Vacuously true without a certificate.
    auto delta_bound_holds(const Graph & g, const std::optional<PrcCertificate> & certificate) -> bool;

    struct SweepOptions
    {
        bool with_c_number = false;
        std::optional<int> max_n;
        int workers = 1;
        bool timing = false;
    };

    /// One JSONL record for one input line. Never throws on bad input: parse
    /// failures and guard violations become {"line", "input", "error"} records.
    auto sweep_record(std::size_t line_number, const std::string & line, const SweepOptions & options) -> nlohmann::json;

    /// Processes lines [skip, end) of in, writing one record per line to out in
    /// input order. Returns the number of records written.
    auto sweep_stream(std::istream & in, std::ostream & out, std::size_t skip, const SweepOptions & options) -> std::size_t;

    /// File-level sweep. With resume, complete lines already in the output are
    /// kept and the sweep continues after them; a torn final line is dropped.
    auto cmd_sweep(const std::filesystem::path & input, const std::filesystem::path & output,
            bool resume, const SweepOptions & options) -> std::size_t;

    /// Size-k perfect dominating sets, one sorted vertex array per line.
    auto cmd_enumerate(const Graph & g, int k) -> std::vector<std::string>;

    struct SuiteFailure
    {
        std::string graph6;
        std::string expected;
        std::string got;
    };

    struct TheoremReport
    {
        std::string suite;
        int cases = 0;
        std::vector<SuiteFailure> failures;
        std::vector<std::string> notes;

        auto passed() const -> bool { return failures.empty(); }
    };

    auto suite_names() -> const std::vector<std::string> &;

    /// Runs a named theorem suite. Throws BadParams for an unknown name.
    auto run_suite(const std::string & name) -> TheoremReport;

    auto print_report(std::ostream & out, const TheoremReport & report) -> void;
}

#endif
