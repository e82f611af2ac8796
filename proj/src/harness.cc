/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <prc/harness.hh>
#include <prc/domination.hh>
#include <prc/errors.hh>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace prc;

using nlohmann::json;

using std::optional;
using std::string;
using std::vector;

namespace fs = std::filesystem;

namespace
{
    auto vertex_array(VertexSet s) -> json
    {
        json result = json::array();
        for (int v : s)
            result.push_back(v);
        return result;
    }

    auto malformed(const string & why) -> Error
    {
        return Error(ErrorKind::MalformedRecord, "certificate JSON: " + why);
    }
}

auto prc::certificate_to_json(const PrcCertificate & certificate) -> json
{
    json blocks = json::array(), roles = json::array();
    for (auto & b : certificate.partition.blocks)
        blocks.push_back(vertex_array(b));
    for (auto & role : certificate.roles) {
        if (auto partner = std::get_if<Partner>(&role))
            roles.push_back(json{{"kind", "partner"}, {"partner", partner->block}});
        else
            roles.push_back(json{{"kind", "singleton_dominating"}});
    }
    return json{{"blocks", blocks}, {"roles", roles}};
}

auto prc::certificate_from_json(const json & doc) -> PrcCertificate
{
    if (! doc.is_object() || ! doc.contains("blocks") || ! doc.contains("roles"))
        throw malformed("expected an object with 'blocks' and 'roles'");
    if (! doc["blocks"].is_array() || ! doc["roles"].is_array())
        throw malformed("'blocks' and 'roles' must be arrays");

    PrcCertificate certificate;
    for (auto & block : doc["blocks"]) {
        if (! block.is_array())
            throw malformed("each block must be an array");
        VertexSet s;
        for (auto & v : block) {
            if (! v.is_number_integer() || v.get<int>() < 0 || v.get<int>() >= max_vertices)
                throw malformed("vertex labels must be integers in 0..63");
            s.insert(v.get<int>());
        }
        certificate.partition.blocks.push_back(s);
    }
    for (auto & role : doc["roles"]) {
        if (! role.is_object() || ! role.contains("kind") || ! role["kind"].is_string())
            throw malformed("each role needs a string 'kind'");
        auto kind = role["kind"].get<string>();
        if (kind == "singleton_dominating")
            certificate.roles.emplace_back(SingletonDominating{});
        else if (kind == "partner" && role.contains("partner") && role["partner"].is_number_integer())
            certificate.roles.emplace_back(Partner{role["partner"].get<int>()});
        else
            throw malformed("unknown role '" + role.dump() + "'");
    }
    return certificate;
}

auto prc::cmd_compute(const Graph & g, const ComputeOptions & options) -> json
{
    auto result = options.bruteforce ? prc_bruteforce(g) : prc_solve(g, SolveOptions{options.workers});

    json doc;
    doc["graph6"] = g.order() <= 62 ? encode_graph6(g) : string{};
    doc["n"] = g.order();
    doc["m"] = g.edge_count();
    doc["prc"] = result.prc;
    if (result.certificate)
        doc["certificate"] = certificate_to_json(*result.certificate);
    doc["stats"] = json{
        {"nodes", result.stats.nodes},
        {"partitions_tested", result.stats.partitions_tested},
        {"wall_ms", static_cast<double>(result.stats.wall_time.count()) / 1000.0}};
    return doc;
}

auto prc::delta_bound_holds(const Graph & g, const optional<PrcCertificate> & certificate) -> bool
{
    if (! certificate)
        return true;
    int limit = g.max_degree() + (is_connected(g) ? 0 : 1);
    auto & p = certificate->partition;
    for (int i = 0 ; i < p.size() ; ++i)
        if (partner_count(g, p, i) > limit)
            return false;
    return true;
}

auto prc::sweep_record(std::size_t line_number, const string & line, const SweepOptions & options) -> json
{
    auto start = std::chrono::steady_clock::now();
    string input = line;
    while (! input.empty() && (input.back() == '\r' || input.back() == ' ' || input.back() == '\t'))
        input.pop_back();

    try {
        auto g = parse_graph6(input);
        if (options.max_n && g.order() > *options.max_n)
            throw Error(ErrorKind::TooLarge, "order " + std::to_string(g.order()) + " exceeds --max-n "
                    + std::to_string(*options.max_n));

        auto result = prc_solve(g);
        json record;
        record["line"] = line_number;
        record["graph6"] = input;
        record["n"] = g.order();
        record["m"] = g.edge_count();
        record["prc"] = result.prc;
        if (options.with_c_number && g.order() <= coalition_number_max_order)
            record["c_number"] = coalition_number_bruteforce(g);
        record["delta_bound_ok"] = delta_bound_holds(g, result.certificate);
        record["elapsed_ms"] = options.timing
            ? std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count()
            : 0;
        return record;
    }
    catch (const Error & e) {
        return json{{"line", line_number}, {"input", input}, {"error", e.what()}};
    }
}

auto prc::sweep_stream(std::istream & in, std::ostream & out, std::size_t skip, const SweepOptions & options) -> std::size_t
{
    constexpr std::size_t batch_size = 64;

    std::size_t line_number = 0, written = 0;
    string line;
    vector<string> batch;
    vector<json> records;

    auto flush = [&] () {
        std::size_t first = line_number - batch.size();
        records.assign(batch.size(), json{});
        int workers = std::max(1, options.workers);
        if (workers == 1 || batch.size() == 1)
            for (std::size_t i = 0 ; i < batch.size() ; ++i)
                records[i] = sweep_record(first + i, batch[i], options);
        else {
            vector<std::thread> threads;
            for (int w = 0 ; w < workers ; ++w)
                threads.emplace_back([&, w] () {
                    for (std::size_t i = w ; i < batch.size() ; i += workers)
                        records[i] = sweep_record(first + i, batch[i], options);
                });
            for (auto & t : threads)
                t.join();
        }
        for (auto & r : records)
            out << r.dump() << '\n';
        out.flush();
        written += batch.size();
        batch.clear();
    };

    while (std::getline(in, line)) {
        if (line_number++ < skip)
            continue;
        batch.push_back(line);
        if (batch.size() == batch_size)
            flush();
    }
    if (! batch.empty())
        flush();

    return written;
}

auto prc::cmd_sweep(const fs::path & input, const fs::path & output, bool resume, const SweepOptions & options) -> std::size_t
{
    std::ifstream in{input};
    if (! in)
        throw Error(ErrorKind::MalformedRecord, "cannot open input " + input.string());

    std::size_t done = 0;
    if (resume && fs::exists(output)) {
        string contents;
        {
            std::ifstream existing{output, std::ios::binary};
            std::ostringstream buffer;
            buffer << existing.rdbuf();
            contents = buffer.str();
        }
        auto last_newline = contents.rfind('\n');
        std::size_t keep = (last_newline == string::npos) ? 0 : last_newline + 1;
        if (keep != contents.size())
            fs::resize_file(output, keep);
        done = static_cast<std::size_t>(std::count(contents.begin(), contents.begin() + keep, '\n'));
    }

    std::ofstream out{output, resume ? std::ios::app : std::ios::trunc};
    if (! out)
        throw Error(ErrorKind::MalformedRecord, "cannot open output " + output.string());
    return sweep_stream(in, out, done, options);
}

auto prc::cmd_enumerate(const Graph & g, int k) -> vector<string>
{
    vector<string> lines;
    for (auto s : enumerate_perfect_dominating_sets(g, k))
        lines.push_back(vertex_array(s).dump());
    return lines;
}
