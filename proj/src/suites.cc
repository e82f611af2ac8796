/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <prc/harness.hh>
#include <prc/catalog.hh>
#include <prc/domination.hh>
#include <prc/errors.hh>
#include <prc/families.hh>
#include <prc/set_partitions.hh>

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <random>

using namespace prc;

using std::string;
using std::vector;

namespace
{
    auto label(const Graph & g) -> string
    {
        return g.order() <= 62 ? encode_graph6(g) : string{"n=" + std::to_string(g.order())};
    }

    auto fail(TheoremReport & report, const Graph & g, const string & expected, const string & got) -> void
    {
        report.failures.push_back(SuiteFailure{label(g), expected, got});
    }

    auto expect_eq(TheoremReport & report, const Graph & g, long long expected, long long got, const string & what) -> void
    {
        if (expected != got)
            fail(report, g, what + " = " + std::to_string(expected), what + " = " + std::to_string(got));
    }

    auto sets_to_string(const vector<VertexSet> & sets) -> string
    {
        string result;
        for (auto & s : sets) {
            result += "{";
            for (int v : s)
                result += (result.back() == '{' ? "" : ",") + std::to_string(v + 1);
            result += "}";
        }
        return result;
    }

    /// Every valid prc-partition of g, by validating all set partitions.
    auto for_each_prc_partition(const Graph & g, const std::function<void (const PrcCertificate &)> & visit) -> void
    {
        for_each_restricted_growth_string(g.order(), [&] (std::span<const int> rgs, int blocks) {
            auto result = validate_prc_partition(g, partition_from_rgs(rgs, blocks));
            if (auto certificate = std::get_if<PrcCertificate>(&result))
                visit(*certificate);
        });
    }

    auto check_solver_against_formula(TheoremReport & report, FamilyKind kind, int n, int oracle_limit) -> void
    {
        auto g = generate(FamilySpec{kind, {n}});
        int expected = kind == FamilyKind::Path ? formula_prc_path(n) : formula_prc_cycle(n);
        auto solved = prc_solve(g);
        ++report.cases;
        expect_eq(report, g, expected, solved.prc, "prc_solve");
        if (solved.certificate && ! verify_certificate(g, *solved.certificate))
            fail(report, g, "verifiable certificate", "certificate rejected");
        if (n <= oracle_limit)
            expect_eq(report, g, expected, prc_bruteforce(g).prc, "prc_bruteforce");
    }

    auto suite_paths() -> TheoremReport
    {
        TheoremReport report;
        report.suite = "paths";
        for (int n = 1 ; n <= 14 ; ++n)
            check_solver_against_formula(report, FamilyKind::Path, n, 10);
        return report;
    }

    auto suite_cycles() -> TheoremReport
    {
        TheoremReport report;
        report.suite = "cycles";
        for (int n = 3 ; n <= 13 ; ++n)
            check_solver_against_formula(report, FamilyKind::Cycle, n, 10);
        return report;
    }

    auto suite_delta_bound() -> TheoremReport
    {
        TheoremReport report;
        report.suite = "delta-bound";
        int partitions = 0;
        for (int n = 1 ; n <= 7 ; ++n)
            for (auto & g : graphs_up_to_isomorphism(n)) {
                if (! is_connected(g))
                    continue;
                ++report.cases;
                for_each_prc_partition(g, [&] (const PrcCertificate & c) {
                    ++partitions;
                    for (int i = 0 ; i < c.partition.size() ; ++i) {
                        int count = partner_count(g, c.partition, i);
                        if (count > g.max_degree())
                            fail(report, g, "partner_count <= " + std::to_string(g.max_degree()),
                                    "block " + sets_to_string({c.partition.blocks[i]}) + " has " + std::to_string(count));
                    }
                });
            }
        report.notes.push_back(std::to_string(partitions) + " prc-partitions of connected graphs with n <= 7 checked");

        // Sharpness: in K_{2,d} the singleton partition is valid and the
        // block {0} partners every vertex of the other side.
        for (int delta = 2 ; delta <= 6 ; ++delta) {
            auto g = generate(FamilySpec{FamilyKind::CompleteBipartite, {2, delta}});
            auto p = singleton_partition(g);
            ++report.cases;
            expect_eq(report, g, delta, g.max_degree(), "max degree");
            if (! std::holds_alternative<PrcCertificate>(validate_prc_partition(g, p)))
                fail(report, g, "singleton partition valid", "rejected");
            expect_eq(report, g, delta, partner_count(g, p, 0), "partners of {0}");
        }

        // The G_delta partition {{w},{u_1,v},{u_2},...} is not a prc-partition:
        // {u_1,v} dominates. Report what it does give.
        for (int delta = 2 ; delta <= 6 ; ++delta) {
            auto g = generate(FamilySpec{FamilyKind::GDelta, {delta}});
            auto p = gdelta_partition(delta);
            auto verdict = validate_prc_partition(g, p);
            string status = std::holds_alternative<PrcCertificate>(verdict) ? "valid"
                : to_string(std::get<Violation>(verdict).kind);
            report.notes.push_back("G_" + std::to_string(delta) + " partition: " + status + ", {w} has "
                    + std::to_string(partner_count(g, p, 0)) + " partners");
        }
        return report;
    }

    auto suite_disconnected_bound() -> TheoremReport
    {
        TheoremReport report;
        report.suite = "disconnected-bound";
        for (int m = 2 ; m <= 5 ; ++m) {
            auto g = generate(FamilySpec{FamilyKind::KmUnionK2, {m}});
            auto p = singleton_partition(g);
            ++report.cases;
            if (! std::holds_alternative<PrcCertificate>(validate_prc_partition(g, p)))
                fail(report, g, "singleton partition valid", "rejected");
            expect_eq(report, g, m, partner_count(g, p, m), "partners of {u_1}");
            expect_eq(report, g, m, g.max_degree() + 1, "max degree + 1");
        }

        for (int n = 2 ; n <= 6 ; ++n)
            for (auto & g : graphs_up_to_isomorphism(n)) {
                if (is_connected(g))
                    continue;
                ++report.cases;
                for_each_prc_partition(g, [&] (const PrcCertificate & c) {
                    for (int i = 0 ; i < c.partition.size() ; ++i)
                        if (partner_count(g, c.partition, i) > g.max_degree() + 1)
                            fail(report, g, "partner_count <= max degree + 1", "block " + sets_to_string({c.partition.blocks[i]}));
                });
            }
        return report;
    }

    auto one_based_sets(std::initializer_list<std::initializer_list<int>> sets) -> vector<VertexSet>
    {
        vector<VertexSet> result;
        for (auto & s : sets) {
            VertexSet v;
            for (int x : s)
                v.insert(x - 1);
            result.push_back(v);
        }
        std::sort(result.begin(), result.end());
        return result;
    }

    auto suite_pds() -> TheoremReport
    {
        TheoremReport report;
        report.suite = "pds";
        auto p8 = generate(FamilySpec{FamilyKind::Path, {8}});
        auto p13 = generate(FamilySpec{FamilyKind::Path, {13}});

        auto check = [&] (const Graph & g, int k, const vector<VertexSet> & expected) {
            ++report.cases;
            auto got = enumerate_perfect_dominating_sets(g, k);
            if (got != expected)
                fail(report, g, "order " + std::to_string(k) + ": " + sets_to_string(expected), sets_to_string(got));
        };

        check(p8, 4, one_based_sets({{1, 2, 5, 8}, {1, 4, 5, 8}, {1, 4, 7, 8}, {2, 5, 6, 7}, {2, 3, 6, 7}, {2, 3, 4, 7}}));
        check(p8, 3, one_based_sets({{2, 5, 8}, {1, 4, 7}}));
        check(p13, 5, one_based_sets({{1, 4, 7, 10, 13}, {2, 3, 6, 9, 12}, {2, 5, 6, 9, 12}, {2, 5, 8, 9, 12}, {2, 5, 8, 11, 12}}));

        // printed order-6 list: twenty entries, three of them the same set
        auto printed = one_based_sets({
                {1, 2, 5, 6, 9, 12}, {2, 3, 6, 7, 10, 13}, {1, 2, 5, 8, 9, 12}, {2, 3, 6, 9, 10, 13},
                {1, 2, 5, 8, 11, 12}, {2, 3, 6, 9, 12, 13}, {1, 4, 5, 8, 9, 12}, {2, 3, 6, 9, 12, 13},
                {1, 4, 5, 8, 11, 12}, {2, 3, 6, 9, 12, 13}, {1, 4, 7, 8, 11, 12}, {2, 5, 8, 9, 12, 13},
                {1, 2, 3, 6, 9, 12}, {2, 3, 4, 7, 10, 13}, {1, 4, 5, 6, 9, 12}, {2, 5, 6, 7, 10, 13},
                {1, 4, 7, 8, 9, 12}, {2, 5, 8, 9, 10, 13}, {1, 4, 7, 10, 11, 12}, {2, 5, 8, 11, 12, 13}});
        vector<VertexSet> distinct = printed;
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

        ++report.cases;
        auto order6 = enumerate_perfect_dominating_sets(p13, 6);
        for (auto & s : distinct)
            if (! std::binary_search(order6.begin(), order6.end(), s))
                fail(report, p13, "printed set " + sets_to_string({s}) + " is perfect dominating", "not found");

        vector<VertexSet> unlisted;
        std::set_difference(order6.begin(), order6.end(), distinct.begin(), distinct.end(), std::back_inserter(unlisted));
        report.notes.push_back("P_13 order-6 perfect dominating sets: enumerated " + std::to_string(order6.size())
                + ", printed 20 entries (" + std::to_string(distinct.size()) + " distinct)"
                + (unlisted.empty() ? string{} : ", not printed: " + sets_to_string(unlisted)));

        ++report.cases;
        expect_eq(report, p8, 3, domination_numbers(p8).gamma_p, "gamma_p");
        ++report.cases;
        auto c11 = generate(FamilySpec{FamilyKind::Cycle, {11}});
        expect_eq(report, c11, 5, domination_numbers(c11).gamma_p, "gamma_p");
        return report;
    }

    auto suite_delta_one() -> TheoremReport
    {
        TheoremReport report;
        report.suite = "delta-one";
        for (int n = 2 ; n <= 7 ; ++n)
            for (auto & g : graphs_up_to_isomorphism(n)) {
                if (g.min_degree() != 1 || ! is_connected(g))
                    continue;
                ++report.cases;
                bool full = prc_solve(g).prc == n;
                bool predicted = (2 == n) || is_in_family_B(g).member;
                if (full != predicted)
                    fail(report, g, string{"PRC = n: "} + (predicted ? "yes" : "no"), full ? "yes" : "no");
            }
        return report;
    }

    auto suite_triangle_free() -> TheoremReport
    {
        TheoremReport report;
        report.suite = "triangle-free";
        for (int n = 4 ; n <= 7 ; ++n)
            for (auto & g : graphs_up_to_isomorphism(n)) {
                if (! is_triangle_free(g))
                    continue;
                ++report.cases;
                bool full = prc_solve(g).prc == n;
                auto t = classify_T1_T2(g);
                bool predicted = t != TClass::Neither;
                if (full != predicted)
                    fail(report, g, "PRC = n iff T1/T2 (class " + to_string(t) + ")", full ? "PRC = n" : "PRC < n");
            }
        return report;
    }

    auto suite_trees() -> TheoremReport
    {
        TheoremReport report;
        report.suite = "trees";
        auto trees = free_trees();
        auto tree_r = generate(FamilySpec{FamilyKind::TreeR, {}});

        std::map<int, int> per_order;
        for (auto & t : trees) {
            ++per_order[t.order()];
            if (! is_tree(t))
                fail(report, t, "a tree", "not a tree");
        }
        const int expected_counts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47};
        for (int n = 1 ; n <= 9 ; ++n)
            if (per_order[n] != expected_counts[n - 1])
                report.failures.push_back(SuiteFailure{"n=" + std::to_string(n), std::to_string(expected_counts[n - 1]) + " trees",
                        std::to_string(per_order[n]) + " trees"});

        for (auto & t : trees) {
            ++report.cases;
            int n = t.order();
            int prc = prc_solve(t).prc;
            bool path = t.max_degree() <= 2;

            bool full_expected = path && (n == 1 || n == 2 || n == 4);
            if ((prc == n) != full_expected)
                fail(report, t, full_expected ? "PRC = n" : "PRC < n", "PRC = " + std::to_string(prc));

            if (n > 2 && prc == n - 1)
                fail(report, t, "PRC != n-1", "PRC = n-1");

            if (n > 2 && ! (path && n == 4)) {
                if (prc > n - 2)
                    fail(report, t, "PRC <= n-2", "PRC = " + std::to_string(prc));
                bool extremal = (path && n >= 5 && n <= 7) || are_isomorphic(t, tree_r);
                if ((prc == n - 2) != extremal)
                    fail(report, t, extremal ? "PRC = n-2" : "PRC < n-2", "PRC = " + std::to_string(prc));
            }
        }
        return report;
    }

    auto suite_oracle() -> TheoremReport
    {
        TheoremReport report;
        report.suite = "oracle";

        auto compare = [&] (const Graph & g) {
            ++report.cases;
            auto fast = prc_solve(g);
            auto slow = prc_bruteforce(g);
            expect_eq(report, g, slow.prc, fast.prc, "prc");
            if (fast.certificate != slow.certificate)
                fail(report, g, "identical certificates", "certificates differ");
            if (fast.certificate && ! verify_certificate(g, *fast.certificate))
                fail(report, g, "verifiable certificate", "rejected");
            if (slow.stats.partitions_tested != bell_number(g.order()))
                fail(report, g, "Bell(n) partitions tested", std::to_string(slow.stats.partitions_tested));
        };

        for (int n = 1 ; n <= 6 ; ++n)
            for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << (n * (n - 1) / 2)) ; ++mask)
                compare(graph_from_edge_mask(n, mask));

        std::mt19937_64 rng{20241017};
        for (int i = 0 ; i < 1000 ; ++i) {
            int n = 8 + (i % 2);
            double density = 0.15 + 0.7 * static_cast<double>(rng() % 1001) / 1000.0;
            std::uint64_t mask = 0;
            for (int bit = 0 ; bit < n * (n - 1) / 2 ; ++bit)
                if (static_cast<double>(rng() % 1000000) / 1000000.0 < density)
                    mask |= std::uint64_t{1} << bit;
            compare(graph_from_edge_mask(n, mask));
        }
        return report;
    }

    auto suite_c_bound() -> TheoremReport
    {
        TheoremReport report;
        report.suite = "c-bound";
        for (int n = 1 ; n <= 6 ; ++n)
            for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << (n * (n - 1) / 2)) ; ++mask) {
                auto g = graph_from_edge_mask(n, mask);
                ++report.cases;
                int prc = prc_solve(g).prc, c = coalition_number_bruteforce(g);
                if (prc > c)
                    fail(report, g, "PRC <= C = " + std::to_string(c), "PRC = " + std::to_string(prc));
            }
        return report;
    }

    auto suite_constructions() -> TheoremReport
    {
        TheoremReport report;
        report.suite = "constructions";
        auto check = [&] (FamilyKind kind, int n) {
            auto g = generate(FamilySpec{kind, {n}});
            int expected = kind == FamilyKind::Path ? formula_prc_path(n) : formula_prc_cycle(n);
            auto p = construct_known_prc_partition(kind, n);
            ++report.cases;
            expect_eq(report, g, expected, p.size(), "blocks");
            auto result = validate_prc_partition(g, p);
            if (auto v = std::get_if<Violation>(&result))
                fail(report, g, "valid partition " + sets_to_string(p.blocks),
                        to_string(v->kind) + (v->block_index ? " at block " + std::to_string(*v->block_index) : string{}));
        };
        for (int n = 1 ; n <= 20 ; ++n)
            if (n != 3)
                check(FamilyKind::Path, n);
        for (int n = 3 ; n <= 23 ; ++n)
            check(FamilyKind::Cycle, n);
        return report;
    }

    using SuiteFunction = TheoremReport (*)();

    auto registry() -> const std::vector<std::pair<string, SuiteFunction>> &
    {
        static const std::vector<std::pair<string, SuiteFunction>> suites = {
            { "paths",              suite_paths },
            { "cycles",             suite_cycles },
            { "delta-bound",        suite_delta_bound },
            { "disconnected-bound", suite_disconnected_bound },
            { "pds",                suite_pds },
            { "delta-one",          suite_delta_one },
            { "triangle-free",      suite_triangle_free },
            { "trees",              suite_trees },
            { "oracle",             suite_oracle },
            { "c-bound",            suite_c_bound },
            { "constructions",      suite_constructions }
        };
        return suites;
    }
}

auto prc::suite_names() -> const vector<string> &
{
    static const vector<string> names = [] {
        vector<string> result;
        for (auto & [name, f] : registry())
            result.push_back(name);
        return result;
    }();
    return names;
}

auto prc::run_suite(const string & name) -> TheoremReport
{
    for (auto & [suite, f] : registry())
        if (suite == name)
            return f();
    throw Error(ErrorKind::BadParams, "unknown suite '" + name + "'");
}

auto prc::print_report(std::ostream & out, const TheoremReport & report) -> void
{
    out << "suite " << report.suite << ": " << report.cases << " cases, " << report.failures.size() << " failures"
        << (report.passed() ? " [PASS]" : " [FAIL]") << '\n';
    for (auto & note : report.notes)
        out << "  note: " << note << '\n';
    for (auto & f : report.failures)
        out << "  " << f.graph6 << ": expected " << f.expected << ", got " << f.got << '\n';
}
