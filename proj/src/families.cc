/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <prc/families.hh>
#include <prc/errors.hh>

#include <charconv>
#include <map>

using namespace prc;

using std::pair;
using std::string;
using std::string_view;
using std::vector;

namespace
{
    struct KindInfo
    {
        FamilyKind kind;
        string_view name;
        std::size_t arity;
    };

    constexpr KindInfo kinds[] = {
        { FamilyKind::Path,              "path",     1 },
        { FamilyKind::Cycle,             "cycle",    1 },
        { FamilyKind::Complete,          "complete", 1 },
        { FamilyKind::Star,              "star",     1 },
        { FamilyKind::CompleteBipartite, "kbip",     2 },
        { FamilyKind::GDelta,            "gdelta",   1 },
        { FamilyKind::KmUnionK2,         "kmk2",     1 },
        { FamilyKind::T1,                "t1",       1 },
        { FamilyKind::T2,                "t2",       3 },
        { FamilyKind::TreeR,             "tree-r",   0 },
        { FamilyKind::FamilyB,           "bfam",     2 }
    };

    auto info(FamilyKind kind) -> const KindInfo &
    {
        for (auto & k : kinds)
            if (k.kind == kind)
                return k;
        throw Error(ErrorKind::BadParams, "unknown family kind");
    }

    auto bad(const FamilySpec & spec, const string & why) -> Error
    {
        return Error(ErrorKind::BadParams, string{info(spec.kind).name} + ": " + why);
    }

    auto check_params(const FamilySpec & spec) -> void
    {
        auto & p = spec.params;
        if (p.size() != info(spec.kind).arity)
            throw bad(spec, "expected " + std::to_string(info(spec.kind).arity) + " parameters");

        auto need = [&] (bool ok, const char * what) {
            if (! ok)
                throw bad(spec, what);
        };

        switch (spec.kind) {
            case FamilyKind::Path:
            case FamilyKind::Complete:          need(p[0] >= 1 && p[0] <= max_vertices, "n must be in 1..64"); break;
            case FamilyKind::Cycle:             need(p[0] >= 3 && p[0] <= max_vertices, "n must be in 3..64"); break;
            case FamilyKind::Star:              need(p[0] >= 1 && p[0] < max_vertices, "leaf count must be in 1..63"); break;
            case FamilyKind::CompleteBipartite: need(p[0] >= 1 && p[1] >= 1 && p[0] + p[1] <= max_vertices, "need r,s >= 1 and r+s <= 64"); break;
            case FamilyKind::GDelta:            need(p[0] >= 2 && p[0] + 2 <= max_vertices, "delta must be in 2..62"); break;
            case FamilyKind::KmUnionK2:         need(p[0] >= 2 && p[0] + 2 <= max_vertices, "m must be in 2..62"); break;
            case FamilyKind::T1:                need(p[0] >= 2 && 2 * p[0] <= max_vertices, "r must be in 2..32"); break;
            case FamilyKind::T2:
                need(p[0] >= 2 && p[1] >= 2 && p[0] + p[1] <= max_vertices, "need r,s >= 2 and r+s <= 64");
                need(p[2] >= 0 && p[2] < std::min(p[0], p[1]), "matching size must be below min(r,s)");
                break;
            case FamilyKind::TreeR:             break;
            case FamilyKind::FamilyB:           need(p[0] >= 0 && p[1] >= 1 && p[0] + p[1] + 2 <= max_vertices, "need a >= 0, b >= 1"); break;
        }
    }

    /// K_{r,s} with sides 0..r-1 and r..r+s-1, minus the pairs i-(r+i) for i < removed.
    auto bipartite_minus_matching(int r, int s, int removed) -> Graph
    {
        vector<pair<int, int>> edges;
        for (int i = 0 ; i < r ; ++i)
            for (int j = 0 ; j < s ; ++j)
                if (! (i == j && i < removed))
                    edges.emplace_back(i, r + j);
        return build_graph(r + s, edges);
    }

    /// Blocks from 1-based vertex lists, as printed for v_1 .. v_n.
    auto one_based(std::initializer_list<std::initializer_list<int>> blocks) -> Partition
    {
        Partition p;
        for (auto & b : blocks) {
            VertexSet s;
            for (int v : b)
                s.insert(v - 1);
            p.blocks.push_back(s);
        }
        return p;
    }

    auto path_partition(int n) -> Partition
    {
        switch (n) {
            case 1:  return one_based({{1}});
            case 2:  return one_based({{1}, {2}});
            case 4:  return one_based({{1}, {2}, {3}, {4}});
            case 5:  return one_based({{1, 5}, {2}, {3, 4}});
            case 6:  return one_based({{2}, {5}, {3, 6}, {1, 4}});
            case 7:  return one_based({{2, 6}, {1, 7}, {3}, {4}, {5}});
            case 8:  return one_based({{2, 3, 6}, {1, 4, 5}, {7}, {8}});
            case 9:  return one_based({{3, 6, 9}, {1, 4, 8}, {2}, {5}, {7}});
            case 10: return one_based({{1, 7}, {4, 10}, {2, 9}, {3, 6}, {5, 8}});
            case 11: return one_based({{1, 4, 8, 11}, {2, 3, 6, 10}, {5}, {7}, {9}});
            case 13: return one_based({{1, 4, 5, 8, 12}, {2, 3, 7, 10, 13}, {6}, {9}, {11}});
        }

        Partition p;
        p.blocks.resize(6);
        auto put = [&] (int block, int v) {
            if (v >= 1 && v <= n)
                p.blocks[block].insert(v - 1);
        };

        if (n % 2 == 0) {
            for (int v : {2, 6, 9}) put(0, v);
            for (int v : {1, 4, 7}) put(1, v);
            for (int k = 3 ; 4 * k <= n ; ++k) {
                put(0, 4 * k);
                put(0, 4 * k + 1);
                put(1, 4 * k - 1);
                put(1, 4 * k + 2);
            }
            put(2, 5); put(3, 3); put(4, 10); put(5, 8);
        }
        else {
            for (int v : {2, 9, 12}) put(0, v);
            for (int v : {1, 4, 7, 10}) put(1, v);
            for (int k = 4 ; 4 * k - 2 <= n ; ++k) {
                put(0, 4 * k - 1);
                put(0, 4 * k);
                put(1, 4 * k - 2);
                put(1, 4 * k + 1);
            }
            put(2, 5); put(2, 8); put(3, 3); put(3, 6); put(4, 13); put(5, 11);
        }
        return p;
    }

    /// Proper six-block partitions of C_10, C_13, C_16 and C_19: blocks 1 and
    /// 2 partner block 0, blocks 4 and 5 partner block 3, v_1 in block 0 and
    /// v_n in block 3.
    auto proper_cycle_base(int n) -> Partition
    {
        switch (n) {
            case 10: return one_based({{1, 5, 8}, {4}, {2}, {3, 6, 10}, {7}, {9}});
            case 13: return one_based({{1, 5, 8, 11}, {2}, {4}, {3, 6, 13}, {9, 12}, {7, 10}});
            case 16: return one_based({{1, 5, 8, 11, 14}, {4}, {2}, {3, 6, 16}, {9, 12, 15}, {7, 10, 13}});
            case 19: return one_based({{1, 8, 11, 14, 17}, {4, 7}, {2, 5}, {3, 6, 9, 19}, {12, 15, 18}, {10, 13, 16}});
        }
        throw Error(ErrorKind::BadParams, "no proper base partition for C_" + std::to_string(n));
    }

    auto cycle_partition(int n) -> Partition
    {
        switch (n) {
            case 3:  return one_based({{1}, {2}, {3}});
            case 4:  return one_based({{1}, {2}, {3}, {4}});
            case 5:  return one_based({{1}, {2, 3}, {4, 5}});
            case 6:  return one_based({{1}, {2}, {3}, {4}, {5}, {6}});
            case 7:  return one_based({{1, 7}, {2, 6}, {3}, {4}, {5}});
            case 8:  return one_based({{1, 2, 5}, {6}, {3, 4, 7}, {8}});
            case 9:  return one_based({{1, 7}, {2, 8}, {3, 9}, {4}, {5}, {6}});
            case 11: return one_based({{1, 4, 8, 11}, {2, 3, 6, 10}, {5}, {9}, {7}});
            case 12: return one_based({{1, 7}, {2, 8}, {3, 9}, {4, 10}, {5, 11}, {6, 12}});
            case 15: return one_based({{1, 7, 13}, {2, 8, 14}, {3, 9, 15}, {4, 10}, {5, 11}, {6, 12}});
        }

        // C_{k+4} from a proper partition of C_k: v_{k+1}, v_{k+2} join block 0
        // and v_{k+3}, v_{k+4} join block 3
        int k = n;
        while (k > 19 || (k != 10 && k != 13 && k != 16 && k != 19))
            k -= 4;
        Partition p = proper_cycle_base(k);
        for ( ; k < n ; k += 4) {
            p.blocks[0].insert(k);
            p.blocks[0].insert(k + 1);
            p.blocks[3].insert(k + 2);
            p.blocks[3].insert(k + 3);
        }
        return p;
    }
}

auto prc::parse_family_spec(string_view text) -> FamilySpec
{
    auto colon = text.find(':');
    string_view name = text.substr(0, colon);

    const KindInfo * found = nullptr;
    for (auto & k : kinds)
        if (k.name == name)
            found = &k;
    if (! found)
        throw Error(ErrorKind::BadParams, "unknown family '" + string{name} + "'");

    FamilySpec spec{found->kind, {}};
    if (colon != string_view::npos) {
        string_view rest = text.substr(colon + 1);
        while (true) {
            auto comma = rest.find(',');
            string_view item = rest.substr(0, comma);
            int value = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty())
                throw Error(ErrorKind::BadParams, "bad parameter '" + string{item} + "' in '" + string{text} + "'");
            spec.params.push_back(value);
            if (comma == string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
    }

    check_params(spec);
    return spec;
}

auto prc::to_string(const FamilySpec & spec) -> string
{
    string result{info(spec.kind).name};
    for (std::size_t i = 0 ; i < spec.params.size() ; ++i)
        result += (0 == i ? ":" : ",") + std::to_string(spec.params[i]);
    return result;
}

auto prc::generate(const FamilySpec & spec) -> Graph
{
    check_params(spec);
    auto & p = spec.params;
    vector<pair<int, int>> edges;

    switch (spec.kind) {
        case FamilyKind::Path:
            for (int i = 0 ; i + 1 < p[0] ; ++i)
                edges.emplace_back(i, i + 1);
            return build_graph(p[0], edges);

        case FamilyKind::Cycle:
            for (int i = 0 ; i < p[0] ; ++i)
                edges.emplace_back(i, (i + 1) % p[0]);
            return build_graph(p[0], edges);

        case FamilyKind::Complete:
            for (int i = 0 ; i < p[0] ; ++i)
                for (int j = i + 1 ; j < p[0] ; ++j)
                    edges.emplace_back(i, j);
            return build_graph(p[0], edges);

        case FamilyKind::Star:
            for (int i = 1 ; i <= p[0] ; ++i)
                edges.emplace_back(0, i);
            return build_graph(p[0] + 1, edges);

        case FamilyKind::CompleteBipartite:
            return bipartite_minus_matching(p[0], p[1], 0);

        case FamilyKind::GDelta: {
            int delta = p[0];
            for (int i = 2 ; i < delta + 2 ; ++i)
                for (int j = i + 1 ; j < delta + 2 ; ++j)
                    edges.emplace_back(i, j);
            edges.emplace_back(0, 1);
            edges.emplace_back(1, 2);
            return build_graph(delta + 2, edges);
        }

        case FamilyKind::KmUnionK2: {
            int m = p[0];
            for (int i = 0 ; i < m ; ++i)
                for (int j = i + 1 ; j < m ; ++j)
                    edges.emplace_back(i, j);
            edges.emplace_back(m, m + 1);
            return build_graph(m + 2, edges);
        }

        case FamilyKind::T1:
            return bipartite_minus_matching(p[0], p[0], p[0]);

        case FamilyKind::T2:
            return bipartite_minus_matching(p[0], p[1], p[2]);

        case FamilyKind::TreeR:
            return build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {2, 4}, {3, 5}});

        case FamilyKind::FamilyB: {
            int a = p[0], b = p[1];
            int first_clique = 2 + a, n = 2 + a + b;
            edges.emplace_back(0, 1);
            for (int i = 2 ; i < first_clique ; ++i) {
                edges.emplace_back(1, i);
                for (int j = first_clique ; j < n ; ++j)
                    edges.emplace_back(i, j);
            }
            for (int i = first_clique ; i < n ; ++i)
                for (int j = i + 1 ; j < n ; ++j)
                    edges.emplace_back(i, j);
            return build_graph(n, edges);
        }
    }

    throw Error(ErrorKind::BadParams, "unknown family kind");
}

auto prc::gdelta_partition(int delta) -> Partition
{
    check_params(FamilySpec{FamilyKind::GDelta, {delta}});
    Partition p;
    p.blocks.push_back(VertexSet::of({0}));
    p.blocks.push_back(VertexSet::of({1, 2}));
    for (int i = 3 ; i < delta + 2 ; ++i)
        p.blocks.push_back(VertexSet::singleton(i));
    return p;
}

auto prc::to_string(TClass t) -> string
{
    switch (t) {
        case TClass::T1:      return "T1";
        case TClass::T2:      return "T2";
        case TClass::Neither: return "Neither";
    }
    return "Neither";
}

auto prc::is_in_family_B(const Graph & g) -> FamilyBMembership
{
    if (g.order() < 2 || g.min_degree() != 1)
        return {};

    for (int x = 0 ; x < g.order() ; ++x) {
        if (g.degree(x) != 1)
            continue;
        int y = g.neighbours(x).front();
        VertexSet independent = g.neighbours(y) - VertexSet::singleton(x);
        VertexSet clique = g.vertices() - g.neighbours(y) - VertexSet::of({x, y});

        bool ok = ! clique.empty();
        for (int a : independent)
            ok = ok && ! g.neighbours(a).intersects(independent) && clique.subset_of(g.neighbours(a));
        for (int b : clique)
            ok = ok && (clique - VertexSet::singleton(b)).subset_of(g.neighbours(b));

        if (ok)
            return FamilyBMembership{true, x};
    }
    return {};
}

auto prc::classify_T1_T2(const Graph & g) -> TClass
{
    int n = g.order();
    if (n < 4)
        return TClass::Neither;

    if (! is_connected(g)) {
        // only K_{2,2} minus a perfect matching falls apart
        bool two_k2 = (4 == n && 2 == g.edge_count() && 1 == g.min_degree() && 1 == g.max_degree());
        return two_k2 ? TClass::T1 : TClass::Neither;
    }

    vector<int> side(n, -1);
    vector<int> queue{0};
    side[0] = 0;
    for (std::size_t head = 0 ; head < queue.size() ; ++head) {
        int u = queue[head];
        for (int w : g.neighbours(u)) {
            if (side[w] < 0) {
                side[w] = 1 - side[u];
                queue.push_back(w);
            }
            else if (side[w] == side[u])
                return TClass::Neither;
        }
    }

    VertexSet left, right;
    for (int v = 0 ; v < n ; ++v)
        (0 == side[v] ? left : right).insert(v);
    int r = left.size(), s = right.size();
    if (r < 2 || s < 2)
        return TClass::Neither;

    int missing = 0;
    for (int v : left) {
        int absent = (right - g.neighbours(v)).size();
        if (absent > 1)
            return TClass::Neither;
        missing += absent;
    }
    for (int v : right)
        if ((left - g.neighbours(v)).size() > 1)
            return TClass::Neither;

    if (r == s && missing == r)
        return TClass::T1;
    if (missing < std::min(r, s))
        return TClass::T2;
    return TClass::Neither;
}

auto prc::classify(const Graph & g) -> FamilyMembership
{
    return FamilyMembership{is_in_family_B(g), classify_T1_T2(g)};
}

auto prc::formula_prc_path(int n) -> int
{
    if (n < 1)
        throw Error(ErrorKind::BadParams, "path order must be at least 1");
    switch (n) {
        case 1: return 1;
        case 2: return 2;
        case 3: return 0;
        case 4: case 6: case 8: return 4;
        case 5: return 3;
        case 7: case 9: case 10: case 11: case 13: return 5;
        default: return 6;
    }
}

auto prc::formula_prc_cycle(int n) -> int
{
    if (n < 3)
        throw Error(ErrorKind::BadParams, "cycle order must be at least 3");
    switch (n) {
        case 3: case 4: case 6: return n;
        case 5: return 3;
        case 8: return 4;
        case 7: case 11: return 5;
        default: return 6;
    }
}

auto prc::construct_known_prc_partition(FamilyKind kind, int n) -> Partition
{
    if (n > max_vertices)
        throw Error(ErrorKind::BadParams, "order above " + std::to_string(max_vertices));

    if (kind == FamilyKind::Path) {
        if (n < 1)
            throw Error(ErrorKind::BadParams, "path order must be at least 1");
        if (3 == n)
            throw Error(ErrorKind::NoPartition, "P_3 has no prc-partition");
        return path_partition(n);
    }
    if (kind == FamilyKind::Cycle) {
        if (n < 3)
            throw Error(ErrorKind::BadParams, "cycle order must be at least 3");
        return cycle_partition(n);
    }
    throw Error(ErrorKind::BadParams, "known partitions exist only for paths and cycles");
}

auto prc::is_tree(const Graph & g) -> bool
{
    return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}
