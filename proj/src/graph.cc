/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <prc/graph.hh>
#include <prc/errors.hh>

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

using namespace prc;

using std::optional;
using std::pair;
using std::string;
using std::string_view;
using std::vector;

namespace
{
    constexpr string_view graph6_header = ">>graph6<<";

    auto trim(string_view s) -> string_view
    {
        while (! s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
            s.remove_suffix(1);
        while (! s.empty() && (s.front() == ' ' || s.front() == '\t'))
            s.remove_prefix(1);
        return s;
    }

    auto graph6_value(char c) -> int
    {
        int value = static_cast<unsigned char>(c);
        if (value < 63 || value > 126)
            throw Error(ErrorKind::MalformedRecord, "byte " + std::to_string(value) + " outside 63..126");
        return value - 63;
    }
}

Graph::Graph(int n, vector<VertexSet> adj) :
    _n(n),
    _adj(std::move(adj))
{
    int degree_sum = 0;
    for (auto & a : _adj)
        degree_sum += a.size();
    _edge_count = degree_sum / 2;
}

auto Graph::min_degree() const -> int
{
    int result = 0;
    for (int v = 0 ; v < _n ; ++v)
        result = (0 == v) ? degree(v) : std::min(result, degree(v));
    return result;
}

auto Graph::max_degree() const -> int
{
    int result = 0;
    for (int v = 0 ; v < _n ; ++v)
        result = std::max(result, degree(v));
    return result;
}

auto Graph::edges() const -> vector<pair<int, int>>
{
    vector<pair<int, int>> result;
    for (int u = 0 ; u < _n ; ++u)
        for (int v : _adj[u])
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

auto prc::build_graph(int n, const vector<pair<int, int>> & edges) -> Graph
{
    if (n < 0 || n > max_vertices)
        throw Error(ErrorKind::UnsupportedSize, "order " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));

    vector<VertexSet> adj(n);
    for (auto & [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorKind::IndexOutOfRange, "edge " + std::to_string(u) + "-" + std::to_string(v)
                    + " has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw Error(ErrorKind::SelfLoop, "loop at vertex " + std::to_string(u));
        adj[u].insert(v);
        adj[v].insert(u);
    }

    return Graph{n, std::move(adj)};
}

auto prc::graph_from_edge_mask(int n, std::uint64_t mask) -> Graph
{
    vector<pair<int, int>> edges;
    int bit = 0;
    for (int v = 1 ; v < n ; ++v)
        for (int u = 0 ; u < v ; ++u, ++bit)
            if (bit < 64 && ((mask >> bit) & 1))
                edges.emplace_back(u, v);
    return build_graph(n, edges);
}

auto prc::parse_graph6(string_view line) -> Graph
{
    line = trim(line);
    if (line.starts_with(graph6_header))
        line.remove_prefix(graph6_header.size());

    if (line.empty())
        throw Error(ErrorKind::MalformedRecord, "empty graph6 record");

    std::size_t pos = 0;
    long long n = 0;
    if (line[0] != '~') {
        n = graph6_value(line[0]);
        pos = 1;
    }
    else if (line.size() >= 2 && line[1] != '~') {
        if (line.size() < 4)
            throw Error(ErrorKind::MalformedRecord, "truncated order field");
        for (std::size_t i = 1 ; i < 4 ; ++i)
            n = (n << 6) | graph6_value(line[i]);
        pos = 4;
    }
    else {
        if (line.size() < 8)
            throw Error(ErrorKind::MalformedRecord, "truncated order field");
        for (std::size_t i = 2 ; i < 8 ; ++i)
            n = (n << 6) | graph6_value(line[i]);
        pos = 8;
    }

    if (n > max_vertices)
        throw Error(ErrorKind::UnsupportedSize, "graph6 order " + std::to_string(n) + " exceeds "
                + std::to_string(max_vertices));

    long long pair_count = n * (n - 1) / 2;
    std::size_t expected = pos + static_cast<std::size_t>((pair_count + 5) / 6);
    if (line.size() != expected)
        throw Error(ErrorKind::MalformedRecord, "graph6 record for order " + std::to_string(n) + " needs "
                + std::to_string(expected) + " bytes, got " + std::to_string(line.size()));

    vector<pair<int, int>> edges;
    long long bit = 0;
    for (int v = 1 ; v < n ; ++v)
        for (int u = 0 ; u < v ; ++u, ++bit) {
            int byte = graph6_value(line[pos + bit / 6]);
            if ((byte >> (5 - bit % 6)) & 1)
                edges.emplace_back(u, v);
        }

    for ( ; bit % 6 != 0 ; ++bit)
        if ((graph6_value(line[pos + bit / 6]) >> (5 - bit % 6)) & 1)
            throw Error(ErrorKind::MalformedRecord, "non-zero padding bits");

    return build_graph(static_cast<int>(n), edges);
}

auto prc::encode_graph6(const Graph & g) -> string
{
    int n = g.order();
    if (n > 62)
        throw Error(ErrorKind::UnsupportedSize, "graph6 encoding supports at most 62 vertices, got " + std::to_string(n));

    string result;
    result.push_back(static_cast<char>(63 + n));

    int bit = 0, acc = 0;
    for (int v = 1 ; v < n ; ++v)
        for (int u = 0 ; u < v ; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bit == 6) {
                result.push_back(static_cast<char>(63 + acc));
                bit = acc = 0;
            }
        }
    if (bit != 0)
        result.push_back(static_cast<char>(63 + (acc << (6 - bit))));

    return result;
}

auto prc::parse_edge_list(std::istream & in) -> Graph
{
    string line;
    auto next_line = [&] () -> bool {
        while (std::getline(in, line))
            if (! trim(line).empty())
                return true;
        return false;
    };

    if (! next_line())
        throw Error(ErrorKind::MalformedRecord, "missing 'n m' header");

    long long n = -1, m = -1;
    {
        std::istringstream header{line};
        string extra;
        if (! (header >> n >> m) || (header >> extra) || n < 0 || m < 0)
            throw Error(ErrorKind::MalformedRecord, "bad header line '" + line + "'");
    }
    if (n > max_vertices)
        throw Error(ErrorKind::UnsupportedSize, "order " + std::to_string(n) + " exceeds " + std::to_string(max_vertices));

    vector<pair<int, int>> edges;
    for (long long i = 0 ; i < m ; ++i) {
        if (! next_line())
            throw Error(ErrorKind::MalformedRecord, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        std::istringstream row{line};
        long long u, v;
        string extra;
        if (! (row >> u >> v) || (row >> extra))
            throw Error(ErrorKind::MalformedRecord, "bad edge line '" + line + "'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorKind::IndexOutOfRange, "edge " + std::to_string(u) + "-" + std::to_string(v)
                    + " has an endpoint outside 0.." + std::to_string(n - 1));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }

    return build_graph(static_cast<int>(n), edges);
}

auto prc::write_edge_list(std::ostream & out, const Graph & g) -> void
{
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto & [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

auto prc::component_of(const Graph & g, int v) -> VertexSet
{
    VertexSet seen = VertexSet::singleton(v), frontier = seen;
    while (! frontier.empty()) {
        VertexSet next;
        for (int u : frontier)
            next |= g.neighbours(u);
        frontier = next - seen;
        seen |= next;
    }
    return seen;
}

auto prc::is_connected(const Graph & g) -> bool
{
    return g.order() == 0 || component_of(g, 0) == g.vertices();
}

auto prc::girth(const Graph & g) -> optional<int>
{
    int n = g.order();
    optional<int> best;
    vector<int> dist(n), parent(n), queue(n);

    for (int root = 0 ; root < n ; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = -1;
        int head = 0, tail = 0;
        queue[tail++] = root;
        while (head < tail) {
            int u = queue[head++];
            if (best && 2 * dist[u] >= *best)
                break;
            for (int w : g.neighbours(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue[tail++] = w;
                }
                else if (w != parent[u]) {
                    int length = dist[u] + dist[w] + 1;
                    if (! best || length < *best)
                        best = length;
                }
            }
        }
    }

    return best;
}

auto prc::is_triangle_free(const Graph & g) -> bool
{
    for (int u = 0 ; u < g.order() ; ++u)
        for (int v : g.neighbours(u))
            if (u < v && g.neighbours(u).intersects(g.neighbours(v)))
                return false;
    return true;
}

auto prc::structure_report(const Graph & g) -> StructureReport
{
    StructureReport report;
    report.min_degree = g.min_degree();
    report.max_degree = g.max_degree();
    report.connected = is_connected(g);
    report.girth = girth(g);
    report.triangle_free = ! report.girth || *report.girth > 3;

    for (int v = 0 ; v < g.order() ; ++v)
        if (g.degree(v) == 1) {
            report.leaves.insert(v);
            report.support_vertices |= g.neighbours(v);
        }

    return report;
}
