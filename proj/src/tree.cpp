#include "leafpaths/tree.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace leafpaths {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::TooFewVertices: return "too-few-vertices";
    case ErrorKind::BadDegreeEntry: return "bad-degree-entry";
    case ErrorKind::DegreeSumMismatch: return "degree-sum-mismatch";
    case ErrorKind::VertexOutOfRange: return "vertex-out-of-range";
    case ErrorKind::MalformedInput: return "malformed-input";
    case ErrorKind::EdgeCountMismatch: return "edge-count-mismatch";
    case ErrorKind::SelfLoop: return "self-loop";
    case ErrorKind::ParallelEdge: return "parallel-edge";
    case ErrorKind::CycleDetected: return "cycle-detected";
    case ErrorKind::Disconnected: return "disconnected";
    case ErrorKind::KOutOfRange: return "k-out-of-range";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::NonBinaryTree: return "non-binary-tree";
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::NoTreeInScope: return "no-tree-in-scope";
    }
    return "unknown";
}

namespace {

// Union-find on 0..n-1, path halving.
struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) { p[x] = p[p[x]]; x = p[x]; }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a); b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

} // namespace

Tree Tree::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1)
        throw Error(ErrorKind::TooFewVertices, "tree needs at least one vertex");
    if (static_cast<int>(edges.size()) != n - 1)
        throw Error(ErrorKind::EdgeCountMismatch,
                    "expected " + std::to_string(n - 1) + " edges, got " +
                        std::to_string(edges.size()));
    std::vector<std::vector<int>> adj(n);
    Dsu dsu(n);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorKind::VertexOutOfRange,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
        std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
                            static_cast<std::uint32_t>(std::max(u, v));
        if (!seen.insert(key).second)
            throw Error(ErrorKind::ParallelEdge,
                        "parallel edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (!dsu.unite(u, v))
            throw Error(ErrorKind::CycleDetected,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") closes a cycle");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (int v = 0; v < n; ++v)
        std::sort(adj[v].begin(), adj[v].end());
    // n-1 edges without a cycle are always connected; kept as a guard.
    for (int v = 1; v < n; ++v)
        if (dsu.find(v) != dsu.find(0))
            throw Error(ErrorKind::Disconnected, "input does not connect all vertices");
    return Tree(n, std::move(adj));
}

std::vector<int> Tree::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (is_leaf(v)) out.push_back(v);
    return out;
}

std::vector<std::pair<int, int>> Tree::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(n_ > 0 ? n_ - 1 : 0);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

DegreeSequence DegreeSequence::validate(std::vector<int> entries) {
    const int n = static_cast<int>(entries.size());
    if (n < 2)
        throw Error(ErrorKind::TooFewVertices,
                    "degree sequence needs at least 2 entries, got " + std::to_string(n));
    long long sum = 0;
    for (int d : entries) {
        if (d < 1)
            throw Error(ErrorKind::BadDegreeEntry,
                        "degree entry " + std::to_string(d) + " is not positive");
        sum += d;
    }
    if (sum != 2LL * (n - 1))
        throw Error(ErrorKind::DegreeSumMismatch,
                    "degree sum " + std::to_string(sum) + " != 2(n-1) = " +
                        std::to_string(2LL * (n - 1)));
    std::sort(entries.begin(), entries.end(), std::greater<int>());
    return DegreeSequence(std::move(entries));
}

int DegreeSequence::leaf_count() const {
    return static_cast<int>(std::count(entries_.begin(), entries_.end(), 1));
}

bool DegreeSequence::has_entry_two() const {
    return std::find(entries_.begin(), entries_.end(), 2) != entries_.end();
}

DegreeSequence DegreeSequence::without_twos() const {
    std::vector<int> kept;
    kept.reserve(entries_.size());
    for (int d : entries_)
        if (d != 2) kept.push_back(d);
    return DegreeSequence::validate(std::move(kept));
}

OutDegreeSequence OutDegreeSequence::validate(std::vector<int> entries) {
    const int n = static_cast<int>(entries.size());
    if (n < 1)
        throw Error(ErrorKind::TooFewVertices, "out-degree sequence is empty");
    long long sum = 0;
    for (int d : entries) {
        if (d < 0)
            throw Error(ErrorKind::BadDegreeEntry,
                        "out-degree entry " + std::to_string(d) + " is negative");
        sum += d;
    }
    if (sum != static_cast<long long>(n) - 1)
        throw Error(ErrorKind::DegreeSumMismatch,
                    "out-degree sum " + std::to_string(sum) + " != n-1 = " +
                        std::to_string(n - 1));
    std::sort(entries.begin(), entries.end(), std::greater<int>());
    return OutDegreeSequence(std::move(entries));
}

int OutDegreeSequence::leaf_count() const {
    return static_cast<int>(std::count(entries_.begin(), entries_.end(), 0));
}

DegreeSequence validate_degree_sequence(std::vector<int> entries) {
    return DegreeSequence::validate(std::move(entries));
}

OutDegreeSequence validate_out_degree_sequence(std::vector<int> entries) {
    return OutDegreeSequence::validate(std::move(entries));
}

DegreeSequence degree_sequence_of(const Tree& tree) {
    std::vector<int> degs(tree.vertex_count());
    for (int v = 0; v < tree.vertex_count(); ++v) degs[v] = tree.degree(v);
    return DegreeSequence::validate(std::move(degs));
}

RootedTree root_at(const Tree& tree, int r) {
    const int n = tree.vertex_count();
    if (r < 0 || r >= n)
        throw Error(ErrorKind::VertexOutOfRange, "root " + std::to_string(r) +
                                                     " out of range for n=" + std::to_string(n));
    RootedTree rt{tree, r, std::vector<int>(n, -1), std::vector<std::vector<int>>(n),
                  std::vector<int>(n, -1), {}};
    rt.order.reserve(n);
    rt.depth[r] = 0;
    std::queue<int> q;
    q.push(r);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        rt.order.push_back(u);
        for (int v : tree.neighbors(u)) {
            if (v == rt.parent[u]) continue;
            rt.parent[v] = u;
            rt.depth[v] = rt.depth[u] + 1;
            rt.children[u].push_back(v); // ascending: neighbors are sorted
            q.push(v);
        }
    }
    return rt;
}

int RootedTree::height() const {
    return *std::max_element(depth.begin(), depth.end());
}

std::vector<int> RootedTree::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < tree.vertex_count(); ++v)
        if (children[v].empty()) out.push_back(v);
    return out;
}

OutDegreeSequence out_degree_sequence_of(const RootedTree& rt) {
    std::vector<int> outdeg(rt.tree.vertex_count());
    for (int v = 0; v < rt.tree.vertex_count(); ++v)
        outdeg[v] = static_cast<int>(rt.children[v].size());
    return OutDegreeSequence::validate(std::move(outdeg));
}

std::vector<int> bfs_distances(const Tree& tree, int src) {
    std::vector<int> dist(tree.vertex_count(), -1);
    dist[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : tree.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

Metrics metrics(const Tree& tree) {
    const int n = tree.vertex_count();
    if (n == 1) return Metrics{0, 0, {0}};
    // Double sweep: farthest from 0 is one diameter endpoint a, farthest
    // from a is the other endpoint b. For any x, ecc(x) = max(d_a(x), d_b(x)).
    auto d0 = bfs_distances(tree, 0);
    int a = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto da = bfs_distances(tree, a);
    int b = static_cast<int>(std::max_element(da.begin(), da.end()) - da.begin());
    auto db = bfs_distances(tree, b);

    Metrics m;
    m.diameter = da[b];
    m.radius = n; // upper bound to start
    for (int v = 0; v < n; ++v)
        m.radius = std::min(m.radius, std::max(da[v], db[v]));
    for (int v = 0; v < n; ++v)
        if (std::max(da[v], db[v]) == m.radius) m.centers.push_back(v);
    return m;
}

int lca(const RootedTree& rt, int u, int v) {
    const int n = rt.tree.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw Error(ErrorKind::VertexOutOfRange, "lca vertex out of range");
    while (rt.depth[u] > rt.depth[v]) u = rt.parent[u];
    while (rt.depth[v] > rt.depth[u]) v = rt.parent[v];
    while (u != v) {
        u = rt.parent[u];
        v = rt.parent[v];
    }
    return u;
}

int lca_of_set(const RootedTree& rt, const std::vector<int>& vertices) {
    if (vertices.empty())
        throw Error(ErrorKind::InvalidParameter, "lca of empty vertex set");
    int acc = vertices.front();
    for (std::size_t i = 1; i < vertices.size(); ++i) acc = lca(rt, acc, vertices[i]);
    return acc;
}

Tree parse_tree(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_line = [&](bool required) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            return true;
        }
        if (required)
            throw Error(ErrorKind::EdgeCountMismatch,
                        "unexpected end of input at line " + std::to_string(lineno + 1));
        return false;
    };

    if (!next_line(false))
        throw Error(ErrorKind::MalformedInput, "empty input");
    int n = 0;
    {
        std::istringstream ls(line);
        std::string extra;
        if (!(ls >> n) || (ls >> extra))
            throw Error(ErrorKind::MalformedInput,
                        "line 1: expected vertex count, got \"" + line + "\"");
        if (n < 1)
            throw Error(ErrorKind::MalformedInput,
                        "line 1: vertex count must be at least 1");
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int i = 0; i < n - 1; ++i) {
        next_line(true);
        std::istringstream ls(line);
        int u, v;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            throw Error(ErrorKind::MalformedInput,
                        "line " + std::to_string(lineno) + ": expected \"u v\", got \"" +
                            line + "\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorKind::VertexOutOfRange,
                        "line " + std::to_string(lineno) + ": vertex id out of range");
        edges.emplace_back(u, v);
    }
    // Anything but trailing whitespace means too many edge lines.
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw Error(ErrorKind::EdgeCountMismatch,
                        "line " + std::to_string(lineno) + ": extra edge beyond n-1");
    }
    return Tree::from_edges(n, edges);
}

Tree parse_tree(const std::string& text) {
    std::istringstream in(text);
    return parse_tree(in);
}

std::string serialize_tree(const Tree& tree) {
    std::ostringstream out;
    out << tree.vertex_count() << '\n';
    for (const auto& [u, v] : tree.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace leafpaths
