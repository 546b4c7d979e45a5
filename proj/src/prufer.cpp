#include "leafpaths/prufer.hpp"

#include <functional>
#include <queue>
#include <string>

namespace leafpaths {

Tree prufer_decode(int n, const std::vector<int>& word) {
    if (n < 1)
        throw Error(ErrorKind::TooFewVertices, "prufer_decode needs n >= 1");
    if (static_cast<int>(word.size()) != std::max(0, n - 2))
        throw Error(ErrorKind::InvalidParameter,
                    "word length " + std::to_string(word.size()) + " != n-2");
    if (n == 1) return Tree::from_edges(1, {});

    std::vector<int> deg(n, 1);
    for (int w : word) {
        if (w < 0 || w >= n)
            throw Error(ErrorKind::VertexOutOfRange, "word entry out of range");
        ++deg[w];
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.push(v);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int w : word) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, w);
        if (--deg[w] == 1) leaves.push(w);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.emplace_back(a, b);
    return Tree::from_edges(n, edges);
}

std::vector<int> prufer_encode(const Tree& tree) {
    const int n = tree.vertex_count();
    if (n <= 2) return {};
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = tree.degree(v);
    std::vector<bool> removed(n, false);
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.push(v);

    std::vector<int> word;
    word.reserve(n - 2);
    for (int step = 0; step < n - 2; ++step) {
        int leaf = leaves.top();
        leaves.pop();
        removed[leaf] = true;
        int u = -1;
        for (int w : tree.neighbors(leaf))
            if (!removed[w]) { u = w; break; }
        word.push_back(u);
        if (--deg[u] == 1) leaves.push(u);
    }
    return word;
}

} // namespace leafpaths
