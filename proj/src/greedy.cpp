#include "leafpaths/greedy.hpp"

#include <deque>
#include <numeric>
#include <string>

namespace leafpaths {

namespace {

// Shared layered builder. Vertex i is placed i-th and will receive
// slots[i] children; parents are served in BFS order, each filled
// completely before the next. For valid degree / out-degree sequences the
// total slot count is exactly n-1, so construction consumes every vertex.
LayeredWitness build_layered(const std::vector<int>& slots) {
    const int n = static_cast<int>(slots.size());
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    std::deque<std::pair<int, int>> open; // (vertex, remaining slots)
    if (slots[0] > 0) open.emplace_back(0, slots[0]);
    int next = 1;
    while (next < n) {
        auto& [u, cap] = open.front();
        int v = next++;
        edges.emplace_back(u, v);
        if (slots[v] > 0) open.emplace_back(v, slots[v]);
        if (--cap == 0) open.pop_front();
    }

    LayeredWitness w{root_at(Tree::from_edges(n, edges), 0), {}, 0};
    w.value = w.rooted.height();
    w.layers.assign(w.value + 1, {});
    for (int v = 0; v < n; ++v) w.layers[w.rooted.depth[v]].push_back(v);
    return w;
}

} // namespace

LayeredWitness min_radius(const DegreeSequence& s) {
    std::vector<int> slots(s.entries().begin(), s.entries().end());
    for (std::size_t i = 1; i < slots.size(); ++i) --slots[i]; // center keeps full degree
    return build_layered(slots);
}

LayeredWitness min_height(const OutDegreeSequence& s_plus) {
    return build_layered(s_plus.entries());
}

ConstrainedHeight min_height_k(const OutDegreeSequence& s_plus, int k) {
    const int ell = s_plus.leaf_count();
    if (k < 1 || k > ell)
        throw Error(ErrorKind::KOutOfRange,
                    "k=" + std::to_string(k) + " outside [1," + std::to_string(ell) + "]");
    if (k == 1) {
        // A single root is a height-0 tree with one leaf; the initial-
        // segment rule below would overshoot to height 1.
        OutDegreeSequence reduced = OutDegreeSequence::validate({0});
        LayeredWitness w = min_height(reduced);
        return ConstrainedHeight{0, 0, std::move(reduced), std::move(w)};
    }
    const auto& d = s_plus.entries();
    long long prefix = 0;
    int p = 0;
    long long zeros = 0;
    for (int i = 0; i < s_plus.size(); ++i) {
        prefix += d[i];
        if (prefix - i >= k) { // d1+..+d_{i+1} - ((i+1)-1) >= k
            p = i + 1;
            zeros = prefix - i;
            break;
        }
    }
    // Reachable: at p = (number of non-zero entries) the slack equals ell >= k.
    std::vector<int> reduced_entries(d.begin(), d.begin() + p);
    reduced_entries.insert(reduced_entries.end(), static_cast<std::size_t>(zeros), 0);
    OutDegreeSequence reduced = OutDegreeSequence::validate(std::move(reduced_entries));
    LayeredWitness w = min_height(reduced);
    return ConstrainedHeight{w.value, p, std::move(reduced), std::move(w)};
}

OutDegreeSequence rooted_form(const DegreeSequence& s) {
    std::vector<int> out(s.entries());
    for (std::size_t i = 1; i < out.size(); ++i) --out[i];
    return OutDegreeSequence::validate(std::move(out));
}

bool check_height_radius_identity(const DegreeSequence& s) {
    return min_height(rooted_form(s)).value == min_radius(s).value;
}

} // namespace leafpaths
