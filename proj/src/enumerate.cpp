#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "leafpaths/error.hpp"
#include "leafpaths/oracle.hpp"
#include "leafpaths/prufer.hpp"

namespace leafpaths::oracle {

namespace {

// ---- labeled enumeration ------------------------------------------------

// Walks every word in [0,n)^(n-2) with word[0] restricted to [lo, hi).
bool enumerate_labeled_range(int n, int lo, int hi, const TreeVisitor& visit) {
    if (n == 1) {
        return lo > 0 || visit(Tree::from_edges(1, {}));
    }
    if (n == 2) {
        return lo > 0 || visit(Tree::from_edges(2, {{0, 1}}));
    }
    std::vector<int> word(static_cast<std::size_t>(n - 2), 0);
    word[0] = lo;
    while (true) {
        if (!visit(prufer_decode(n, word)))
            return false;
        int i = static_cast<int>(word.size()) - 1;
        while (i > 0 && word[i] == n - 1)
            word[i--] = 0;
        if (i == 0) {
            if (word[0] + 1 >= hi)
                return true;
            ++word[0];
        } else {
            ++word[i];
        }
    }
}

bool enumerate_with_degrees(const DegreeSequence& s, bool dedupe, const TreeVisitor& visit) {
    const auto& d = s.entries();
    const int n = s.size();
    if (n == 2)
        return visit(Tree::from_edges(2, {{0, 1}}));
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n - 2));
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < d[static_cast<std::size_t>(i)] - 1; ++r)
            word.push_back(i);
    std::sort(word.begin(), word.end());
    std::vector<std::string> seen;
    do {
        Tree t = prufer_decode(n, word);
        if (dedupe) {
            std::string key = canonical_form(t);
            auto it = std::lower_bound(seen.begin(), seen.end(), key);
            if (it != seen.end() && *it == key)
                continue;
            seen.insert(it, key);
        }
        if (!visit(t))
            return false;
    } while (std::next_permutation(word.begin(), word.end()));
    return true;
}

// ---- unlabeled shape generation -----------------------------------------

// Rooted shapes on k vertices as canonical encodings: a vertex encodes as
// "(" + its children's encodings in ascending string order + ")".
class ShapeTable {
  public:
    const std::vector<std::string>& rooted(int k) {
        while (static_cast<int>(shapes_.size()) <= k)
            build_next();
        return shapes_[static_cast<std::size_t>(k)];
    }

    // Emits every multiset of rooted shapes with total size `remaining`,
    // each shape of size <= size_cap, as a sorted list of encodings.
    template <typename Emit>
    void multisets(int remaining, int size_cap, const Emit& emit) {
        std::vector<const std::string*> picked;
        int top = std::min(size_cap, remaining);
        if (top >= 1)
            rooted(top);  // ensure table depth before recursing
        choose(remaining, top, top >= 1 ? static_cast<int>(rooted(top).size()) - 1 : -1,
               picked, emit);
    }

  private:
    template <typename Emit>
    void choose(int remaining, int s_max, int i_max, std::vector<const std::string*>& picked,
                const Emit& emit) {
        if (remaining == 0) {
            emit(picked);
            return;
        }
        for (int s = std::min(s_max, remaining); s >= 1; --s) {
            const auto& list = rooted(s);
            int start = (s == s_max) ? i_max : static_cast<int>(list.size()) - 1;
            for (int i = start; i >= 0; --i) {
                picked.push_back(&list[static_cast<std::size_t>(i)]);
                choose(remaining - s, s, i, picked, emit);
                picked.pop_back();
            }
        }
    }

    void build_next() {
        int k = static_cast<int>(shapes_.size());
        std::vector<std::string> out;
        if (k == 0) {
            shapes_.push_back(std::move(out));  // no shape on zero vertices
            return;
        }
        multisets(k - 1, k - 1, [&](const std::vector<const std::string*>& picked) {
            std::vector<std::string> parts;
            parts.reserve(picked.size());
            for (const auto* p : picked)
                parts.push_back(*p);
            std::sort(parts.begin(), parts.end());
            std::string enc = "(";
            for (const auto& p : parts)
                enc += p;
            enc += ")";
            out.push_back(std::move(enc));
        });
        std::sort(out.begin(), out.end());
        shapes_.push_back(std::move(out));
    }

    std::vector<std::vector<std::string>> shapes_;
};

Tree join_rooted_pair(const std::string& enc_a, const std::string& enc_b) {
    Tree a = tree_from_encoding(enc_a);
    Tree b = tree_from_encoding(enc_b);
    int na = a.vertex_count();
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges())
        edges.emplace_back(u + na, v + na);
    edges.emplace_back(0, na);  // roots of both halves
    return Tree::from_edges(na + b.vertex_count(), edges);
}

// Every free shape on n vertices exactly once: trees with a unique
// centroid correspond to rooted shapes whose root subtrees all have size
// <= floor((n-1)/2); bicentroidal trees (n even) to unordered pairs of
// rooted shapes on n/2 vertices.
bool enumerate_free_shapes(int n, ShapeTable& table, const TreeVisitor& visit) {
    bool keep_going = true;
    auto emit = [&](const std::vector<const std::string*>& picked) {
        if (!keep_going)
            return;
        std::vector<std::pair<int, int>> edges;
        int next = 1;
        for (const auto* enc : picked) {
            std::vector<int> stack{0};
            for (char c : *enc) {
                if (c == '(') {
                    int v = next++;
                    edges.emplace_back(stack.back(), v);
                    stack.push_back(v);
                } else {
                    stack.pop_back();
                }
            }
        }
        keep_going = visit(Tree::from_edges(next, edges));
    };
    table.multisets(n - 1, (n - 1) / 2, emit);
    if (!keep_going)
        return false;
    if (n % 2 == 0) {
        const auto& halves = table.rooted(n / 2);
        for (std::size_t i = 0; i < halves.size(); ++i)
            for (std::size_t j = i; j < halves.size(); ++j)
                if (!visit(join_rooted_pair(halves[i], halves[j])))
                    return false;
    }
    return true;
}

bool matches_no_degree2_diameter(const Tree& t, int D) {
    for (int v = 0; v < t.vertex_count(); ++v)
        if (t.degree(v) == 2)
            return false;
    return metrics(t).diameter == D;
}

void check_caps(const EnumerationScope& scope) {
    switch (scope.mode) {
    case EnumerationScope::Mode::AllTreesN: {
        int cap = scope.dedupe ? scope.caps.deduped : scope.caps.labeled;
        if (scope.n > cap)
            throw Error(ErrorKind::CapExceeded,
                        "enumeration size " + std::to_string(scope.n) + " exceeds cap " +
                            std::to_string(cap));
        if (scope.n < 1)
            throw Error(ErrorKind::InvalidParameter, "enumeration needs n >= 1");
        break;
    }
    case EnumerationScope::Mode::TreesWithDegreeSequence: {
        if (!scope.seq)
            throw Error(ErrorKind::InvalidParameter, "degree sequence scope without a sequence");
        if (scope.seq->size() > scope.caps.labeled)
            throw Error(ErrorKind::CapExceeded,
                        "sequence length " + std::to_string(scope.seq->size()) +
                            " exceeds cap " + std::to_string(scope.caps.labeled));
        break;
    }
    case EnumerationScope::Mode::NoDegree2DiameterD: {
        int cap = scope.dedupe ? scope.caps.deduped : scope.caps.labeled;
        if (scope.n_cap > cap)
            throw Error(ErrorKind::CapExceeded,
                        "size cap " + std::to_string(scope.n_cap) + " exceeds cap " +
                            std::to_string(cap));
        if (scope.diameter_d < 1)
            throw Error(ErrorKind::InvalidParameter, "diameter must be at least 1");
        break;
    }
    }
}

} // namespace

bool enumerate_labeled_partition(int n, int lo, int hi, const TreeVisitor& visit) {
    return enumerate_labeled_range(n, lo, hi, visit);
}

void enumerate_trees(const EnumerationScope& scope, const TreeVisitor& visit) {
    check_caps(scope);
    switch (scope.mode) {
    case EnumerationScope::Mode::AllTreesN:
        if (scope.dedupe) {
            ShapeTable table;
            enumerate_free_shapes(scope.n, table, visit);
        } else {
            enumerate_labeled_range(scope.n, 0, scope.n == 1 ? 1 : scope.n, visit);
        }
        break;
    case EnumerationScope::Mode::TreesWithDegreeSequence:
        enumerate_with_degrees(*scope.seq, scope.dedupe, visit);
        break;
    case EnumerationScope::Mode::NoDegree2DiameterD: {
        ShapeTable table;
        bool keep_going = true;
        auto filtered = [&](const Tree& t) {
            if (matches_no_degree2_diameter(t, scope.diameter_d))
                keep_going = visit(t);
            return keep_going;
        };
        for (int n = std::max(2, scope.diameter_d + 1); n <= scope.n_cap && keep_going; ++n) {
            if (scope.dedupe)
                enumerate_free_shapes(n, table, filtered);
            else
                enumerate_labeled_range(n, 0, n == 1 ? 1 : n, filtered);
        }
        break;
    }
    }
}

std::uint64_t count_trees(const EnumerationScope& scope) {
    std::uint64_t count = 0;
    enumerate_trees(scope, [&](const Tree&) {
        ++count;
        return true;
    });
    return count;
}

Tree tree_from_encoding(const std::string& enc) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> stack;
    int next = 0;
    for (char c : enc) {
        if (c == '(') {
            int v = next++;
            if (!stack.empty())
                edges.emplace_back(stack.back(), v);
            stack.push_back(v);
        } else if (c == ')') {
            if (stack.empty())
                throw Error(ErrorKind::MalformedInput, "unbalanced encoding");
            stack.pop_back();
        } else {
            throw Error(ErrorKind::MalformedInput, "encoding may only contain parentheses");
        }
    }
    if (!stack.empty() || next == 0)
        throw Error(ErrorKind::MalformedInput, "unbalanced encoding");
    return Tree::from_edges(next, edges);
}

std::string canonical_form(const Tree& tree) {
    const int n = tree.vertex_count();
    if (n == 1)
        return "()";
    RootedTree rt = root_at(tree, 0);
    std::vector<int> size(static_cast<std::size_t>(n), 1);
    const auto& order = rt.order;
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (rt.parent[static_cast<std::size_t>(*it)] >= 0)
            size[static_cast<std::size_t>(rt.parent[static_cast<std::size_t>(*it)])] +=
                size[static_cast<std::size_t>(*it)];
    std::vector<int> comp_max(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        comp_max[static_cast<std::size_t>(v)] = n - size[static_cast<std::size_t>(v)];
        for (int c : rt.children[static_cast<std::size_t>(v)])
            comp_max[static_cast<std::size_t>(v)] =
                std::max(comp_max[static_cast<std::size_t>(v)], size[static_cast<std::size_t>(c)]);
    }
    int best = *std::min_element(comp_max.begin(), comp_max.end());
    std::vector<int> centroids;
    for (int v = 0; v < n; ++v)
        if (comp_max[static_cast<std::size_t>(v)] == best)
            centroids.push_back(v);

    // Encode the subtree at v away from `parent`.
    auto encode = [&](auto&& self, int v, int parent) -> std::string {
        std::vector<std::string> parts;
        for (int u : tree.neighbors(v))
            if (u != parent)
                parts.push_back(self(self, u, v));
        std::sort(parts.begin(), parts.end());
        std::string enc = "(";
        for (const auto& p : parts)
            enc += p;
        enc += ")";
        return enc;
    };

    if (centroids.size() == 1)
        return encode(encode, centroids[0], -1);
    // Bicentroidal: the smaller of the two whole-tree encodings.
    return std::min(encode(encode, centroids[0], -1), encode(encode, centroids[1], -1));
}

} // namespace leafpaths::oracle
