#include <algorithm>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "leafpaths/error.hpp"
#include "leafpaths/oracle.hpp"

namespace leafpaths::oracle {

LengthSet brute_lp(const Tree& tree) {
    const int n = tree.vertex_count();
    if (n < 2)
        throw Error(ErrorKind::TooFewVertices, "leaf path lengths need at least 2 vertices");
    std::vector<int> leaves = tree.leaves();
    LengthSet out(n - 1);
    out.insert(0);
    for (int u : leaves) {
        std::vector<int> dist = bfs_distances(tree, u);
        for (int v : leaves)
            if (v != u)
                out.insert(dist[static_cast<std::size_t>(v)]);
    }
    return out;
}

int brute_min_radius(const DegreeSequence& s, int labeled_cap) {
    if (s.size() > labeled_cap)
        throw Error(ErrorKind::CapExceeded, "sequence length " + std::to_string(s.size()) +
                                                " exceeds cap " + std::to_string(labeled_cap));
    EnumerationScope scope;
    scope.mode = EnumerationScope::Mode::TreesWithDegreeSequence;
    scope.seq = s;
    scope.caps.labeled = std::max(scope.caps.labeled, labeled_cap);
    int best = std::numeric_limits<int>::max();
    enumerate_trees(scope, [&](const Tree& t) {
        best = std::min(best, metrics(t).radius);
        return true;
    });
    return best;
}

namespace {

constexpr int kNoHeight = std::numeric_limits<int>::max();

// Multiset of remaining entries as parallel (value, count) columns.
struct LevelSearch {
    std::vector<int> values;  // distinct entry values, descending
    std::map<std::pair<std::vector<int>, int>, int> memo;

    // Fewest further levels that place every remaining entry, given
    // `slots` positions available on the next level.
    int solve(std::vector<int>& counts, int slots) {
        int remaining = 0;
        for (int c : counts)
            remaining += c;
        if (slots == 0)
            return remaining == 0 ? 0 : kNoHeight;
        if (remaining < slots)
            return kNoHeight;
        auto key = std::make_pair(counts, slots);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
        int best = kNoHeight;
        std::vector<int> take(counts.size(), 0);
        pick_level(counts, take, 0, slots, 0, best);
        memo.emplace(std::move(key), best);
        return best;
    }

    // Chooses how many entries of each value sit on the next level.
    void pick_level(std::vector<int>& counts, std::vector<int>& take, std::size_t idx,
                    int slots_left, int child_slots, int& best) {
        if (slots_left == 0) {
            for (std::size_t i = 0; i < counts.size(); ++i)
                counts[i] -= take[i];
            int below = solve(counts, child_slots);
            for (std::size_t i = 0; i < counts.size(); ++i)
                counts[i] += take[i];
            if (below != kNoHeight)
                best = std::min(best, 1 + below);
            return;
        }
        if (idx == counts.size())
            return;
        int most = std::min(counts[idx], slots_left);
        for (int c = most; c >= 0; --c) {
            take[idx] = c;
            pick_level(counts, take, idx + 1, slots_left - c,
                       child_slots + c * values[idx], best);
        }
        take[idx] = 0;
    }
};

LevelSearch make_search(const OutDegreeSequence& s_plus, std::vector<int>& counts) {
    LevelSearch search;
    for (int d : s_plus.entries()) {
        if (search.values.empty() || search.values.back() != d) {
            search.values.push_back(d);
            counts.push_back(0);
        }
        ++counts.back();
    }
    return search;
}

} // namespace

int brute_min_height(const OutDegreeSequence& s_plus) {
    std::vector<int> counts;
    LevelSearch search = make_search(s_plus, counts);
    // Root takes one entry, its value opens the slots of level 1.
    int best = kNoHeight;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        --counts[i];
        int below = search.solve(counts, search.values[i]);
        ++counts[i];
        if (below != kNoHeight)
            best = std::min(best, below);
    }
    return best;
}

int brute_min_height_k(const OutDegreeSequence& s_plus, int k, int entry_cap) {
    if (s_plus.size() > entry_cap)
        throw Error(ErrorKind::CapExceeded, "sequence length " + std::to_string(s_plus.size()) +
                                                " exceeds cap " + std::to_string(entry_cap));
    if (k < 1 || k > s_plus.leaf_count())
        throw Error(ErrorKind::KOutOfRange,
                    "k = " + std::to_string(k) + " outside [1, " +
                        std::to_string(s_plus.leaf_count()) + "]");
    std::vector<int> counts;
    LevelSearch search = make_search(s_plus, counts);
    const std::size_t m = counts.size();
    std::vector<int> chosen(m, 0);
    int best = kNoHeight;

    // Every sub-multiset that is itself a valid out-degree sequence with
    // at least k zeros.
    auto scan = [&](auto&& self, std::size_t idx) -> void {
        if (idx == m) {
            long long total = 0, sum = 0, zeros = 0;
            std::vector<int> entries;
            for (std::size_t i = 0; i < m; ++i) {
                total += chosen[i];
                sum += static_cast<long long>(chosen[i]) * search.values[i];
                if (search.values[i] == 0)
                    zeros += chosen[i];
                for (int c = 0; c < chosen[i]; ++c)
                    entries.push_back(search.values[i]);
            }
            if (total < 1 || zeros < k || sum != total - 1)
                return;
            best = std::min(best, brute_min_height(OutDegreeSequence::validate(entries)));
            return;
        }
        for (int c = 0; c <= counts[idx]; ++c) {
            chosen[idx] = c;
            self(self, idx + 1);
        }
        chosen[idx] = 0;
    };
    scan(scan, 0);
    if (best == kNoHeight)
        throw Error(ErrorKind::KOutOfRange, "no subsequence with " + std::to_string(k) + " leaves");
    return best;
}

} // namespace leafpaths::oracle
