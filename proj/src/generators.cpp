#include "leafpaths/generators.hpp"

#include <bit>

#include "leafpaths/prufer.hpp"

namespace leafpaths {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0)
        throw Error(ErrorKind::InvalidParameter, "below(0)");
    if (n == 1) return 0;
    std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(n - 1);
    std::uint64_t draw;
    do {
        draw = engine_() & mask;
    } while (draw >= n);
    return draw;
}

Tree make_t_delta_h(int delta, int h) {
    if (delta < 3)
        throw Error(ErrorKind::InvalidParameter, "delta must be at least 3");
    if (h < 1)
        throw Error(ErrorKind::InvalidParameter, "h must be at least 1");
    std::vector<std::pair<int, int>> edges;
    std::vector<int> frontier{0};
    int next = 1;
    for (int depth = 0; depth < h; ++depth) {
        std::vector<int> next_frontier;
        const int fanout = depth == 0 ? delta : delta - 1;
        for (int u : frontier)
            for (int c = 0; c < fanout; ++c) {
                edges.emplace_back(u, next);
                next_frontier.push_back(next);
                ++next;
            }
        frontier = std::move(next_frontier);
    }
    return Tree::from_edges(next, edges);
}

RootedTree make_perfect_binary(int depth) {
    if (depth < 0)
        throw Error(ErrorKind::InvalidParameter, "depth must be non-negative");
    std::vector<std::pair<int, int>> edges;
    std::vector<int> frontier{0};
    int next = 1;
    for (int d = 0; d < depth; ++d) {
        std::vector<int> next_frontier;
        for (int u : frontier)
            for (int c = 0; c < 2; ++c) {
                edges.emplace_back(u, next);
                next_frontier.push_back(next);
                ++next;
            }
        frontier = std::move(next_frontier);
    }
    return root_at(Tree::from_edges(next, edges), 0);
}

Tree random_tree_with_degrees(const DegreeSequence& s, std::uint64_t seed) {
    const int n = s.size();
    std::vector<int> word;
    word.reserve(n - 2);
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < s.entries()[i] - 1; ++r) word.push_back(i);
    // Fisher-Yates; spelled out so the permutation is seed-reproducible
    // everywhere, unlike std::shuffle.
    Rng rng(seed);
    for (std::size_t i = word.size(); i > 1; --i)
        std::swap(word[i - 1], word[rng.below(i)]);
    return prufer_decode(n, word);
}

RootedTree random_binary_rooted(int leaves, std::uint64_t seed) {
    if (leaves < 1)
        throw Error(ErrorKind::InvalidParameter, "need at least one leaf");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<int> open{0}; // current leaves
    int next = 1;
    for (int step = 1; step < leaves; ++step) {
        std::size_t pick = static_cast<std::size_t>(rng.below(open.size()));
        int u = open[pick];
        edges.emplace_back(u, next);
        edges.emplace_back(u, next + 1);
        open[pick] = next;
        open.push_back(next + 1);
        next += 2;
    }
    return root_at(Tree::from_edges(next, edges), 0);
}

Tree FamilySpec::build() const {
    switch (family) {
    case Family::CompleteDary:
        return make_t_delta_h(delta, h);
    case Family::PerfectBinary:
        return make_perfect_binary(depth).tree;
    case Family::BinaryRandom:
        return random_binary_rooted(leaves, seed).tree;
    case Family::DegreeSeqRandom:
        if (!seq)
            throw Error(ErrorKind::InvalidParameter, "degree_seq_random needs a sequence");
        return random_tree_with_degrees(*seq, seed);
    }
    throw Error(ErrorKind::InvalidParameter, "unknown family");
}

std::string FamilySpec::describe() const {
    switch (family) {
    case Family::CompleteDary:
        return "t_delta_h delta=" + std::to_string(delta) + " h=" + std::to_string(h);
    case Family::PerfectBinary:
        return "perfect_binary depth=" + std::to_string(depth);
    case Family::BinaryRandom:
        return "binary_random leaves=" + std::to_string(leaves) +
               " seed=" + std::to_string(seed);
    case Family::DegreeSeqRandom: {
        std::string s = "degree_seq_random seq=";
        if (seq)
            for (std::size_t i = 0; i < seq->entries().size(); ++i)
                s += (i ? "," : "") + std::to_string(seq->entries()[i]);
        return s + " seed=" + std::to_string(seed);
    }
    }
    return "?";
}

} // namespace leafpaths
