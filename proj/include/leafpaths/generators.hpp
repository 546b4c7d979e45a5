#ifndef LEAFPATHS_GENERATORS_HPP
#define LEAFPATHS_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "leafpaths/tree.hpp"

namespace leafpaths {

/*
 * Seeded generator used everywhere randomness is needed. mt19937_64 has a
 * standard-pinned output sequence and below() draws by bitmask rejection,
 * so corpora reproduce bit-exactly across platforms for a given seed.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform draw from [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n);

private:
    std::mt19937_64 engine_;
};

// Tree with degrees 1 and delta only, every leaf at distance h from the
// root; delta*(delta-1)^(h-1) leaves.
Tree make_t_delta_h(int delta, int h);

// Every internal vertex has exactly two children, all leaves at `depth`.
RootedTree make_perfect_binary(int depth);

// Uniform labeled tree with degree sequence s (vertex i gets the i-th
// largest degree), via a shuffled degree-constrained word.
Tree random_tree_with_degrees(const DegreeSequence& s, std::uint64_t seed);

// Random rooted tree in which every internal vertex has exactly two
// children, grown by repeated uniform leaf expansion.
RootedTree random_binary_rooted(int leaves, std::uint64_t seed);

/*
 * CLI-facing description of a generated instance.
 */
struct FamilySpec {
    enum class Family { CompleteDary, PerfectBinary, BinaryRandom, DegreeSeqRandom };
    Family family = Family::CompleteDary;
    int delta = 3;
    int h = 1;
    int depth = 0;
    int leaves = 1;
    std::optional<DegreeSequence> seq;
    std::uint64_t seed = 0;

    Tree build() const;
    std::string describe() const;
};

} // namespace leafpaths

#endif
