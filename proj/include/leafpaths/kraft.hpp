#ifndef LEAFPATHS_KRAFT_HPP
#define LEAFPATHS_KRAFT_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "leafpaths/tree.hpp"

namespace leafpaths {

/*
 * Exact non-negative value numerator / 2^exponent. Canonical form keeps
 * the numerator odd unless the value is zero or the exponent already is;
 * addition and comparison never round.
 */
class DyadicRational {
  public:
    using Int = boost::multiprecision::cpp_int;

    DyadicRational() = default;
    DyadicRational(Int numerator, int exponent);

    const Int& numerator() const { return num_; }
    int exponent() const { return exp_; }

    DyadicRational operator+(const DyadicRational& other) const;
    bool operator==(const DyadicRational& other) const = default;
    std::strong_ordering operator<=>(const DyadicRational& other) const;

    std::string to_string() const;  // "a/2^b", or "a" when b = 0

  private:
    Int num_ = 0;
    int exp_ = 0;
};

// Lengths of all ell-choose-2 nontrivial leaf-to-leaf paths, with
// multiplicity, computed by pairing the leaf-depth multisets of the two
// child subtrees at each internal vertex.
std::map<int, std::int64_t> leaf_pair_length_multiset(const RootedTree& rt);

struct KraftSum {
    DyadicRational sum;    // sum of 2^(-w) over the multiset
    DyadicRational bound;  // (ell - 1) / 4
    bool equality = false;
};

KraftSum kraft_sum(const RootedTree& rt);

bool is_perfect(const RootedTree& rt);               // all leaves at equal depth
bool every_internal_has_two_children(const RootedTree& rt);

struct KraftRow {
    int leaves = 0;
    std::string shape_id;  // canonical encoding
    KraftSum result;
    bool perfect = false;
    bool every_internal_two = false;
};

struct KraftSurvey {
    int leaf_cap = 0;
    std::vector<KraftRow> rows;                // ordered by (leaves, shape_id)
    std::vector<std::uint64_t> shape_counts;   // index ell, entry 0 unused
    std::uint64_t equality_count = 0;
    std::uint64_t violation_count = 0;         // rows with sum > bound
    bool perfect_always_equality = true;
};

// All rooted shapes with every internal vertex of exactly 2 children,
// grouped by leaf count up to leaf_cap (at most 10).
KraftSurvey kraft_survey(int leaf_cap);

// Canonical encodings of those shapes for one leaf count.
std::vector<std::string> binary_shape_encodings(int leaves);

} // namespace leafpaths

#endif
