#ifndef LEAFPATHS_ORACLE_HPP
#define LEAFPATHS_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "leafpaths/length_set.hpp"
#include "leafpaths/tree.hpp"

namespace leafpaths::oracle {

/*
 * Enumeration limits. Labeled enumeration walks all n^(n-2) trees;
 * deduped enumeration generates each unlabeled shape exactly once via a
 * centroid-canonical construction, so it reaches further.
 */
struct EnumerationCaps {
    int labeled = 10;
    int deduped = 16;
};

struct EnumerationScope {
    enum class Mode { AllTreesN, TreesWithDegreeSequence, NoDegree2DiameterD };

    Mode mode = Mode::AllTreesN;
    int n = 0;                          // AllTreesN
    std::optional<DegreeSequence> seq;  // TreesWithDegreeSequence
    int diameter_d = 0;                 // NoDegree2DiameterD
    int n_cap = 0;                      //   "
    bool dedupe = false;
    EnumerationCaps caps;
};

// Visitor returns false to stop early.
using TreeVisitor = std::function<bool(const Tree&)>;

void enumerate_trees(const EnumerationScope& scope, const TreeVisitor& visit);
std::uint64_t count_trees(const EnumerationScope& scope);

// Labeled enumeration restricted to generator words whose first symbol
// lies in [first_lo, first_hi); the full range partitions into disjoint
// chunks. Returns false if the visitor stopped early.
bool enumerate_labeled_partition(int n, int first_lo, int first_hi, const TreeVisitor& visit);

// Isomorphism-invariant encoding: minimal rooted encoding at the
// centroid; for bicentroidal trees the sorted pair of half encodings.
std::string canonical_form(const Tree& tree);

// Inverse of a rooted encoding: vertex ids in preorder, root 0.
Tree tree_from_encoding(const std::string& enc);

// Reference lp semantics: {0} plus all distances between distinct leaves,
// by one BFS per leaf.
LengthSet brute_lp(const Tree& tree);

// Minimum radius over every labeled realization of s.
int brute_min_radius(const DegreeSequence& s, int labeled_cap = 9);

// Minimum height over every rooted realization of s_plus, by exhaustive
// search over level assignments (independent of the greedy layering).
int brute_min_height(const OutDegreeSequence& s_plus);

// Minimum of brute_min_height over all subsequences of s_plus that are
// valid out-degree sequences with at least k zero entries.
int brute_min_height_k(const OutDegreeSequence& s_plus, int k, int entry_cap = 12);

struct FdUpper {
    int value;    // an upper bound on f(D): the true infimum ranges over all sizes
    Tree witness; // a tree in scope attaining `value`
    int witness_n;
};

// Minimum lp over enumerated trees with no degree-2 vertex and diameter
// exactly D, sizes up to n_cap.
FdUpper f_of_D_upper(int D, int n_cap, const EnumerationCaps& caps = {});

/*
 * One row of the gap / bound report; everything the CSV schema and the
 * bound checks need.
 */
struct GapRecord {
    int n = 0;
    std::vector<int> degree_sequence;   // non-increasing
    int rad_s = 0;
    int rad_s_prime = 0;                // 2-entries removed
    int lp_value = 0;
    int diameter = 0;
    double theorem2_bound = 0.0;        // rad_s - log2(rad_s)
    bool satisfied = true;              // exact check; vacuous with a 2-entry
    bool has_degree_2 = false;
};

struct GapAggregates {
    std::uint64_t trees_scanned = 0;
    std::optional<int> max_gap_rad;        // max rad(s) - lp over no-degree-2 trees
    std::optional<int> max_gap_rad_prime;  // max rad(s') - lp over all trees
    std::uint64_t theorem2_violations = 0;
};

using GapRowVisitor = std::function<bool(const GapRecord&)>;

// Streams one record per enumerated tree. workers > 1 partitions labeled
// enumeration by first word symbol; row order is deterministic only with
// a single worker, aggregates are worker-count independent.
GapAggregates gap_scan(const EnumerationScope& scope, int workers, const GapRowVisitor& row);

struct GapReport {
    std::vector<GapRecord> records;
    GapAggregates aggregates;
};

GapReport conjecture_gap_report(const EnumerationScope& scope);

GapRecord evaluate_tree(const Tree& tree);

} // namespace leafpaths::oracle

#endif
