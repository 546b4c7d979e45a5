#ifndef LEAFPATHS_PATHLENS_HPP
#define LEAFPATHS_PATHLENS_HPP

#include "leafpaths/length_set.hpp"
#include "leafpaths/tree.hpp"

namespace leafpaths {

// Exact set of leaf-to-leaf path lengths of the undirected tree, the
// trivial length-0 path included; max element equals the diameter.
// Bottom-up over a rooting at an internal vertex: each vertex carries the
// set of leaf depths in its subtree, children are merged small-into-large,
// and cross-subtree sums are recorded through shift-OR sumsets.
LengthSet lp_set(const Tree& tree);

// Number of distinct leaf-to-leaf path lengths, length 0 included.
int lp(const Tree& tree);

/*
 * A certified lower bound on lp: either the count of distinct leaf depths
 * under the chosen rooting, or h(s+,k)+1 for an equal-depth leaf class of
 * size k. `bound` is recomputable from the stored detail.
 */
struct LowerBoundCertificate {
    enum class Kind { DepthCount, EqualDepthClass };
    Kind kind = Kind::DepthCount;
    int rooting = 0;                  // root vertex id (maximum degree)
    std::vector<int> leaf_depths;     // distinct rooted-leaf depths, ascending
    int class_depth = -1;             // EqualDepthClass only
    int class_size = 0;               // k
    int height_k = 0;                 // h(s+, k)
    int bound = 0;
};

// Roots at a maximum-degree vertex, evaluates the depth-count bound and
// the equal-depth-class bound for every leaf depth class, and returns the
// largest. Always a true lower bound on lp(tree).
LowerBoundCertificate certified_lower_bound(const Tree& tree);

/*
 * Lower bound rad(s) - log2(rad(s)) for trees with no degree-2 vertex.
 * The double value is for display; satisfied_by decides the real-valued
 * inequality by exact integer comparison (lp >= rad - log2(rad) iff
 * 2^(rad-lp) <= rad), so verdicts are never float artifacts.
 */
struct RadiusLogBound {
    int rad = 0;
    double value = 0.0;
    bool satisfied_by(long long lp_value) const;
};

RadiusLogBound radius_lower_bound(const DegreeSequence& s);

/*
 * Lower bound log_{delta-1}((delta-2) * leaves) for trees of maximum
 * degree delta >= 3. satisfied_by compares (delta-1)^lp against
 * (delta-2)*leaves in integers.
 */
struct LeafCountBound {
    int delta = 0;
    long long leaves = 0;
    double value = 0.0;
    bool satisfied_by(long long lp_value) const;
    // Smallest integer m with (delta-1)^m >= (delta-2)*leaves.
    int ceil_value() const;
};

LeafCountBound leaf_count_lower_bound(int delta, long long leaves);

// lp >= diam^(2/3) / 3, decided exactly as 27*lp^3 >= diam^2.
bool diameter_bound_satisfied(long long lp_value, long long diam);

} // namespace leafpaths

#endif
