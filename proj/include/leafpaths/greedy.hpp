#ifndef LEAFPATHS_GREEDY_HPP
#define LEAFPATHS_GREEDY_HPP

#include "leafpaths/tree.hpp"

namespace leafpaths {

/*
 * Result of a layered greedy realization: the rooted witness tree, its
 * vertices grouped by depth, and the realized optimum (radius or height).
 * Layer 0 is the root alone; degrees are non-increasing along the
 * placement order, so witnesses are reproducible.
 */
struct LayeredWitness {
    RootedTree rooted;
    std::vector<std::vector<int>> layers;
    int value = 0;
};

// Minimum radius over trees realizing s, with a witness achieving it.
// The witness places a maximum-degree center, then fills each layer with
// the largest remaining degrees; every leaf ends at distance value or
// value-1 from the center.
LayeredWitness min_radius(const DegreeSequence& s);

// Minimum height over rooted trees realizing the out-degree sequence,
// by the same layering with child counts instead of degree-1 slots.
LayeredWitness min_height(const OutDegreeSequence& s_plus);

struct ConstrainedHeight {
    int value = 0;
    // Length of the non-zero initial segment kept from s_plus; 0 for the
    // k=1 single-root case.
    int chosen_p = 0;
    OutDegreeSequence reduced; // the realized subsequence, zeros included
    LayeredWitness witness;
};

// Minimum height of a rooted tree with at least k leaves whose out-degree
// sequence is a subsequence of s_plus. Picks the smallest p such that
// d1+..+dp - (p-1) >= k and realizes (d1,..,dp, 0,...,0) greedily.
ConstrainedHeight min_height_k(const OutDegreeSequence& s_plus, int k);

// (d1, d2-1, ..., dn-1): the out-degree sequence obtained by rooting a
// realization of s at a vertex of maximum degree.
OutDegreeSequence rooted_form(const DegreeSequence& s);

// Minimum height of the rooted form equals the minimum radius of s;
// expected to hold for every valid sequence.
bool check_height_radius_identity(const DegreeSequence& s);

} // namespace leafpaths

#endif
