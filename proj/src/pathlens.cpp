#include "leafpaths/pathlens.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "leafpaths/greedy.hpp"

namespace leafpaths {

LengthSet lp_set(const Tree& tree) {
    const int n = tree.vertex_count();
    if (n < 2)
        throw Error(ErrorKind::TooFewVertices, "lp needs at least 2 vertices");
    Metrics m = metrics(tree);
    LengthSet answer(m.diameter);
    answer.insert(0);
    if (n == 2) {
        answer.insert(1);
        return answer;
    }
    // Root at an internal vertex so that "no children" coincides with
    // "leaf of the undirected tree" and every leaf pair meets at an
    // internal lowest common ancestor.
    int root = 0;
    while (tree.degree(root) <= 1) ++root;
    RootedTree rt = root_at(tree, root);
    const int height = rt.height();

    // depth_sets[v]: depths (from the root, not from v) of leaves in the
    // subtree of v. Global depths make child merges plain ORs.
    std::vector<LengthSet> depth_sets(n);
    for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it) {
        const int v = *it;
        const auto& kids = rt.children[v];
        if (kids.empty()) {
            depth_sets[v] = LengthSet::singleton(rt.depth[v], height);
            continue;
        }
        const int down = -2 * rt.depth[v];
        LengthSet acc = std::move(depth_sets[kids[0]]);
        for (std::size_t i = 1; i < kids.size(); ++i) {
            LengthSet child = std::move(depth_sets[kids[i]]);
            // Record cross pairs: depth a on one side, b on the other,
            // path length a + b - 2*depth(v).
            const LengthSet& sparse = acc.size() <= child.size() ? acc : child;
            const LengthSet& dense = acc.size() <= child.size() ? child : acc;
            for (int a : sparse.values()) answer.union_shifted(dense, a + down);
            if (child.word_span() > acc.word_span()) std::swap(acc, child);
            acc.union_with(child);
        }
        depth_sets[v] = std::move(acc);
    }
    return answer;
}

int lp(const Tree& tree) { return lp_set(tree).size(); }

LowerBoundCertificate certified_lower_bound(const Tree& tree) {
    const int n = tree.vertex_count();
    if (n < 2)
        throw Error(ErrorKind::TooFewVertices, "certified bound needs at least 2 vertices");
    int root = 0;
    for (int v = 1; v < n; ++v)
        if (tree.degree(v) > tree.degree(root)) root = v;
    RootedTree rt = root_at(tree, root);

    std::map<int, int> class_size; // leaf depth -> count
    for (int leaf : rt.leaves()) ++class_size[rt.depth[leaf]];

    LowerBoundCertificate best;
    best.kind = LowerBoundCertificate::Kind::DepthCount;
    best.rooting = root;
    for (const auto& [dep, cnt] : class_size) best.leaf_depths.push_back(dep);
    best.bound = static_cast<int>(best.leaf_depths.size());

    OutDegreeSequence s_plus = out_degree_sequence_of(rt);
    for (const auto& [dep, cnt] : class_size) {
        int hk = min_height_k(s_plus, cnt).value;
        if (hk + 1 > best.bound) {
            best.kind = LowerBoundCertificate::Kind::EqualDepthClass;
            best.class_depth = dep;
            best.class_size = cnt;
            best.height_k = hk;
            best.bound = hk + 1;
        }
    }
    return best;
}

bool RadiusLogBound::satisfied_by(long long lp_value) const {
    if (lp_value >= rad) return true;
    long long gap = rad - lp_value; // lp >= rad - log2(rad) iff 2^gap <= rad
    if (gap >= 63) return false;
    return (1LL << gap) <= static_cast<long long>(rad);
}

RadiusLogBound radius_lower_bound(const DegreeSequence& s) {
    if (s.has_entry_two())
        throw Error(ErrorKind::InvalidParameter,
                    "radius bound requires a sequence with no 2 entry");
    int rad = min_radius(s).value;
    return RadiusLogBound{rad, rad - std::log2(static_cast<double>(rad))};
}

bool LeafCountBound::satisfied_by(long long lp_value) const {
    if (lp_value < 0) return false;
    const __int128 arg = static_cast<__int128>(delta - 2) * leaves;
    __int128 pow = 1;
    for (long long i = 0; i < lp_value; ++i) {
        if (pow >= arg) return true;
        pow *= delta - 1;
    }
    return pow >= arg;
}

int LeafCountBound::ceil_value() const {
    const __int128 arg = static_cast<__int128>(delta - 2) * leaves;
    __int128 pow = 1;
    int m = 0;
    while (pow < arg) {
        pow *= delta - 1;
        ++m;
    }
    return m;
}

LeafCountBound leaf_count_lower_bound(int delta, long long leaves) {
    if (delta < 3)
        throw Error(ErrorKind::InvalidParameter, "maximum degree must be at least 3");
    if (leaves < 2)
        throw Error(ErrorKind::InvalidParameter, "need at least 2 leaves");
    double value = std::log(static_cast<double>(delta - 2) * static_cast<double>(leaves)) /
                   std::log(static_cast<double>(delta - 1));
    return LeafCountBound{delta, leaves, value};
}

bool diameter_bound_satisfied(long long lp_value, long long diam) {
    if (lp_value < 0 || diam < 0) return false;
    const __int128 lhs = static_cast<__int128>(27) * lp_value * lp_value * lp_value;
    const __int128 rhs = static_cast<__int128>(diam) * diam;
    return lhs >= rhs;
}

} // namespace leafpaths
