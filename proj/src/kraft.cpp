#include <algorithm>
#include <utility>

#include "leafpaths/error.hpp"
#include "leafpaths/kraft.hpp"
#include "leafpaths/oracle.hpp"

namespace leafpaths {

DyadicRational::DyadicRational(Int numerator, int exponent)
    : num_(std::move(numerator)), exp_(exponent) {
    if (num_ < 0 || exp_ < 0)
        throw Error(ErrorKind::InvalidParameter, "dyadic rationals here are non-negative");
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    while (exp_ > 0 && (num_ & 1) == 0) {
        num_ >>= 1;
        --exp_;
    }
}

DyadicRational DyadicRational::operator+(const DyadicRational& other) const {
    int exp = std::max(exp_, other.exp_);
    Int a = num_ << (exp - exp_);
    Int b = other.num_ << (exp - other.exp_);
    return DyadicRational(a + b, exp);
}

std::strong_ordering DyadicRational::operator<=>(const DyadicRational& other) const {
    int exp = std::max(exp_, other.exp_);
    Int a = num_ << (exp - exp_);
    Int b = other.num_ << (exp - other.exp_);
    if (a < b)
        return std::strong_ordering::less;
    if (a == b)
        return std::strong_ordering::equal;
    return std::strong_ordering::greater;
}

std::string DyadicRational::to_string() const {
    std::string num = num_.str();
    if (exp_ == 0)
        return num;
    return num + "/2^" + std::to_string(exp_);
}

bool every_internal_has_two_children(const RootedTree& rt) {
    for (const auto& kids : rt.children)
        if (!kids.empty() && kids.size() != 2)
            return false;
    return true;
}

bool is_perfect(const RootedTree& rt) {
    int depth = -1;
    for (int v : rt.leaves()) {
        if (depth < 0)
            depth = rt.depth[static_cast<std::size_t>(v)];
        else if (rt.depth[static_cast<std::size_t>(v)] != depth)
            return false;
    }
    return true;
}

std::map<int, std::int64_t> leaf_pair_length_multiset(const RootedTree& rt) {
    if (!every_internal_has_two_children(rt))
        throw Error(ErrorKind::NonBinaryTree, "an internal vertex does not have 2 children");
    const std::size_t n = static_cast<std::size_t>(rt.tree.vertex_count());
    std::vector<std::map<int, std::int64_t>> depth_counts(n);
    std::map<int, std::int64_t> out;
    for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it) {
        std::size_t v = static_cast<std::size_t>(*it);
        const auto& kids = rt.children[v];
        if (kids.empty()) {
            depth_counts[v][rt.depth[v]] = 1;
            continue;
        }
        auto& a = depth_counts[static_cast<std::size_t>(kids[0])];
        auto& b = depth_counts[static_cast<std::size_t>(kids[1])];
        for (const auto& [da, ca] : a)
            for (const auto& [db, cb] : b)
                out[da + db - 2 * rt.depth[v]] += ca * cb;
        if (a.size() < b.size())
            std::swap(a, b);
        for (const auto& [d, c] : b)
            a[d] += c;
        depth_counts[v] = std::move(a);
    }
    return out;
}

KraftSum kraft_sum(const RootedTree& rt) {
    std::map<int, std::int64_t> lengths = leaf_pair_length_multiset(rt);
    DyadicRational sum;
    for (const auto& [w, count] : lengths)
        sum = sum + DyadicRational(count, w);
    int leaves = static_cast<int>(rt.leaves().size());
    KraftSum result;
    result.sum = sum;
    result.bound = DyadicRational(leaves - 1, 2);
    result.equality = result.sum == result.bound;
    return result;
}

std::vector<std::string> binary_shape_encodings(int leaves) {
    if (leaves < 1)
        throw Error(ErrorKind::InvalidParameter, "leaf count must be positive");
    if (leaves > 10)
        throw Error(ErrorKind::CapExceeded,
                    "leaf count " + std::to_string(leaves) + " exceeds cap 10");
    std::vector<std::vector<std::string>> table(static_cast<std::size_t>(leaves) + 1);
    table[1] = {"()"};
    for (int l = 2; l <= leaves; ++l) {
        std::vector<std::string> out;
        for (int l1 = 1; l1 <= l / 2; ++l1) {
            const auto& left = table[static_cast<std::size_t>(l1)];
            const auto& right = table[static_cast<std::size_t>(l - l1)];
            if (l1 == l - l1) {
                for (std::size_t i = 0; i < left.size(); ++i)
                    for (std::size_t j = i; j < left.size(); ++j)
                        out.push_back("(" + left[i] + left[j] + ")");
            } else {
                for (const auto& a : left)
                    for (const auto& b : right)
                        out.push_back("(" + a + b + ")");
            }
        }
        std::sort(out.begin(), out.end());
        table[static_cast<std::size_t>(l)] = std::move(out);
    }
    return table[static_cast<std::size_t>(leaves)];
}

KraftSurvey kraft_survey(int leaf_cap) {
    if (leaf_cap < 1)
        throw Error(ErrorKind::InvalidParameter, "leaf cap must be positive");
    if (leaf_cap > 10)
        throw Error(ErrorKind::CapExceeded,
                    "leaf cap " + std::to_string(leaf_cap) + " exceeds cap 10");
    KraftSurvey survey;
    survey.leaf_cap = leaf_cap;
    survey.shape_counts.assign(static_cast<std::size_t>(leaf_cap) + 1, 0);
    for (int l = 1; l <= leaf_cap; ++l) {
        std::vector<std::string> encodings = binary_shape_encodings(l);
        survey.shape_counts[static_cast<std::size_t>(l)] = encodings.size();
        for (const auto& enc : encodings) {
            RootedTree rt = root_at(oracle::tree_from_encoding(enc), 0);
            KraftRow row{l, enc, kraft_sum(rt), is_perfect(rt),
                         every_internal_has_two_children(rt)};
            if (row.result.equality)
                ++survey.equality_count;
            if (row.result.sum > row.result.bound)
                ++survey.violation_count;
            if (row.perfect && !row.result.equality)
                survey.perfect_always_equality = false;
            survey.rows.push_back(std::move(row));
        }
    }
    return survey;
}

} // namespace leafpaths
