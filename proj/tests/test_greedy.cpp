#include <doctest.h>

#include <functional>
#include <vector>

#include "leafpaths/error.hpp"
#include "leafpaths/generators.hpp"
#include "leafpaths/greedy.hpp"
#include "leafpaths/oracle.hpp"
#include "leafpaths/prufer.hpp"

using namespace leafpaths;

namespace {

// every non-increasing positive sequence with the tree degree sum
std::vector<std::vector<int>> all_degree_sequences(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int, int)> rec = [&](int left, int slots, int max_entry) {
        if (slots == 0) {
            if (left == 0)
                out.push_back(cur);
            return;
        }
        for (int d = std::min(max_entry, left - (slots - 1)); d >= 1; --d) {
            cur.push_back(d);
            rec(left - d, slots - 1, d);
            cur.pop_back();
        }
    };
    rec(2 * (n - 1), n, n - 1);
    return out;
}

} // namespace

TEST_CASE("min_radius fixtures") {
    CHECK(min_radius(DegreeSequence::validate({1, 1})).value == 1);
    CHECK(min_radius(DegreeSequence::validate({3, 1, 1, 1})).value == 1);
    CHECK(min_radius(DegreeSequence::validate({3, 2, 1, 1, 1})).value == 2);
    CHECK(min_radius(DegreeSequence::validate({3, 3, 3, 3, 1, 1, 1, 1, 1, 1})).value == 2);
}

TEST_CASE("min_radius witness realizes the sequence at the claimed radius") {
    for (int n = 2; n <= 8; ++n) {
        for (const auto& entries : all_degree_sequences(n)) {
            DegreeSequence s = DegreeSequence::validate(entries);
            LayeredWitness wit = min_radius(s);
            CHECK(degree_sequence_of(wit.rooted.tree).entries() == s.entries());
            Metrics m = metrics(wit.rooted.tree);
            CHECK(m.radius == wit.value);
            CHECK(wit.rooted.height() == wit.value);
            CHECK(static_cast<int>(wit.layers.size()) == wit.value + 1);
        }
    }
}

TEST_CASE("min_radius matches the exhaustive oracle") {
    for (int n = 2; n <= 8; ++n) {
        for (const auto& entries : all_degree_sequences(n)) {
            DegreeSequence s = DegreeSequence::validate(entries);
            CHECK(min_radius(s).value == oracle::brute_min_radius(s));
            CHECK(check_height_radius_identity(s));
        }
    }
}

TEST_CASE("min_height witness realizes the out-degree sequence") {
    std::vector<std::vector<int>> seqs = {
        {0}, {1, 0}, {2, 0, 0}, {2, 2, 0, 0, 0}, {3, 2, 2, 2, 0, 0, 0, 0, 0, 0},
        {2, 1, 1, 1, 0, 0}, {4, 0, 0, 0, 0}};
    for (const auto& e : seqs) {
        OutDegreeSequence s = OutDegreeSequence::validate(e);
        LayeredWitness wit = min_height(s);
        CHECK(out_degree_sequence_of(wit.rooted).entries() == s.entries());
        CHECK(wit.rooted.height() == wit.value);
        CHECK(wit.value == oracle::brute_min_height(s));
    }
}

TEST_CASE("min_height_k fixtures and certificates") {
    OutDegreeSequence s = OutDegreeSequence::validate({3, 2, 2, 2, 0, 0, 0, 0, 0, 0});
    ConstrainedHeight k3 = min_height_k(s, 3);
    CHECK(k3.value == 1);
    CHECK(k3.chosen_p == 1);
    CHECK(k3.reduced.entries() == std::vector<int>{3, 0, 0, 0});
    ConstrainedHeight k6 = min_height_k(s, 6);
    CHECK(k6.value == 2);
    CHECK(k6.chosen_p == 4);
    ConstrainedHeight k1 = min_height_k(s, 1);
    CHECK(k1.value == 0);
    CHECK(k1.chosen_p == 0);
    CHECK(k1.reduced.entries() == std::vector<int>{0});

    // witness has >= k leaves and height equal to the value
    for (int k = 1; k <= s.leaf_count(); ++k) {
        ConstrainedHeight res = min_height_k(s, k);
        CHECK(res.witness.rooted.height() == res.value);
        CHECK(static_cast<int>(res.witness.rooted.leaves().size()) >= k);
    }

    CHECK_THROWS_AS(min_height_k(s, 0), Error);
    CHECK_THROWS_AS(min_height_k(s, 7), Error);
}

TEST_CASE("min_height_k equals the oracle and obeys the halving property") {
    // out-degree sequences harvested from random rooted trees
    Rng rng(424242);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + static_cast<int>(rng.below(12));
        std::vector<int> word;
        for (int i = 0; i + 2 < n; ++i)
            word.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
        Tree t = prufer_decode(n, word);
        RootedTree rt = root_at(t, static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
        OutDegreeSequence s = out_degree_sequence_of(rt);
        int leaves = s.leaf_count();
        int prev = 0;
        for (int k = 1; k <= leaves; ++k) {
            int value = min_height_k(s, k).value;
            CHECK(value >= prev);  // monotone in k
            CHECK(value <= min_height_k(s, (k + 1) / 2).value + 1);
            CHECK(value == oracle::brute_min_height_k(s, k));
            prev = value;
            ++checked;
        }
    }
    CHECK(checked > 200);
}

TEST_CASE("rooted form ties radius to height") {
    DegreeSequence s = DegreeSequence::validate({3, 3, 3, 3, 1, 1, 1, 1, 1, 1});
    OutDegreeSequence rooted = rooted_form(s);
    CHECK(rooted.entries() == std::vector<int>{3, 2, 2, 2, 0, 0, 0, 0, 0, 0});
    CHECK(min_height(rooted).value == min_radius(s).value);
}
