#include <doctest.h>

#include <set>

#include "leafpaths/error.hpp"
#include "leafpaths/length_set.hpp"

using namespace leafpaths;

TEST_CASE("basic set operations") {
    LengthSet s(100);
    CHECK(s.empty());
    CHECK(s.size() == 0);
    CHECK(s.min_value() == -1);
    CHECK(s.max_value() == -1);
    s.insert(3);
    s.insert(64);
    s.insert(3);
    CHECK_FALSE(s.empty());
    CHECK(s.size() == 2);
    CHECK(s.contains(3));
    CHECK(s.contains(64));
    CHECK_FALSE(s.contains(4));
    CHECK(s.min_value() == 3);
    CHECK(s.max_value() == 64);
    CHECK(s.values() == std::vector<int>{3, 64});

    CHECK_THROWS_AS(s.insert(101), Error);
    CHECK_THROWS_AS(s.insert(-1), Error);
    CHECK_THROWS_AS(LengthSet(-1), Error);
}

TEST_CASE("window keeps deep singletons cheap") {
    LengthSet s = LengthSet::singleton(1'000'000, 2'000'000);
    CHECK(s.size() == 1);
    CHECK(s.contains(1'000'000));
    CHECK(s.word_span() == 1);  // one machine word despite the huge cap
    s.insert(1'000'063);
    CHECK(s.word_span() <= 2);
}

TEST_CASE("union and shifted union") {
    LengthSet a(200);
    a.insert(0);
    a.insert(70);
    LengthSet b(200);
    b.insert(5);
    b.insert(130);
    a.union_with(b);
    CHECK(a.values() == std::vector<int>{0, 5, 70, 130});

    LengthSet c(300);
    c.union_shifted(a, 100);
    CHECK(c.values() == std::vector<int>{100, 105, 170, 230});
    c.union_shifted(a, 0);
    CHECK(c.size() == 8);

    // negative shifts must keep every value in range
    LengthSet d(300);
    d.union_shifted(b, -5);
    CHECK(d.values() == std::vector<int>{0, 125});

    // shifting out of range is an error
    LengthSet small(50);
    CHECK_THROWS_AS(small.union_shifted(a, 0), Error);  // 70 > 50
    LengthSet neg(300);
    CHECK_THROWS_AS(neg.union_shifted(a, -1), Error);  // 0 - 1 < 0
}

TEST_CASE("equality ignores cap and window placement") {
    LengthSet a(100);
    a.insert(64);
    LengthSet b = LengthSet::singleton(64, 1000);
    CHECK(a == b);
    LengthSet c(100);
    c.insert(0);
    c.insert(64);
    CHECK_FALSE(a == c);
    CHECK(LengthSet(10) == LengthSet(99));
}

TEST_CASE("sumset matches brute-force double loop") {
    auto brute = [](const LengthSet& a, const LengthSet& b) {
        std::set<int> out;
        for (int x : a.values())
            for (int y : b.values())
                out.insert(x + y);
        return std::vector<int>(out.begin(), out.end());
    };
    LengthSet a(64);
    for (int v : {0, 1, 5, 63})
        a.insert(v);
    LengthSet b(200);
    for (int v : {2, 64, 100})
        b.insert(v);
    LengthSet s = sumset(a, b);
    CHECK(s.values() == brute(a, b));

    // caps tight: max sums must fit the larger cap
    LengthSet c(10);
    c.insert(10);
    LengthSet d(10);
    d.insert(10);
    CHECK_THROWS_AS(sumset(c, d), Error);

    // pseudo-random cross-check
    std::uint64_t state = 12345;
    auto next = [&] {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    };
    for (int trial = 0; trial < 50; ++trial) {
        LengthSet x(400);
        LengthSet y(400);
        for (int i = 0; i < 12; ++i) {
            x.insert(static_cast<int>(next() % 200));
            y.insert(static_cast<int>(next() % 200));
        }
        CHECK(sumset(x, y).values() == brute(x, y));
    }
}

TEST_CASE("empty operands") {
    LengthSet e(50);
    LengthSet a(50);
    a.insert(7);
    LengthSet u = a;
    u.union_with(e);
    CHECK(u == a);
    u.union_shifted(e, 13);
    CHECK(u == a);
    CHECK(sumset(e, a).empty());
    CHECK(sumset(e, e).empty());
}
