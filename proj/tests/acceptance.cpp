// Acceptance gate: ten criteria, one [PASS]/[FAIL] line each.
// Exit code is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <sys/resource.h>

#include "leafpaths/generators.hpp"
#include "leafpaths/greedy.hpp"
#include "leafpaths/kraft.hpp"
#include "leafpaths/oracle.hpp"
#include "leafpaths/pathlens.hpp"
#include "leafpaths/tree.hpp"

using namespace leafpaths;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Visits every tree shape (one per isomorphism class) with n vertices.
void for_each_shape(int n, const std::function<void(const Tree&)>& fn) {
    oracle::EnumerationScope scope;
    scope.mode = oracle::EnumerationScope::Mode::AllTreesN;
    scope.n = n;
    scope.dedupe = true;
    scope.caps = oracle::EnumerationCaps{10, 16};
    oracle::enumerate_trees(scope, [&](const Tree& t) {
        fn(t);
        return true;
    });
}

// All non-increasing positive degree sequences with n entries summing to 2(n-1).
void all_degree_sequences(int n, const std::function<void(const DegreeSequence&)>& fn) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int slots, int max_entry) -> void {
        if (slots == 0) {
            if (remaining == 0)
                fn(DegreeSequence::validate(cur));
            return;
        }
        for (int d = std::min(max_entry, remaining - (slots - 1)); d >= 1; --d) {
            cur.push_back(d);
            self(self, remaining - d, slots - 1, d);
            cur.pop_back();
        }
    };
    rec(rec, 2 * (n - 1), n, n - 1);
}

long long ipow(long long base, int exp) {
    long long r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

// 1. Closed-form family values: lengths {0,2,...,2h}, leaf count, radius.
bool crit_family_values(std::string& note) {
    bool ok = true;
    for (int delta = 3; delta <= 5; ++delta) {
        for (int h = 1; h <= 6; ++h) {
            Tree t = make_t_delta_h(delta, h);
            std::vector<int> want;
            for (int i = 0; i <= h; ++i)
                want.push_back(2 * i);
            ok &= lp_set(t).values() == want;
            ok &= static_cast<long long>(t.leaves().size()) == delta * ipow(delta - 1, h - 1);
            ok &= min_radius(degree_sequence_of(t)).value == h;
        }
    }
    note = "grid 3x6";
    return ok;
}

// 2. Leaf-count lower bound holds on all shapes with max degree >= 3, n <= 10,
//    and is tight on the family grid.
bool crit_leaf_count_bound(std::string& note) {
    bool ok = true;
    std::uint64_t checked = 0;
    for (int n = 2; n <= 10; ++n) {
        for_each_shape(n, [&](const Tree& t) {
            DegreeSequence s = degree_sequence_of(t);
            if (s.max_degree() < 3)
                return;
            ok &= leaf_count_lower_bound(s.max_degree(), s.leaf_count()).satisfied_by(lp(t));
            ++checked;
        });
    }
    for (int delta = 3; delta <= 5; ++delta)
        for (int h = 1; h <= 6; ++h)
            ok &= leaf_count_lower_bound(delta, delta * ipow(delta - 1, h - 1)).ceil_value() ==
                  h + 1;
    note = std::to_string(checked) + " shapes + tightness grid";
    return ok && checked > 0;
}

// 3. Radius-log lower bound on every shape without degree-2 vertices, n <= 12.
bool crit_radius_log_bound(std::string& note) {
    bool ok = true;
    std::uint64_t checked = 0;
    for (int n = 2; n <= 12; ++n) {
        for_each_shape(n, [&](const Tree& t) {
            DegreeSequence s = degree_sequence_of(t);
            for (int d : s.entries())
                if (d == 2)
                    return;
            ok &= radius_lower_bound(s).satisfied_by(lp(t));
            ++checked;
        });
    }
    note = std::to_string(checked) + " degree-2-free shapes";
    return ok && checked > 0;
}

// 4. Greedy minimum radius equals exhaustive search, and equals the rooted
//    minimum height of the companion out-degree sequence, for every degree
//    sequence with n <= 9.
bool crit_greedy_vs_brute(std::string& note) {
    bool ok = true;
    std::uint64_t checked = 0;
    for (int n = 2; n <= 9; ++n) {
        all_degree_sequences(n, [&](const DegreeSequence& s) {
            int greedy = min_radius(s).value;
            ok &= greedy == oracle::brute_min_radius(s);
            ok &= greedy == min_height(rooted_form(s)).value;
            ++checked;
        });
    }
    note = std::to_string(checked) + " degree sequences";
    return ok && checked > 0;
}

// 5. Windowed path-length DP equals brute force on all shapes n <= 10 and on
//    1000 random degree-constrained trees with n <= 200.
bool crit_lp_oracle(std::string& note) {
    bool ok = true;
    std::uint64_t shapes = 0;
    for (int n = 2; n <= 10; ++n) {
        for_each_shape(n, [&](const Tree& t) {
            ok &= lp_set(t) == oracle::brute_lp(t);
            ++shapes;
        });
    }
    Rng rng(20260825);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 2 + static_cast<int>(rng.below(199));
        std::vector<int> deg(n, 1);
        for (int i = 0; i < n - 2; ++i)
            ++deg[rng.below(static_cast<std::uint64_t>(n))];
        std::sort(deg.begin(), deg.end(), std::greater<int>());
        Tree t = random_tree_with_degrees(DegreeSequence::validate(deg),
                                          static_cast<std::uint64_t>(trial) * 7919 + 13);
        ok &= lp_set(t) == oracle::brute_lp(t);
    }
    note = std::to_string(shapes) + " shapes + 1000 random trees";
    return ok && shapes > 0;
}

// 6. Constrained-height properties: monotone in k, halving recurrence, and
//    equality with the exhaustive oracle for short sequences.
bool crit_constrained_height(std::string& note) {
    bool ok = true;
    Rng rng(5150);
    std::uint64_t brute_checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng.below(trial % 2 == 0 ? 12 : 40));
        std::vector<int> child_count(n, 0);
        for (int v = 1; v < n; ++v)
            ++child_count[rng.below(static_cast<std::uint64_t>(v))];
        std::sort(child_count.begin(), child_count.end(), std::greater<int>());
        OutDegreeSequence sp = OutDegreeSequence::validate(child_count);
        int leaves = sp.leaf_count();
        int prev = -1;
        for (int k = 1; k <= leaves; ++k) {
            int hk = min_height_k(sp, k).value;
            ok &= hk >= prev;
            ok &= hk <= min_height_k(sp, (k + 1) / 2).value + 1;
            if (n <= 12) {
                ok &= hk == oracle::brute_min_height_k(sp, k);
                ++brute_checked;
            }
            prev = hk;
        }
    }
    note = "200 sequences, " + std::to_string(brute_checked) + " brute comparisons";
    return ok && brute_checked > 0;
}

// 7. Depth-based certificates: under every rooting, lp is at least the number
//    of distinct leaf depths and beats the class-size height bound; the
//    certified lower bound never exceeds lp and is tight on the family.
bool crit_certificates(std::string& note) {
    bool ok = true;
    std::uint64_t rootings = 0;
    for (int n = 2; n <= 10; ++n) {
        for_each_shape(n, [&](const Tree& t) {
            int lpv = lp(t);
            for (int r = 0; r < t.vertex_count(); ++r) {
                RootedTree rt = root_at(t, r);
                std::map<int, int> class_size;
                for (int v : rt.leaves())
                    ++class_size[rt.depth[v]];
                ok &= lpv >= static_cast<int>(class_size.size());
                OutDegreeSequence sp = out_degree_sequence_of(rt);
                for (const auto& [d, c] : class_size)
                    ok &= lpv >= min_height_k(sp, c).value + 1;
                ++rootings;
            }
            LowerBoundCertificate cert = certified_lower_bound(t);
            ok &= cert.bound >= 1 && cert.bound <= lpv;
        });
    }
    for (int delta = 3; delta <= 5; ++delta) {
        for (int h = 1; h <= 6; ++h) {
            Tree t = make_t_delta_h(delta, h);
            ok &= certified_lower_bound(t).bound == h + 1 && lp(t) == h + 1;
        }
    }
    note = std::to_string(rootings) + " rootings";
    return ok && rootings > 0;
}

// 8. Dyadic pair-length survey over all binary shapes with <= 10 leaves.
bool crit_kraft_survey(std::string& note) {
    KraftSurvey survey = kraft_survey(10);
    bool ok = true;
    const std::vector<std::uint64_t> expected_counts = {1, 1, 1, 2, 3, 6, 11, 23, 46, 98};
    for (int ell = 1; ell <= 10; ++ell)
        ok &= survey.shape_counts[ell] == expected_counts[ell - 1];
    ok &= survey.violation_count == 0;
    ok &= survey.perfect_always_equality;
    ok &= survey.equality_count == survey.rows.size();
    std::uint64_t perfect = 0;
    for (const auto& row : survey.rows) {
        ok &= row.every_internal_two;
        if (row.perfect)
            ++perfect;
    }
    note = std::to_string(survey.rows.size()) + " shapes, " +
           std::to_string(survey.equality_count) + " equality (" + std::to_string(perfect) +
           " perfect)";
    return ok && !survey.rows.empty();
}

// 9. Desk-scale search for the fewest distinct lengths at fixed diameter:
//    reported values are upper bounds with brute-verified witnesses that also
//    satisfy the cube-root diameter bound.
bool crit_fixed_diameter(std::string& note) {
    bool ok = true;
    auto verify = [&](int D, int expected) {
        oracle::FdUpper f = oracle::f_of_D_upper(D, 12);
        ok &= f.value == expected;
        ok &= static_cast<int>(oracle::brute_lp(f.witness).size()) == f.value;
        ok &= metrics(f.witness).diameter == D;
        for (int d : degree_sequence_of(f.witness).entries())
            ok &= d != 2;
        ok &= f.witness_n <= 12;
        ok &= diameter_bound_satisfied(f.value, D);
    };
    verify(2, 2);
    verify(3, 3);
    note = "f_upper(2)=2, f_upper(3)=3, witnesses re-verified";
    return ok;
}

// 10. The length-set DP handles the 196k-vertex family tree in budget.
bool crit_performance(std::string& note) {
    Tree t = make_t_delta_h(3, 16);
    auto t0 = Clock::now();
    LengthSet ls = lp_set(t);
    double dt = seconds_since(t0);
    std::vector<int> want;
    for (int i = 0; i <= 16; ++i)
        want.push_back(2 * i);
    bool ok = ls.values() == want;
    ok &= dt < 5.0;
    struct rusage ru{};
    getrusage(RUSAGE_SELF, &ru);
    long long rss_kib = ru.ru_maxrss;
    ok &= rss_kib < 1024LL * 1024LL;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "n=%d, lp_set %.2f s (limit 5), peak rss %lld MiB (limit 1024)",
                  t.vertex_count(), dt, rss_kib / 1024);
    note = buf;
    return ok;
}

struct Criterion {
    const char* name;
    bool (*fn)(std::string&);
    double limit_seconds; // 0 = no enforced wall-clock limit
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {"closed-form family path lengths and radius", crit_family_values, 1.0},
        {"leaf-count lower bound, tight on the family", crit_leaf_count_bound, 0.0},
        {"radius-log lower bound on degree-2-free shapes", crit_radius_log_bound, 0.0},
        {"greedy radius equals exhaustive search + rooted identity", crit_greedy_vs_brute, 0.0},
        {"path-length DP equals brute force", crit_lp_oracle, 0.0},
        {"constrained height: monotone, halving, brute equality", crit_constrained_height, 0.0},
        {"leaf-depth certificates bound lp from below", crit_certificates, 0.0},
        {"dyadic pair-length survey on binary shapes", crit_kraft_survey, 60.0},
        {"fewest distinct lengths at fixed diameter", crit_fixed_diameter, 0.0},
        {"length-set DP performance at scale", crit_performance, 0.0},
    };

    int fails = 0;
    for (int i = 0; i < 10; ++i) {
        const Criterion& c = criteria[i];
        auto t0 = Clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = c.fn(note);
        } catch (const std::exception& e) {
            ok = false;
            note = std::string("exception: ") + e.what();
        }
        double dt = seconds_since(t0);
        if (c.limit_seconds > 0 && dt > c.limit_seconds) {
            ok = false;
            note += " [exceeded " + std::to_string(c.limit_seconds) + " s limit]";
        }
        std::printf("[%s] criterion %2d: %s — %s (%.2f s)\n", ok ? "PASS" : "FAIL", i + 1, c.name,
                    note.c_str(), dt);
        std::fflush(stdout);
        if (!ok)
            ++fails;
    }
    std::printf("acceptance: %d/10 passed\n", 10 - fails);
    return fails;
}
