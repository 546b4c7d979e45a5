#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "leafpaths/error.hpp"
#include "leafpaths/greedy.hpp"
#include "leafpaths/oracle.hpp"
#include "leafpaths/pathlens.hpp"

namespace leafpaths::oracle {

GapRecord evaluate_tree(const Tree& tree) {
    GapRecord rec;
    rec.n = tree.vertex_count();
    DegreeSequence s = degree_sequence_of(tree);
    rec.degree_sequence = s.entries();
    rec.has_degree_2 = s.has_entry_two();
    rec.rad_s = min_radius(s).value;
    rec.rad_s_prime = min_radius(s.without_twos()).value;
    rec.diameter = metrics(tree).diameter;
    rec.lp_value = lp(tree);
    rec.theorem2_bound = rec.rad_s - std::log2(static_cast<double>(rec.rad_s));
    if (rec.has_degree_2) {
        rec.satisfied = true;  // the radius bound only claims degree-2-free trees
    } else {
        RadiusLogBound bound{rec.rad_s, rec.theorem2_bound};
        rec.satisfied = bound.satisfied_by(rec.lp_value);
    }
    return rec;
}

namespace {

void fold(GapAggregates& agg, const GapRecord& rec) {
    ++agg.trees_scanned;
    if (!rec.has_degree_2) {
        int gap = rec.rad_s - rec.lp_value;
        agg.max_gap_rad = agg.max_gap_rad ? std::max(*agg.max_gap_rad, gap) : gap;
        if (!rec.satisfied)
            ++agg.theorem2_violations;
    }
    int gap_prime = rec.rad_s_prime - rec.lp_value;
    agg.max_gap_rad_prime =
        agg.max_gap_rad_prime ? std::max(*agg.max_gap_rad_prime, gap_prime) : gap_prime;
}

void merge(GapAggregates& into, const GapAggregates& part) {
    into.trees_scanned += part.trees_scanned;
    into.theorem2_violations += part.theorem2_violations;
    if (part.max_gap_rad)
        into.max_gap_rad =
            into.max_gap_rad ? std::max(*into.max_gap_rad, *part.max_gap_rad) : *part.max_gap_rad;
    if (part.max_gap_rad_prime)
        into.max_gap_rad_prime = into.max_gap_rad_prime
                                     ? std::max(*into.max_gap_rad_prime, *part.max_gap_rad_prime)
                                     : *part.max_gap_rad_prime;
}

} // namespace

GapAggregates gap_scan(const EnumerationScope& scope, int workers, const GapRowVisitor& row) {
    if (workers < 1)
        throw Error(ErrorKind::InvalidParameter, "worker count must be positive");
    const bool parallel = workers > 1 && scope.mode == EnumerationScope::Mode::AllTreesN &&
                          !scope.dedupe && scope.n >= 3;
    if (!parallel) {
        GapAggregates agg;
        enumerate_trees(scope, [&](const Tree& t) {
            GapRecord rec = evaluate_tree(t);
            fold(agg, rec);
            return row ? row(rec) : true;
        });
        return agg;
    }

    // Cap check up front so it throws on the calling thread.
    if (scope.n > scope.caps.labeled)
        throw Error(ErrorKind::CapExceeded, "enumeration size " + std::to_string(scope.n) +
                                                " exceeds cap " +
                                                std::to_string(scope.caps.labeled));
    const int n = scope.n;
    const int nthreads = std::min(workers, n);
    std::vector<GapAggregates> parts(static_cast<std::size_t>(nthreads));
    std::atomic<bool> stop{false};
    std::mutex row_mutex;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int w = 0; w < nthreads; ++w) {
        int lo = static_cast<int>(static_cast<long long>(n) * w / nthreads);
        int hi = static_cast<int>(static_cast<long long>(n) * (w + 1) / nthreads);
        pool.emplace_back([&, w, lo, hi] {
            try {
                enumerate_labeled_partition(n, lo, hi, [&](const Tree& t) {
                    if (stop.load(std::memory_order_relaxed))
                        return false;
                    GapRecord rec = evaluate_tree(t);
                    fold(parts[static_cast<std::size_t>(w)], rec);
                    if (row) {
                        std::lock_guard<std::mutex> guard(row_mutex);
                        if (!row(rec)) {
                            stop.store(true, std::memory_order_relaxed);
                            return false;
                        }
                    }
                    return true;
                });
            } catch (...) {
                std::lock_guard<std::mutex> guard(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                stop.store(true, std::memory_order_relaxed);
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    GapAggregates agg;
    for (const auto& part : parts)
        merge(agg, part);
    return agg;
}

GapReport conjecture_gap_report(const EnumerationScope& scope) {
    GapReport report;
    report.aggregates = gap_scan(scope, 1, [&](const GapRecord& rec) {
        report.records.push_back(rec);
        return true;
    });
    return report;
}

FdUpper f_of_D_upper(int D, int n_cap, const EnumerationCaps& caps) {
    if (D < 2)
        throw Error(ErrorKind::InvalidParameter, "diameter must be at least 2");
    EnumerationScope scope;
    scope.mode = EnumerationScope::Mode::NoDegree2DiameterD;
    scope.diameter_d = D;
    scope.n_cap = n_cap;
    scope.dedupe = true;
    scope.caps = caps;
    std::optional<Tree> best_tree;
    int best = std::numeric_limits<int>::max();
    enumerate_trees(scope, [&](const Tree& t) {
        int v = lp(t);
        if (v < best) {
            best = v;
            best_tree = t;
        }
        return true;
    });
    if (!best_tree)
        throw Error(ErrorKind::NoTreeInScope,
                    "no degree-2-free tree of diameter " + std::to_string(D) + " on up to " +
                        std::to_string(n_cap) + " vertices");
    int wn = best_tree->vertex_count();
    return FdUpper{best, std::move(*best_tree), wn};
}

} // namespace leafpaths::oracle
