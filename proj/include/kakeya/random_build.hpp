#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rational.hpp"
#include "rng.hpp"
#include "space.hpp"

namespace kakeya {

/// One randomized construction: a union of one uniformly random line per
/// direction class. By construction the result contains a line in every
/// requested direction.
struct Construction {
    std::uint64_t seed = 0;
    std::vector<point_t> bases;             // sampled base point per class, class order
    std::vector<std::uint32_t> trajectory;  // union size after each class
    PointSet set;                           // the final union
};

/// Sample one line per class and union them. The base of class j is drawn
/// from the substream derive_seed(seed, j), so the outcome is a pure
/// function of (seed, classes) and independent of evaluation order.
inline Construction build_random_kakeya(const Space& space, const std::vector<Direction>& classes,
                                        std::uint64_t seed) {
    const std::vector<Direction> sorted = sorted_distinct_classes(classes);
    Construction out{seed, {}, {}, PointSet(space.size())};
    out.bases.reserve(sorted.size());
    out.trajectory.reserve(sorted.size());
    for (std::size_t j = 0; j < sorted.size(); ++j) {
        SplitMix64 gen(derive_seed(seed, j));
        const point_t y = uniform_below(gen, space.size());
        out.bases.push_back(y);
        Line l = space.line(sorted[j].rep, space.decode(y));
        for (point_t p : l.points) out.set.insert(p);
        out.trajectory.push_back(out.set.size());
    }
    return out;
}

/// Expected union sizes after 1..M lines, as exact rationals:
/// value[i] = value[i-1] * (1 - 1/q^(n-1)) + q, value[1] = q.
struct ExpectedSizeTable {
    std::uint32_t q = 0;
    unsigned n = 0;
    std::uint32_t m = 0;
    std::vector<Rational> values;  // values[i-1] = expected size after i lines

    const Rational& back() const { return values.back(); }
};

/// The recursion runs on integer numerators over the known denominators
/// q^((n-1)(i-1)): value i is (N[i-1]*(c-1) + q*c^(i-1)) / c^(i-1) with
/// c = q^(n-1). Each value is normalized once by valuation.
inline ExpectedSizeTable expected_union_size_table(std::uint32_t q, unsigned n, std::uint32_t m) {
    if (q < 2 || n < 1 || m < 1) throw std::invalid_argument("need q >= 2, n >= 1, M >= 1");
    const std::vector<std::uint32_t> primes = prime_factors(q);
    const BigInt cosets = boost::multiprecision::pow(BigInt(q), n - 1);
    const BigInt shrink_num = cosets - 1;
    ExpectedSizeTable t{q, n, m, {}};
    t.values.reserve(m);
    BigInt num = q, den = 1;
    t.values.push_back(Rational(BigInt(q)));
    for (std::uint32_t i = 2; i <= m; ++i) {
        den *= cosets;
        num = num * shrink_num + q * den;
        t.values.push_back(Rational::over_smooth_den(num, den, primes));
    }
    return t;
}

/// Closed form of the same recursion:
/// a^(M-1) * q + q^n * (1 - a^(M-1)) with a = 1 - 1/q^(n-1) and 0^0 = 1;
/// evaluated as (q*(c-1)^(M-1) + q^n*(c^(M-1) - (c-1)^(M-1))) / c^(M-1).
inline Rational expected_union_size_closed(std::uint32_t q, unsigned n, std::uint32_t m) {
    if (q < 2 || n < 1 || m < 1) throw std::invalid_argument("need q >= 2, n >= 1, M >= 1");
    const BigInt cosets = boost::multiprecision::pow(BigInt(q), n - 1);
    const BigInt shrink_pow = boost::multiprecision::pow(BigInt(cosets - 1), m - 1);
    const BigInt den = boost::multiprecision::pow(cosets, m - 1);
    const BigInt qn = boost::multiprecision::pow(BigInt(q), n);
    const BigInt num = q * shrink_pow + qn * (den - shrink_pow);
    return Rational::over_smooth_den(num, den, prime_factors(q));
}

/// Seeded Monte Carlo over independent constructions. All aggregates are
/// exact integer sums, so the statistics are identical for every thread
/// count and schedule.
struct MonteCarlo {
    std::uint64_t trials = 0;
    std::uint64_t size_sum = 0;
    std::uint64_t size_sq_sum = 0;
    double mean = 0.0;
    double sample_variance = 0.0;
    double std_error = 0.0;
    std::map<std::uint32_t, std::uint64_t> histogram;  // final size -> count
};

inline MonteCarlo monte_carlo(const Space& space, const std::vector<Direction>& classes, std::uint64_t trials,
                              std::uint64_t master_seed, unsigned threads = 1) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    const std::vector<Direction> sorted = sorted_distinct_classes(classes);
    if (threads < 1) threads = 1;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));

    struct Partial {
        std::uint64_t sum = 0, sq = 0;
        std::map<std::uint32_t, std::uint64_t> hist;
    };
    std::vector<Partial> parts(threads);
    auto run = [&](unsigned w) {
        Partial& part = parts[w];
        for (std::uint64_t t = w; t < trials; t += threads) {
            Construction c = build_random_kakeya(space, sorted, derive_seed(master_seed, t));
            const std::uint64_t s = c.set.size();
            part.sum += s;
            part.sq += s * s;
            ++part.hist[c.set.size()];
        }
    };
    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }

    MonteCarlo mc;
    mc.trials = trials;
    for (const Partial& part : parts) {
        mc.size_sum += part.sum;
        mc.size_sq_sum += part.sq;
        for (const auto& [size, count] : part.hist) mc.histogram[size] += count;
    }
    const double n = static_cast<double>(trials);
    mc.mean = static_cast<double>(mc.size_sum) / n;
    if (trials > 1) {
        // (sum of squares - n * mean^2) / (n - 1), kept in exact integers as
        // (n * sq - sum^2) / (n * (n - 1)).
        const long double num = static_cast<long double>(mc.size_sq_sum) * trials -
                                static_cast<long double>(mc.size_sum) * mc.size_sum;
        mc.sample_variance = static_cast<double>(num / (static_cast<long double>(trials) * (trials - 1)));
    }
    mc.std_error = std::sqrt(mc.sample_variance / n);
    return mc;
}

}  // namespace kakeya
