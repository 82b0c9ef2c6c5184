#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "random_build.hpp"
#include "rational.hpp"

namespace kakeya {

/// Caveat attached to lb_paper whenever it exceeds the rigorous integer
/// bound (possible because t = sqrt(M) need not be an integer).
inline constexpr const char* kLbPaperCaveat = "formula as printed; not sound for non-integer √M";

/// q*sqrt(M) + min(0, q - sqrt(M)), the counting bound with t = sqrt(M)
/// taken as a real. Reported as printed; see lower_bound_integer for the
/// version that is sound at every scale.
inline double lower_bound_sqrt(std::uint32_t q, std::uint64_t m) {
    if (q < 2 || m < 1) throw std::invalid_argument("need q >= 2, M >= 1");
    const double s = std::sqrt(static_cast<double>(m));
    return q * s + std::min(0.0, q - s);
}

/// max over integer t in [1, M] of min(ceil(M*q/t), (q-1)*(t+1)+1).
/// Valid for every set containing one full line per each of M pairwise
/// non-equivalent directions: point-line incidence counts are integers.
inline std::uint64_t lower_bound_integer(std::uint32_t q, std::uint64_t m) {
    if (q < 2 || m < 1) throw std::invalid_argument("need q >= 2, M >= 1");
    std::uint64_t best = 0;
    for (std::uint64_t t = 1; t <= m; ++t) {
        const std::uint64_t many_lines = (m * q + t - 1) / t;      // every point on <= t lines
        const std::uint64_t star = (q - 1) * (t + 1) + 1;          // some point on >= t+1 lines
        best = std::max(best, std::min(many_lines, star));
    }
    return best;
}

/// q + q^n * (1 - (1 - 1/q^(n-1))^(M-1)), exact rational form
/// (with the convention 0^0 = 1, so n = 1, M = 1 gives q); evaluated as
/// (q*c^(M-1) + q^n*(c^(M-1) - (c-1)^(M-1))) / c^(M-1) with c = q^(n-1).
inline Rational upper_bound_exact(std::uint32_t q, unsigned n, std::uint64_t m) {
    if (q < 2 || n < 1 || m < 1) throw std::invalid_argument("need q >= 2, n >= 1, M >= 1");
    const BigInt cosets = boost::multiprecision::pow(BigInt(q), n - 1);
    const BigInt shrink_pow = boost::multiprecision::pow(BigInt(cosets - 1), static_cast<unsigned>(m - 1));
    const BigInt den = boost::multiprecision::pow(cosets, static_cast<unsigned>(m - 1));
    const BigInt qn = boost::multiprecision::pow(BigInt(q), n);
    const BigInt num = q * den + qn * (den - shrink_pow);
    return Rational::over_smooth_den(num, den, prime_factors(q));
}

inline double upper_bound(std::uint32_t q, unsigned n, std::uint64_t m) {
    return upper_bound_exact(q, n, m).to_double();
}

/// Corollary values for fractional direction budgets M = eps*(q^n-1)/(q-1).
struct EpsilonBounds {
    double eps = 0.0;
    double m_real = 0.0;  // eps*(q^n-1)/(q-1); not necessarily an integer
    double delta = 0.0;   // q*eps/(q-1) * (1 + 1/q^(n-1))
    double ub_eps = 0.0;  // q + q^n * (1 - e^-delta)
};

/// Requires q^(n-1) >= 2: the bound rests on 1 - x >= e^(-x-x^2), which
/// holds only for x = 1/q^(n-1) <= 1/2.
inline EpsilonBounds epsilon_bounds(std::uint32_t q, unsigned n, double eps) {
    if (q < 2 || n < 1) throw std::invalid_argument("need q >= 2, n >= 1");
    if (!(eps > 0.0) || eps > 1.0) throw std::invalid_argument("need 0 < eps <= 1");
    const double cosets = std::pow(static_cast<double>(q), static_cast<double>(n - 1));
    if (cosets < 2.0)
        throw std::invalid_argument("q^(n-1) = " + std::to_string(static_cast<std::uint64_t>(cosets)) +
                                    " < 2: outside the domain of 1 - x >= e^(-x-x^2)");
    EpsilonBounds out;
    out.eps = eps;
    const double qn = std::pow(static_cast<double>(q), static_cast<double>(n));
    out.m_real = eps * (qn - 1.0) / (q - 1.0);
    out.delta = q * eps / (q - 1.0) * (1.0 + 1.0 / cosets);
    out.ub_eps = q + qn * (1.0 - std::exp(-out.delta));
    return out;
}

/// Every size bound for one (q, n, M) instance. Field names match the
/// CLI/CSV output keys.
struct BoundsReport {
    std::uint32_t q = 0;
    unsigned n = 0;
    std::uint64_t m = 0;
    double lb_paper = 0.0;          // lower_bound_sqrt, as printed
    std::uint64_t lb_integer = 0;   // rigorous integer-t variant
    double theta_m = 0.0;           // expected random-union size, double projection
    std::uint64_t ub_existence = 0; // floor of the exact expected size
    double ub_paper = 0.0;          // q + q^n*(1 - a^(M-1))
    bool lb_paper_overshoot = false;  // lb_paper > lb_integer; print kLbPaperCaveat
    std::optional<EpsilonBounds> eps;
};

inline BoundsReport bounds_report(std::uint32_t q, unsigned n, std::uint64_t m,
                                  std::optional<double> eps = std::nullopt) {
    BoundsReport r;
    r.q = q;
    r.n = n;
    r.m = m;
    r.lb_paper = lower_bound_sqrt(q, m);
    r.lb_integer = lower_bound_integer(q, m);
    const Rational expected = expected_union_size_closed(q, n, static_cast<std::uint32_t>(m));
    r.theta_m = expected.to_double();
    r.ub_existence = expected.floor().convert_to<std::uint64_t>();
    r.ub_paper = upper_bound(q, n, m);
    r.lb_paper_overshoot = r.lb_paper > static_cast<double>(r.lb_integer);
    if (eps) r.eps = epsilon_bounds(q, n, *eps);
    return r;
}

}  // namespace kakeya
