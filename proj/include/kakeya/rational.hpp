#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kakeya {

using BigInt = boost::multiprecision::cpp_int;

/// Distinct prime factors by trial division (inputs stay below 2^16 here).
inline std::vector<std::uint32_t> prime_factors(std::uint32_t v) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

/// Exact rational on top of cpp_int, canonical by construction (den > 0,
/// coprime). The size formulas produce values over denominators that are
/// powers of q, so bulk normalization works by dividing out q's few prime
/// factors; a general gcd pass at 10^4-bit scale would dominate the whole
/// computation. Deliberately small surface: the recurrences run on integers
/// and only the finished values live here.
class Rational {
public:
    Rational() = default;
    Rational(int v) : num_(v) {}
    Rational(std::int64_t v) : num_(v) {}
    Rational(std::uint64_t v) : num_(v) {}
    Rational(std::uint32_t v) : num_(v) {}
    Rational(BigInt v) : num_(std::move(v)) {}

    /// Fully normalizing constructor (general gcd; meant for small values).
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw std::invalid_argument("zero denominator");
        if (den_ < 0) {
            den_ = -den_;
            num_ = -num_;
        }
        const BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    /// Normalize num/den where every prime factor of den is listed in
    /// `den_primes`; reduction by valuation only.
    static Rational over_smooth_den(BigInt num, BigInt den, const std::vector<std::uint32_t>& den_primes) {
        Rational r;
        if (num == 0) return r;
        bool neg = false;
        if (den < 0) {
            den = -den;
            neg = true;
        }
        for (std::uint32_t p : den_primes) {
            while (den % p == 0 && num % p == 0) {
                den /= p;
                num /= p;
            }
        }
        r.num_ = neg ? BigInt(-num) : std::move(num);
        r.den_ = std::move(den);
        return r;
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    BigInt floor() const {
        BigInt q = num_ / den_;
        if (num_ < 0 && q * den_ != num_) --q;
        return q;
    }

    BigInt ceil() const {
        BigInt q = num_ / den_;
        if (num_ > 0 && q * den_ != num_) ++q;
        return q;
    }

    double to_double() const {
        if (num_ == 0) return 0.0;
        const BigInt mag = num_ < 0 ? BigInt(-num_) : num_;
        const std::size_t bn = boost::multiprecision::msb(mag);
        const std::size_t bd = boost::multiprecision::msb(den_);
        if (bn < 900 && bd < 900) return num_.convert_to<double>() / den_.convert_to<double>();
        // keep ~512 high bits of each side; the ratio error is ~2^-500
        const std::size_t keep = 512;
        const std::size_t drop = std::min(bn, bd) > keep ? std::min(bn, bd) - keep : 0;
        const BigInt n = num_ >> drop, d = den_ >> drop;
        return n.convert_to<double>() / d.convert_to<double>();
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return a.num_ * b.den_ < b.num_ * a.den_; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        os << r.num_;
        if (r.den_ != 1) os << '/' << r.den_;
        return os;
    }

private:
    BigInt num_ = 0;
    BigInt den_ = 1;
};

}  // namespace kakeya
