#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kakeya {

/// Field element code: an integer in [0, q) whose base-p digits are the
/// coefficients of the representing polynomial (digit i = coefficient of x^i).
using elem_t = std::uint32_t;

/// Largest supported field order.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

/// Orders up to this get dense add/mul/inv tables at construction.
inline constexpr std::uint32_t kFieldTableLimit = 256;

namespace poly {

// Polynomials over GF(p) as coefficient vectors, constant term first,
// trailing zeros trimmed (zero polynomial = empty vector).

inline std::vector<std::uint32_t> from_code(std::uint64_t code, std::uint32_t p) {
    std::vector<std::uint32_t> c;
    while (code != 0) {
        c.push_back(static_cast<std::uint32_t>(code % p));
        code /= p;
    }
    return c;
}

inline void trim(std::vector<std::uint32_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a by monic divisor b.
inline std::vector<std::uint32_t> mod_monic(std::vector<std::uint32_t> a,
                                            const std::vector<std::uint32_t>& b,
                                            std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const std::uint32_t c = a.back();  // leading coefficient, b monic
        const std::size_t shift = a.size() - 1 - db;
        if (c != 0) {
            for (std::size_t i = 0; i <= db; ++i) {
                std::uint32_t& t = a[shift + i];
                t = (t + p - static_cast<std::uint32_t>(std::uint64_t(c) * b[i] % p)) % p;
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

// Exhaustive trial division by every monic polynomial of degree 1..deg/2.
inline bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t lead = 1;
        for (std::size_t i = 0; i < d; ++i) lead *= p;
        for (std::uint64_t r = 0; r < lead; ++r) {
            std::vector<std::uint32_t> g = from_code(lead + r, p);
            if (mod_monic(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace poly

/// Exact arithmetic in GF(p^m) for p prime and p^m <= 2^16.
///
/// The modulus is the monic irreducible polynomial of degree m over GF(p)
/// with the smallest code, where a polynomial's code is the base-p integer
/// whose digit i is the coefficient of x^i. That choice is reproducible from
/// scratch with no external tables; repeated construction is bit-identical.
/// For m = 1 it degenerates to the polynomial x and arithmetic mod p.
///
/// Immutable after construction; all operations are pure and safe to call
/// concurrently.
class Field {
public:
    static Field make(std::uint32_t p, std::uint32_t m) { return Field(p, m); }

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }

    /// Modulus coefficients, constant term first; length m+1, leading 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    elem_t add(elem_t a, elem_t b) const {
        check(a);
        check(b);
        return tabled_ ? add_tab_[std::size_t(a) * q_ + b] : add_raw(a, b);
    }

    elem_t neg(elem_t a) const {
        check(a);
        return tabled_ ? neg_tab_[a] : neg_raw(a);
    }

    elem_t sub(elem_t a, elem_t b) const { return add(a, neg(b)); }

    elem_t mul(elem_t a, elem_t b) const {
        check(a);
        check(b);
        return tabled_ ? mul_tab_[std::size_t(a) * q_ + b] : mul_raw(a, b);
    }

    elem_t inv(elem_t a) const {
        check(a);
        if (a == 0) throw std::domain_error("GF(" + std::to_string(q_) + "): inverse of 0");
        return tabled_ ? inv_tab_[a] : pow(a, q_ - 2);
    }

    /// Square-and-multiply exponentiation.
    elem_t pow(elem_t a, std::uint64_t e) const {
        check(a);
        elem_t r = 1;
        elem_t base = a;
        while (e != 0) {
            if (e & 1) r = tabled_ ? mul_tab_[std::size_t(r) * q_ + base] : mul_raw(r, base);
            e >>= 1;
            if (e != 0) base = tabled_ ? mul_tab_[std::size_t(base) * q_ + base] : mul_raw(base, base);
        }
        return r;
    }

private:
    Field(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
        if (p < 2 || !is_prime(p))
            throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
        if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            q *= p;
            if (q > kMaxFieldOrder)
                throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(m) +
                                            " exceeds ceiling " + std::to_string(kMaxFieldOrder));
        }
        q_ = static_cast<std::uint32_t>(q);
        modulus_ = smallest_irreducible();
        if (q_ <= kFieldTableLimit) build_tables();
    }

    static bool is_prime(std::uint32_t p) {
        for (std::uint32_t d = 2; std::uint64_t(d) * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    // Scan monic degree-m polynomials in code order; the first irreducible
    // one wins. Irreducible density is ~1/m, so the scan is short.
    std::vector<std::uint32_t> smallest_irreducible() const {
        std::uint64_t lead = 1;
        for (std::uint32_t i = 0; i < m_; ++i) lead *= p_;
        for (std::uint64_t r = 0; r < lead; ++r) {
            std::vector<std::uint32_t> f = poly::from_code(lead + r, p_);
            if (poly::is_irreducible(f, p_)) return f;
        }
        throw std::logic_error("no irreducible polynomial found");  // unreachable
    }

    void check(elem_t a) const {
        if (a >= q_)
            throw std::out_of_range("element code " + std::to_string(a) + " not in [0, " + std::to_string(q_) + ")");
    }

    elem_t add_raw(elem_t a, elem_t b) const {
        elem_t r = 0, place = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            r += (a % p_ + b % p_) % p_ * place;
            a /= p_;
            b /= p_;
            place *= p_;
        }
        return r;
    }

    elem_t neg_raw(elem_t a) const {
        elem_t r = 0, place = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            r += (p_ - a % p_) % p_ * place;
            a /= p_;
            place *= p_;
        }
        return r;
    }

    elem_t mul_raw(elem_t a, elem_t b) const {
        // Schoolbook product of digit vectors, then reduction by the monic modulus.
        std::uint32_t da[17] = {0}, db[17] = {0}, prod[33] = {0};
        for (std::uint32_t i = 0; i < m_; ++i) {
            da[i] = a % p_;
            a /= p_;
            db[i] = b % p_;
            b /= p_;
        }
        for (std::uint32_t i = 0; i < m_; ++i) {
            if (da[i] == 0) continue;
            for (std::uint32_t j = 0; j < m_; ++j)
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_);
        }
        for (std::uint32_t k = 2 * m_ - 2; k >= m_; --k) {
            const std::uint32_t c = prod[k];
            if (c == 0) continue;
            prod[k] = 0;
            for (std::uint32_t j = 0; j < m_; ++j) {
                std::uint32_t& t = prod[k - m_ + j];
                t = (t + p_ - static_cast<std::uint32_t>(std::uint64_t(c) * modulus_[j] % p_)) % p_;
            }
        }
        elem_t r = 0, place = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            r += prod[i] * place;
            place *= p_;
        }
        return r;
    }

    void build_tables() {
        add_tab_.resize(std::size_t(q_) * q_);
        mul_tab_.resize(std::size_t(q_) * q_);
        neg_tab_.resize(q_);
        inv_tab_.resize(q_);
        for (elem_t a = 0; a < q_; ++a) {
            neg_tab_[a] = neg_raw(a);
            for (elem_t b = 0; b < q_; ++b) {
                add_tab_[std::size_t(a) * q_ + b] = add_raw(a, b);
                mul_tab_[std::size_t(a) * q_ + b] = mul_raw(a, b);
            }
        }
        tabled_ = true;  // pow/inv below may now use mul_tab_
        for (elem_t a = 1; a < q_; ++a) inv_tab_[a] = pow(a, q_ - 2);
        inv_tab_[0] = 0;  // never served; inv(0) throws
    }

    std::uint32_t p_, m_, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<elem_t> add_tab_, mul_tab_, neg_tab_, inv_tab_;
    bool tabled_ = false;
};

}  // namespace kakeya
