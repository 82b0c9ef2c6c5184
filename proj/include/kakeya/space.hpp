#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace kakeya {

/// Coordinate vector in F^n, entries are field element codes.
using Vector = std::vector<elem_t>;

/// Dense index of a point of F^n: sum_i coords[i] * q^i (coordinate 0 least
/// significant).
using point_t = std::uint32_t;

/// Largest supported point-space size q^n.
inline constexpr std::uint64_t kMaxSpaceSize = 1u << 24;

/// Canonical representative of a class of nonzero vectors under nonzero
/// scaling: the first nonzero coordinate equals 1. Two vectors are scalar
/// multiples of each other iff their canonical forms are equal, so `code`
/// doubles as class identity and class ordering.
struct Direction {
    Vector rep;
    point_t code = 0;

    friend bool operator==(const Direction& a, const Direction& b) { return a.code == b.code; }
    friend bool operator<(const Direction& a, const Direction& b) { return a.code < b.code; }
};

/// A full line {y + a*x : a in F}: q distinct points, stored sorted.
/// `base` is the smallest point code on the line, so equal point sets
/// compare equal as (direction, base) pairs.
struct Line {
    Direction dir;
    point_t base = 0;
    std::vector<point_t> points;
};

/// Dense bit-indexed subset of [0, universe) with a live size counter.
class PointSet {
public:
    explicit PointSet(point_t universe)
        : universe_(checked_universe(universe)), words_((std::size_t(universe) + 63) / 64, 0) {}

    point_t universe() const { return universe_; }
    std::uint32_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(point_t p) const {
        check(p);
        return (words_[p >> 6] >> (p & 63)) & 1;
    }

    /// Returns true when p was not already present.
    bool insert(point_t p) {
        check(p);
        std::uint64_t& w = words_[p >> 6];
        const std::uint64_t bit = 1ull << (p & 63);
        if (w & bit) return false;
        w |= bit;
        ++count_;
        return true;
    }

    void erase(point_t p) {
        check(p);
        std::uint64_t& w = words_[p >> 6];
        const std::uint64_t bit = 1ull << (p & 63);
        if (w & bit) {
            w &= ~bit;
            --count_;
        }
    }

    void clear() {
        std::fill(words_.begin(), words_.end(), 0);
        count_ = 0;
    }

    std::vector<point_t> to_sorted_codes() const {
        std::vector<point_t> out;
        out.reserve(count_);
        for (point_t p = 0; p < universe_; ++p)
            if (contains(p)) out.push_back(p);
        return out;
    }

private:
    void check(point_t p) const {
        if (p >= universe_) throw std::out_of_range("point code " + std::to_string(p) + " outside universe");
    }

    static point_t checked_universe(point_t universe) {
        if (std::uint64_t(universe) > kMaxSpaceSize)
            throw std::invalid_argument("point universe " + std::to_string(universe) + " exceeds ceiling " +
                                        std::to_string(kMaxSpaceSize));
        return universe;
    }

    point_t universe_;
    std::vector<std::uint64_t> words_;
    std::uint32_t count_ = 0;
};

/// Sort classes by representative code and reject duplicates (equal codes
/// mean equivalent directions).
inline std::vector<Direction> sorted_distinct_classes(std::vector<Direction> classes) {
    if (classes.empty()) throw std::invalid_argument("direction class list is empty");
    std::sort(classes.begin(), classes.end());
    for (std::size_t i = 1; i < classes.size(); ++i)
        if (classes[i - 1].code == classes[i].code)
            throw std::invalid_argument("direction classes are not pairwise non-equivalent");
    return classes;
}

/// The point space F^n over a fixed field: encoding, direction classes,
/// lines, and the coset decomposition. Immutable and freely sharable.
class Space {
public:
    Space(Field field, unsigned n) : field_(std::move(field)), n_(n) {
        if (n < 1) throw std::invalid_argument("dimension must be >= 1");
        std::uint64_t s = 1;
        for (unsigned i = 0; i < n; ++i) {
            s *= field_.q();
            if (s > kMaxSpaceSize)
                throw std::invalid_argument("space size " + std::to_string(field_.q()) + "^" + std::to_string(n) +
                                            " exceeds ceiling " + std::to_string(kMaxSpaceSize));
        }
        size_ = static_cast<point_t>(s);
    }

    const Field& field() const { return field_; }
    unsigned dim() const { return n_; }
    point_t size() const { return size_; }

    point_t encode(const Vector& v) const {
        if (v.size() != n_) throw std::invalid_argument("vector has wrong dimension");
        point_t code = 0, place = 1;
        for (unsigned i = 0; i < n_; ++i) {
            if (v[i] >= field_.q())
                throw std::out_of_range("coordinate " + std::to_string(v[i]) + " not in [0, " +
                                        std::to_string(field_.q()) + ")");
            code += v[i] * place;
            place *= field_.q();
        }
        return code;
    }

    Vector decode(point_t code) const {
        if (code >= size_) throw std::out_of_range("point code out of range");
        Vector v(n_);
        for (unsigned i = 0; i < n_; ++i) {
            v[i] = code % field_.q();
            code /= field_.q();
        }
        return v;
    }

    static bool is_zero(const Vector& v) {
        return std::all_of(v.begin(), v.end(), [](elem_t c) { return c == 0; });
    }

    /// Scale so the first nonzero coordinate becomes 1. Rejects the zero
    /// vector: it spans no line.
    Direction direction_of(const Vector& v) const {
        encode(v);  // validates dimension and ranges
        unsigned lead = 0;
        while (lead < n_ && v[lead] == 0) ++lead;
        if (lead == n_) throw std::invalid_argument("zero vector has no direction");
        const elem_t a = field_.inv(v[lead]);
        Vector rep(n_);
        for (unsigned i = 0; i < n_; ++i) rep[i] = field_.mul(a, v[i]);
        point_t code = encode(rep);
        return Direction{std::move(rep), code};
    }

    bool equivalent(const Vector& u, const Vector& v) const {
        return direction_of(u).code == direction_of(v).code;
    }

    /// The line {y + a*x : a in F} as sorted point codes. x must be nonzero.
    Line line(const Vector& x, const Vector& y) const {
        Direction dir = direction_of(x);
        if (y.size() != n_) throw std::invalid_argument("vector has wrong dimension");
        const std::uint32_t q = field_.q();
        std::vector<point_t> pts;
        pts.reserve(q);
        Vector pt(n_);
        for (elem_t a = 0; a < q; ++a) {
            for (unsigned i = 0; i < n_; ++i) pt[i] = field_.add(y[i], field_.mul(a, x[i]));
            pts.push_back(encode(pt));
        }
        std::sort(pts.begin(), pts.end());
        point_t base = pts.front();
        return Line{std::move(dir), base, std::move(pts)};
    }

    /// All (q^n - 1)/(q - 1) direction classes, sorted by representative code.
    std::vector<Direction> directions() const {
        std::vector<Direction> out;
        out.reserve((size_ - 1) / (field_.q() - 1) + 1);
        for (point_t code = 1; code < size_; ++code) {
            Vector v = decode(code);
            unsigned lead = 0;
            while (v[lead] == 0) ++lead;
            if (v[lead] == 1) out.push_back(Direction{std::move(v), code});
        }
        return out;
    }

    /// The q^(n-1) pairwise-disjoint lines of one direction, covering F^n,
    /// sorted by base. The base of each line is its smallest point code.
    std::vector<Line> coset_lines(const Direction& d) const {
        const std::uint32_t q = field_.q();
        std::vector<Line> out;
        out.reserve(size_ / q);
        std::vector<bool> covered(size_, false);
        for (point_t code = 0; code < size_; ++code) {
            if (covered[code]) continue;
            Line l = line(d.rep, decode(code));
            for (point_t p : l.points) covered[p] = true;
            out.push_back(std::move(l));
        }
        return out;
    }

private:
    Field field_;
    unsigned n_;
    point_t size_ = 0;
};

}  // namespace kakeya
