#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "space.hpp"

namespace kakeya {

/// Outcome of the defining-property check: per class either the first
/// (smallest-base) fully contained line, or membership in `missing`.
struct VerifyResult {
    bool ok = false;
    std::vector<Direction> classes;            // canonical order
    std::vector<std::optional<Line>> witness;  // parallel to `classes`
    std::vector<Direction> missing;
};

/// Does K contain a full line in every one of the given directions?
/// Scans the q^(n-1) cosets of each class in base order with early exit;
/// cost O(#classes * q^n).
inline VerifyResult is_kakeya(const Space& space, const PointSet& K, std::vector<Direction> classes) {
    if (K.universe() != space.size()) throw std::invalid_argument("point set universe does not match the space");
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

    VerifyResult out;
    out.ok = true;
    out.classes = std::move(classes);
    out.witness.resize(out.classes.size());
    std::vector<bool> covered;
    for (std::size_t i = 0; i < out.classes.size(); ++i) {
        covered.assign(space.size(), false);
        for (point_t code = 0; code < space.size(); ++code) {
            if (covered[code]) continue;
            if (!K.contains(code)) {
                // base not in K: still mark the coset so it is not re-derived
                Line l = space.line(out.classes[i].rep, space.decode(code));
                for (point_t p : l.points) covered[p] = true;
                continue;
            }
            Line l = space.line(out.classes[i].rep, space.decode(code));
            const bool inside = std::all_of(l.points.begin(), l.points.end(),
                                            [&](point_t p) { return K.contains(p); });
            if (inside) {
                out.witness[i] = std::move(l);
                break;
            }
            for (point_t p : l.points) covered[p] = true;
        }
        if (!out.witness[i]) {
            out.ok = false;
            out.missing.push_back(out.classes[i]);
        }
    }
    return out;
}

/// Same check with T given as raw vectors; reduces T to direction classes
/// first (a set containing a line for each class contains one for every
/// scalar multiple, by the substitution a -> a*b in the line parameter).
inline VerifyResult is_kakeya(const Space& space, const PointSet& K, const std::vector<Vector>& T) {
    std::vector<Direction> classes;
    classes.reserve(T.size());
    for (const Vector& v : T) classes.push_back(space.direction_of(v));
    return is_kakeya(space, K, std::move(classes));
}

}  // namespace kakeya
