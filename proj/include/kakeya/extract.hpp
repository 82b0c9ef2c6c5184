#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "rational.hpp"
#include "space.hpp"

namespace kakeya {

/// Reduction of a vector set T to its pairwise non-equivalent direction
/// classes. `m_paper` is #T/(q-1), which the size bounds assume to be the
/// class count; `exact_flag` says whether that assumption actually holds
/// (every class fully represented in T). Callers pick which M to plug into
/// the bound formulas.
struct Extraction {
    std::vector<Direction> classes;         // sorted by representative code
    std::vector<std::uint32_t> class_sizes; // members of T per class, parallel to `classes`
    Rational m_paper;                       // #T / (q - 1)
    std::uint32_t m_exact = 0;              // number of distinct classes
    bool exact_flag = false;                // true iff every class_size == q - 1
};

/// Deterministic: the result depends only on T as a set, not on its order.
/// Rejects zero vectors and duplicates.
inline Extraction extract_directions(const Space& space, const std::vector<Vector>& T) {
    std::set<point_t> seen;
    std::map<point_t, std::uint32_t> by_class;  // canonical rep code -> count
    for (const Vector& v : T) {
        const point_t code = space.encode(v);
        if (code == 0) throw std::invalid_argument("zero vector in T");
        if (!seen.insert(code).second) throw std::invalid_argument("duplicate vector in T");
        ++by_class[space.direction_of(v).code];
    }
    Extraction out;
    out.classes.reserve(by_class.size());
    out.class_sizes.reserve(by_class.size());
    const std::uint32_t full = space.field().q() - 1;
    out.exact_flag = true;
    for (const auto& [code, count] : by_class) {
        out.classes.push_back(Direction{space.decode(code), code});
        out.class_sizes.push_back(count);
        if (count != full) out.exact_flag = false;
    }
    out.m_exact = static_cast<std::uint32_t>(out.classes.size());
    out.m_paper = Rational(T.size(), full);
    return out;
}

}  // namespace kakeya
