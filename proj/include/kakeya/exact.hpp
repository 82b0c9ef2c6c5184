#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "bounds.hpp"
#include "space.hpp"

namespace kakeya {

enum class SolveStatus { optimal, budget_exceeded };

inline const char* to_string(SolveStatus s) {
    return s == SolveStatus::optimal ? "optimal" : "budget_exceeded";
}

struct ExactOptions {
    std::uint64_t node_budget = std::numeric_limits<std::uint64_t>::max();
    /// Pin the first class to the coset through the origin. Translations act
    /// transitively on the cosets of one direction and preserve sizes, so
    /// this drops a factor q^(n-1) without changing the result.
    bool fix_translation = true;
    unsigned threads = 1;
};

/// Exact minimum together with the witness that realizes it. On
/// budget_exceeded, `min_size` is the best incumbent (an upper bound, never
/// presented as optimal); if not even one complete assignment was reached it
/// falls back to q^n (the full space) with an empty witness.
struct ExactResult {
    std::uint64_t min_size = 0;
    std::vector<Line> witness;  // one line per class, canonical class order
    std::uint64_t nodes_explored = 0;
    SolveStatus status = SolveStatus::optimal;
};

namespace detail {

struct SubtreeResult {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint32_t> choice;  // coset index per class, full depth
    std::uint64_t nodes = 0;
    bool exceeded = false;
};

// One top-level subtree: the coset choices in `fixed` are pinned, the
// remaining classes are searched depth-first in base order with size-only
// pruning (abandon a partial union once it is at least the incumbent).
// Incumbents are local to the subtree, so the outcome and the node count
// are independent of how subtrees are scheduled across threads. The search
// is iterative; depth equals the class count, never the node count.
class SubtreeSearch {
public:
    SubtreeSearch(const Space& space, const std::vector<std::vector<Line>>& cosets, std::uint64_t budget)
        : cosets_(cosets), budget_(budget), used_(space.size()), added_(cosets.size()) {
        for (auto& a : added_) a.reserve(space.field().q());
        choice_.resize(cosets.size());
    }

    SubtreeResult run(const std::vector<std::uint32_t>& fixed) {
        result_ = SubtreeResult{};
        used_.clear();
        for (std::size_t d = 0; d < fixed.size(); ++d) {
            if (!charge_node()) return result_;
            apply(d, fixed[d]);
        }
        const std::size_t start = fixed.size();
        if (start == cosets_.size()) {
            result_.best = used_.size();
            result_.choice = choice_;
            return result_;
        }

        std::size_t d = start;
        std::uint32_t j = 0;
        for (;;) {
            if (j == cosets_[d].size()) {  // depth exhausted: backtrack
                if (d == start) break;
                --d;
                undo(d);
                j = choice_[d] + 1;
                continue;
            }
            if (!charge_node()) break;
            apply(d, j);
            if (used_.size() < result_.best) {
                if (d + 1 == cosets_.size()) {
                    result_.best = used_.size();
                    result_.choice = choice_;
                    undo(d);
                    ++j;
                } else {
                    ++d;
                    j = 0;
                }
            } else {
                undo(d);
                ++j;
            }
        }
        return result_;
    }

private:
    void apply(std::size_t d, std::uint32_t j) {
        choice_[d] = j;
        auto& added = added_[d];
        added.clear();
        for (point_t p : cosets_[d][j].points)
            if (used_.insert(p)) added.push_back(p);
    }

    void undo(std::size_t d) {
        for (point_t p : added_[d]) used_.erase(p);
    }

    bool charge_node() {
        if (result_.nodes >= budget_) {
            result_.exceeded = true;
            return false;
        }
        ++result_.nodes;
        return true;
    }

    const std::vector<std::vector<Line>>& cosets_;
    std::uint64_t budget_;
    PointSet used_;
    std::vector<std::vector<point_t>> added_;
    std::vector<std::uint32_t> choice_;
    SubtreeResult result_;
};

}  // namespace detail

/// Search-space size estimate (coset choices per free class), saturating.
inline double exact_search_space(const Space& space, std::size_t class_count, bool fix_translation) {
    const double per_class = static_cast<double>(space.size()) / space.field().q();
    double est = 1.0;
    for (std::size_t i = fix_translation ? 1 : 0; i < class_count; ++i) est *= per_class;
    return est;
}

/// Exact minimum size of a set containing one full line per class, by
/// depth-first search over one coset choice per class in canonical order
/// (classes by representative code, cosets by base). The incumbent is
/// updated on strict improvement only, so the witness is the
/// lexicographically smallest optimal coset tuple. The subtrees under the
/// first unfixed class are searched independently (each with its own
/// incumbent and an equal slice of the node budget) and merged by size then
/// tuple order; results are therefore identical for every thread count.
inline ExactResult exact_min_kakeya(const Space& space, const std::vector<Direction>& classes,
                                    const ExactOptions& opt = {}) {
    const std::vector<Direction> sorted = sorted_distinct_classes(classes);
    const std::size_t depth = sorted.size();

    std::vector<std::vector<Line>> cosets;
    cosets.reserve(depth);
    for (const Direction& d : sorted) cosets.push_back(space.coset_lines(d));

    // Subtree tasks: fixed first coset (when fix_translation) plus one choice
    // of the next class; with a single class the task list is that class's
    // cosets (or just the pinned one).
    std::vector<std::vector<std::uint32_t>> tasks;
    if (opt.fix_translation) {
        if (depth == 1) {
            tasks.push_back({0});
        } else {
            for (std::uint32_t j = 0; j < cosets[1].size(); ++j) tasks.push_back({0, j});
        }
    } else {
        for (std::uint32_t j = 0; j < cosets[0].size(); ++j) tasks.push_back({j});
    }

    const std::uint64_t unlimited = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t slice =
        opt.node_budget == unlimited ? unlimited : (opt.node_budget + tasks.size() - 1) / tasks.size();

    std::vector<detail::SubtreeResult> results(tasks.size());
    unsigned threads = opt.threads < 1 ? 1 : opt.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, tasks.size()));
    if (threads <= 1) {
        detail::SubtreeSearch search(space, cosets, slice);
        for (std::size_t t = 0; t < tasks.size(); ++t) results[t] = search.run(tasks[t]);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            detail::SubtreeSearch search(space, cosets, slice);
            for (;;) {
                const std::size_t t = next.fetch_add(1);
                if (t >= tasks.size()) break;
                results[t] = search.run(tasks[t]);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Deterministic reduction: smallest size wins, ties to the earliest
    // subtree; within a subtree the choice is already lexicographically
    // smallest.
    ExactResult out;
    const detail::SubtreeResult* best = nullptr;
    for (const detail::SubtreeResult& r : results) {
        out.nodes_explored += r.nodes;
        if (r.exceeded) out.status = SolveStatus::budget_exceeded;
        if (!r.choice.empty() && (best == nullptr || r.best < best->best)) best = &r;
    }
    if (best == nullptr) {
        out.min_size = space.size();
        out.status = SolveStatus::budget_exceeded;
        return out;
    }
    out.min_size = best->best;
    out.witness.reserve(depth);
    for (std::size_t d = 0; d < depth; ++d) out.witness.push_back(cosets[d][best->choice[d]]);
    return out;
}

/// Joint consistency of the bound chain on one exactly solved instance:
/// lb_integer <= min_size <= ub_existence = floor(theta_M) <= ceil(ub_paper).
/// lb_paper is reported alongside but never asserted.
struct SandwichReport {
    BoundsReport bounds;
    ExactResult exact;
    bool checked = false;  // false when the solve did not finish
    bool ok = false;
};

inline SandwichReport sandwich_check(const Space& space, const std::vector<Direction>& classes,
                                     const ExactOptions& opt = {}) {
    SandwichReport rep;
    rep.exact = exact_min_kakeya(space, classes, opt);
    rep.bounds = bounds_report(space.field().q(), space.dim(), classes.size());
    if (rep.exact.status == SolveStatus::optimal) {
        rep.checked = true;
        const std::uint64_t ub_ceil =
            upper_bound_exact(rep.bounds.q, rep.bounds.n, rep.bounds.m).ceil().convert_to<std::uint64_t>();
        rep.ok = rep.bounds.lb_integer <= rep.exact.min_size && rep.exact.min_size <= rep.bounds.ub_existence &&
                 rep.bounds.ub_existence <= ub_ceil;
    }
    return rep;
}

}  // namespace kakeya
