#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include <kakeya/exact.hpp>
#include <kakeya/rng.hpp>
#include <kakeya/verify.hpp>

using namespace kakeya;

namespace {

PointSet witness_union(const Space& s, const ExactResult& res) {
    PointSet u(s.size());
    for (const Line& l : res.witness)
        for (point_t p : l.points) u.insert(p);
    return u;
}

// Test-side oracle: minimum union size over every coset tuple, no pruning,
// no translation fixing. Independent of the solver machinery.
std::uint64_t brute_force_min(const Space& s, const std::vector<Direction>& classes) {
    std::vector<std::vector<Line>> cosets;
    for (const Direction& d : classes) cosets.push_back(s.coset_lines(d));
    std::vector<std::size_t> idx(classes.size(), 0);
    std::uint64_t best = UINT64_MAX;
    PointSet u(s.size());
    for (;;) {
        u.clear();
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (point_t p : cosets[i][idx[i]].points) u.insert(p);
        best = std::min<std::uint64_t>(best, u.size());
        std::size_t d = 0;
        while (d < idx.size() && ++idx[d] == cosets[d].size()) idx[d++] = 0;
        if (d == idx.size()) break;
    }
    return best;
}

}  // namespace

TEST_CASE("GF(2)^2, all directions") {
    Space s(Field::make(2, 1), 2);
    ExactResult res = exact_min_kakeya(s, s.directions());
    CHECK(res.status == SolveStatus::optimal);
    CHECK(res.min_size == 3);
    CHECK(witness_union(s, res).to_sorted_codes() == std::vector<point_t>{0, 1, 2});
    REQUIRE(res.witness.size() == 3);
    CHECK(res.witness[2].points == std::vector<point_t>{1, 2});  // direction (1,1)
    CHECK(is_kakeya(s, witness_union(s, res), s.directions()).ok);
}

TEST_CASE("GF(3)^2, all directions") {
    Space s(Field::make(3, 1), 2);
    ExactResult res = exact_min_kakeya(s, s.directions());
    CHECK(res.status == SolveStatus::optimal);
    CHECK(res.min_size == 7);
    CHECK(is_kakeya(s, witness_union(s, res), s.directions()).ok);
}

TEST_CASE("GF(2)^3, all directions") {
    Space s(Field::make(2, 1), 3);
    ExactResult res = exact_min_kakeya(s, s.directions());
    CHECK(res.status == SolveStatus::optimal);
    CHECK(res.min_size == 5);
    CHECK(is_kakeya(s, witness_union(s, res), s.directions()).ok);

    // the known 5-point witness: all 7 nonzero differences appear inside it
    PointSet hand(s.size());
    for (point_t c : {s.encode({0, 0, 0}), s.encode({1, 0, 0}), s.encode({0, 1, 0}), s.encode({0, 0, 1}),
                      s.encode({1, 1, 1})})
        hand.insert(c);
    CHECK(is_kakeya(s, hand, s.directions()).ok);
}

TEST_CASE("solver agrees with the unpruned enumeration oracle") {
    for (auto [p, m, n] : {std::tuple<std::uint32_t, std::uint32_t, unsigned>{2, 1, 2}, {3, 1, 2}, {2, 2, 2},
                           {2, 1, 3}}) {
        Space s(Field::make(p, m), n);
        const auto dirs = s.directions();
        const std::uint64_t expect = brute_force_min(s, dirs);
        ExactOptions opt;
        SECTION("fixed translation " + std::to_string(p) + "^" + std::to_string(m) + " n=" + std::to_string(n)) {
            REQUIRE(exact_min_kakeya(s, dirs, opt).min_size == expect);
        }
        SECTION("free translation " + std::to_string(p) + "^" + std::to_string(m) + " n=" + std::to_string(n)) {
            opt.fix_translation = false;
            REQUIRE(exact_min_kakeya(s, dirs, opt).min_size == expect);
        }
    }
}

TEST_CASE("larger planes match the classical minima") {
    // minimum over the full plane: q(q+1)/2 + (q-1)/2 for odd q, q(q+1)/2 for even q
    struct Case {
        std::uint32_t p, m;
        std::uint64_t expect;
    };
    for (const Case& c : {Case{7, 1, 31}, Case{2, 3, 36}}) {
        Space s(Field::make(c.p, c.m), 2);
        ExactResult res = exact_min_kakeya(s, s.directions());
        REQUIRE(res.status == SolveStatus::optimal);
        CHECK(res.min_size == c.expect);
        CHECK(is_kakeya(s, witness_union(s, res), s.directions()).ok);
    }
}

TEST_CASE("solver agrees with the oracle on random subset instances") {
    SplitMix64 gen(0x5b5e7ull);
    for (auto [p, m, n] : {std::tuple<std::uint32_t, std::uint32_t, unsigned>{3, 1, 2}, {2, 2, 2}, {5, 1, 2},
                           {2, 1, 3}}) {
        Space s(Field::make(p, m), n);
        const auto all = s.directions();
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Direction> subset;
            for (const Direction& d : all)
                if (uniform_below(gen, 2)) subset.push_back(d);
            if (subset.empty()) subset.push_back(all[0]);
            ExactResult res = exact_min_kakeya(s, subset);
            REQUIRE(res.status == SolveStatus::optimal);
            REQUIRE(res.min_size == brute_force_min(s, subset));
            REQUIRE(is_kakeya(s, witness_union(s, res), subset).ok);
        }
    }
}

TEST_CASE("single class needs exactly one line") {
    Space s(Field::make(5, 1), 2);
    ExactResult res = exact_min_kakeya(s, {s.direction_of({1, 2})});
    CHECK(res.min_size == 5);
    REQUIRE(res.witness.size() == 1);
    CHECK(res.witness[0].base == 0);  // origin coset is the lexicographic minimum
}

TEST_CASE("dimension one collapses to the whole field") {
    Space s(Field::make(7, 1), 1);
    ExactResult res = exact_min_kakeya(s, s.directions());
    CHECK(res.min_size == 7);
    CHECK(res.witness.size() == 1);
}

TEST_CASE("result is invariant under class permutation") {
    Space s(Field::make(3, 1), 2);
    auto dirs = s.directions();
    ExactResult base = exact_min_kakeya(s, dirs);
    std::mt19937 shuffler(3);
    for (int i = 0; i < 5; ++i) {
        std::shuffle(dirs.begin(), dirs.end(), shuffler);
        ExactResult res = exact_min_kakeya(s, dirs);
        REQUIRE(res.min_size == base.min_size);
        REQUIRE(res.nodes_explored == base.nodes_explored);
        for (std::size_t j = 0; j < res.witness.size(); ++j)
            REQUIRE(res.witness[j].points == base.witness[j].points);
    }
}

TEST_CASE("translation fixing changes neither minimum nor witness") {
    for (auto [p, n] : {std::pair<std::uint32_t, unsigned>{2, 2}, {3, 2}, {2, 3}}) {
        Space s(Field::make(p, 1), n);
        const auto dirs = s.directions();
        ExactOptions free_opt;
        free_opt.fix_translation = false;
        ExactResult fixed = exact_min_kakeya(s, dirs);
        ExactResult free = exact_min_kakeya(s, dirs, free_opt);
        REQUIRE(fixed.min_size == free.min_size);
        for (std::size_t j = 0; j < fixed.witness.size(); ++j)
            REQUIRE(fixed.witness[j].points == free.witness[j].points);
    }
}

TEST_CASE("threads do not change any reported field") {
    for (auto [p, n] : {std::pair<std::uint32_t, unsigned>{3, 2}, {2, 3}, {5, 2}}) {
        Space s(Field::make(p, 1), n);
        const auto dirs = s.directions();
        ExactResult one = exact_min_kakeya(s, dirs, {.threads = 1});
        for (unsigned threads : {2u, 4u, 8u}) {
            ExactResult many = exact_min_kakeya(s, dirs, {.threads = threads});
            REQUIRE(many.min_size == one.min_size);
            REQUIRE(many.nodes_explored == one.nodes_explored);
            REQUIRE(many.status == one.status);
            for (std::size_t j = 0; j < one.witness.size(); ++j)
                REQUIRE(many.witness[j].points == one.witness[j].points);
        }
    }
}

TEST_CASE("budget exhaustion is reported, never called optimal") {
    Space s(Field::make(3, 1), 2);
    const auto dirs = s.directions();
    ExactOptions opt;
    opt.node_budget = 2;
    ExactResult res = exact_min_kakeya(s, dirs, opt);
    CHECK(res.status == SolveStatus::budget_exceeded);
    CHECK(res.min_size >= 7);  // whatever incumbent exists is only an upper bound
    ExactOptions tiny;
    tiny.node_budget = 0;
    ExactResult none = exact_min_kakeya(s, dirs, tiny);
    CHECK(none.status == SolveStatus::budget_exceeded);
    CHECK(none.witness.empty());
    CHECK(none.min_size == s.size());
}

TEST_CASE("removing any witness line breaks the property or keeps the size") {
    for (auto [p, n] : {std::pair<std::uint32_t, unsigned>{2, 2}, {3, 2}, {2, 3}}) {
        Space s(Field::make(p, 1), n);
        const auto dirs = s.directions();
        ExactResult res = exact_min_kakeya(s, dirs);
        for (std::size_t drop = 0; drop < res.witness.size(); ++drop) {
            PointSet u(s.size());
            for (std::size_t j = 0; j < res.witness.size(); ++j) {
                if (j == drop) continue;
                for (point_t pt : res.witness[j].points) u.insert(pt);
            }
            const bool still = is_kakeya(s, u, dirs).ok;
            REQUIRE((!still || u.size() == res.min_size));
        }
    }
}

TEST_CASE("every point of an optimal set is necessary") {
    for (auto [p, n] : {std::pair<std::uint32_t, unsigned>{2, 2}, {3, 2}, {2, 3}}) {
        Space s(Field::make(p, 1), n);
        const auto dirs = s.directions();
        ExactResult res = exact_min_kakeya(s, dirs);
        PointSet full = witness_union(s, res);
        for (point_t pt : full.to_sorted_codes()) {
            PointSet reduced = full;
            reduced.erase(pt);
            REQUIRE_FALSE(is_kakeya(s, reduced, dirs).ok);
        }
    }
}

TEST_CASE("sandwich holds on solved instances") {
    struct Case {
        std::uint32_t p, m;
        unsigned n;
        std::uint64_t lo, hi;
    };
    for (const Case& c : {Case{2, 1, 2, 3, 3}, Case{3, 1, 2, 6, 7}, Case{2, 1, 3, 5, 6}}) {
        Space s(Field::make(c.p, c.m), c.n);
        SandwichReport rep = sandwich_check(s, s.directions());
        REQUIRE(rep.checked);
        CHECK(rep.ok);
        CHECK(rep.bounds.lb_integer == c.lo);
        CHECK(rep.bounds.ub_existence == c.hi);
        CHECK(rep.exact.min_size >= c.lo);
        CHECK(rep.exact.min_size <= c.hi);
    }
}

TEST_CASE("sandwich propagates budget exhaustion") {
    Space s(Field::make(3, 1), 2);
    ExactOptions opt;
    opt.node_budget = 1;
    SandwichReport rep = sandwich_check(s, s.directions(), opt);
    CHECK_FALSE(rep.checked);
    CHECK_FALSE(rep.ok);
}
