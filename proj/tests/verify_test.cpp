#include <catch2/catch_amalgamated.hpp>

#include <kakeya/random_build.hpp>
#include <kakeya/rng.hpp>
#include <kakeya/verify.hpp>

using namespace kakeya;

namespace {

PointSet set_of(const Space& s, std::initializer_list<point_t> codes) {
    PointSet out(s.size());
    for (point_t c : codes) out.insert(c);
    return out;
}

std::vector<Vector> all_nonzero(const Space& s) {
    std::vector<Vector> out;
    for (point_t c = 1; c < s.size(); ++c) out.push_back(s.decode(c));
    return out;
}

}  // namespace

TEST_CASE("three points cover all directions of GF(2)^2") {
    Space s(Field::make(2, 1), 2);
    VerifyResult res = is_kakeya(s, set_of(s, {0, 1, 2}), all_nonzero(s));
    CHECK(res.ok);
    CHECK(res.missing.empty());
    REQUIRE(res.classes.size() == 3);
    for (const auto& w : res.witness) REQUIRE(w.has_value());
    CHECK(res.witness[0]->points == std::vector<point_t>{0, 1});
    CHECK(res.witness[1]->points == std::vector<point_t>{0, 2});
    CHECK(res.witness[2]->points == std::vector<point_t>{1, 2});
}

TEST_CASE("a single line misses the other directions") {
    Space s(Field::make(2, 1), 2);
    VerifyResult res = is_kakeya(s, set_of(s, {0, 1}), all_nonzero(s));
    CHECK_FALSE(res.ok);
    REQUIRE(res.missing.size() == 2);
    CHECK(res.missing[0].rep == Vector{0, 1});
    CHECK(res.missing[1].rep == Vector{1, 1});
}

TEST_CASE("the full space passes for any directions") {
    for (auto [p, n] : {std::pair<std::uint32_t, unsigned>{3, 2}, {2, 3}, {5, 2}}) {
        Space s(Field::make(p, 1), n);
        PointSet full(s.size());
        for (point_t c = 0; c < s.size(); ++c) full.insert(c);
        CHECK(is_kakeya(s, full, all_nonzero(s)).ok);
    }
}

TEST_CASE("witness is the smallest-base containing coset") {
    Space s(Field::make(2, 1), 2);
    // both cosets of direction (1,0) present: witness must be the base-0 one
    VerifyResult res = is_kakeya(s, set_of(s, {0, 1, 2, 3}), {s.direction_of({1, 0})});
    REQUIRE(res.ok);
    CHECK(res.witness[0]->base == 0);
}

TEST_CASE("zero vectors are rejected") {
    Space s(Field::make(3, 1), 2);
    PointSet k(s.size());
    CHECK_THROWS_AS(is_kakeya(s, k, std::vector<Vector>{{0, 0}}), std::invalid_argument);
}

TEST_CASE("universe mismatch is rejected") {
    Space s(Field::make(3, 1), 2);
    PointSet wrong(8);
    CHECK_THROWS_AS(is_kakeya(s, wrong, all_nonzero(s)), std::invalid_argument);
}

TEST_CASE("monotone under supersets") {
    Space s(Field::make(3, 1), 2);
    const auto dirs = s.directions();
    Construction c = build_random_kakeya(s, dirs, 11);
    REQUIRE(is_kakeya(s, c.set, dirs).ok);
    PointSet grown = c.set;
    SplitMix64 gen(3);
    for (int i = 0; i < 3; ++i) grown.insert(uniform_below(gen, s.size()));
    CHECK(is_kakeya(s, grown, dirs).ok);
}

TEST_CASE("random constructions always verify") {
    for (auto [p, m, n] : {std::tuple<std::uint32_t, std::uint32_t, unsigned>{2, 1, 2}, {3, 1, 2}, {2, 2, 2},
                           {5, 1, 2}, {2, 1, 4}}) {
        Space s(Field::make(p, m), n);
        const auto dirs = s.directions();
        for (std::uint64_t seed = 0; seed < 25; ++seed) {
            Construction c = build_random_kakeya(s, dirs, seed);
            REQUIRE(is_kakeya(s, c.set, dirs).ok);
        }
    }
}

TEST_CASE("duplicate directions in T collapse to one class") {
    Space s(Field::make(3, 1), 2);
    VerifyResult res = is_kakeya(s, set_of(s, {0, 1, 2}), std::vector<Vector>{{1, 0}, {2, 0}});
    REQUIRE(res.classes.size() == 1);
    CHECK(res.ok);
}
