#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include <kakeya/extract.hpp>
#include <kakeya/rng.hpp>

using namespace kakeya;

TEST_CASE("full nonzero set over GF(3)^2") {
    Space s(Field::make(3, 1), 2);
    std::vector<Vector> T;
    for (point_t c = 1; c < s.size(); ++c) T.push_back(s.decode(c));
    Extraction ex = extract_directions(s, T);
    CHECK(ex.m_exact == 4);
    CHECK(ex.exact_flag);
    CHECK(ex.m_paper == Rational(4));
    REQUIRE(ex.classes.size() == 4);
    CHECK(ex.classes[0].rep == Vector{1, 0});
    CHECK(ex.classes[1].rep == Vector{0, 1});
    CHECK(ex.classes[2].rep == Vector{1, 1});
    CHECK(ex.classes[3].rep == Vector{1, 2});
    for (std::uint32_t size : ex.class_sizes) CHECK(size == 2);
}

TEST_CASE("single vector over GF(2)^2") {
    Space s(Field::make(2, 1), 2);
    Extraction ex = extract_directions(s, {{1, 0}});
    CHECK(ex.m_exact == 1);
    CHECK(ex.m_paper == Rational(1));  // q-1 = 1
    CHECK(ex.exact_flag);
}

TEST_CASE("partial classes are reported fractionally") {
    Space s(Field::make(3, 1), 2);
    Extraction ex = extract_directions(s, {{1, 1}, {2, 2}, {1, 0}});
    CHECK(ex.m_exact == 2);
    CHECK_FALSE(ex.exact_flag);
    CHECK(ex.m_paper == Rational(3, 2));
    REQUIRE(ex.classes.size() == 2);
    CHECK(ex.classes[0].rep == Vector{1, 0});
    CHECK(ex.class_sizes[0] == 1);
    CHECK(ex.classes[1].rep == Vector{1, 1});
    CHECK(ex.class_sizes[1] == 2);
}

TEST_CASE("zero vectors and duplicates are rejected") {
    Space s(Field::make(3, 1), 2);
    CHECK_THROWS_AS(extract_directions(s, {{1, 1}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(extract_directions(s, {{1, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("every input vector maps to exactly one returned class") {
    for (auto [p, m, n] : {std::tuple<std::uint32_t, std::uint32_t, unsigned>{3, 1, 2}, {2, 2, 2}, {5, 1, 2}}) {
        Space s(Field::make(p, m), n);
        SplitMix64 gen(p * 100 + n);
        std::vector<Vector> T;
        for (point_t c = 1; c < s.size(); ++c)
            if (gen.next() % 2 == 0) T.push_back(s.decode(c));
        if (T.empty()) T.push_back(s.decode(1));
        Extraction ex = extract_directions(s, T);
        for (const Vector& v : T) {
            int hits = 0;
            for (const Direction& d : ex.classes)
                if (s.equivalent(v, d.rep)) ++hits;
            REQUIRE(hits == 1);
        }
        for (std::size_t i = 1; i < ex.classes.size(); ++i) {
            REQUIRE(ex.classes[i - 1].code < ex.classes[i].code);
            REQUIRE_FALSE(s.equivalent(ex.classes[i - 1].rep, ex.classes[i].rep));
        }
        std::uint64_t total = 0;
        for (std::uint32_t c : ex.class_sizes) total += c;
        REQUIRE(total == T.size());
        const std::uint64_t full = s.field().q() - 1;
        REQUIRE(ex.m_exact >= (T.size() + full - 1) / full);  // ceil(#T/(q-1))
        if (ex.exact_flag) REQUIRE(ex.m_paper == Rational(std::uint64_t(ex.m_exact)));
    }
}

TEST_CASE("result does not depend on input order") {
    Space s(Field::make(5, 1), 2);
    std::vector<Vector> T = {{1, 2}, {2, 4}, {3, 0}, {0, 4}, {4, 3}, {1, 1}};
    Extraction a = extract_directions(s, T);
    std::mt19937 shuffler(7);
    for (int i = 0; i < 10; ++i) {
        std::shuffle(T.begin(), T.end(), shuffler);
        Extraction b = extract_directions(s, T);
        REQUIRE(a.m_exact == b.m_exact);
        REQUIRE(a.class_sizes == b.class_sizes);
        for (std::size_t j = 0; j < a.classes.size(); ++j) REQUIRE(a.classes[j].code == b.classes[j].code);
    }
}
