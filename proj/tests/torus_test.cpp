#include <doctest.h>

#include <random>

#include "crn/torus.hpp"
#include "oracles.hpp"

using namespace crn::torus;

namespace {

PrimitiveClass pc(Coord a, Coord b) { return PrimitiveClass::make(a, b); }

TorusSystem sys(std::initializer_list<std::pair<Coord, Coord>> v) {
    std::vector<PrimitiveClass> out;
    for (auto [a, b] : v) out.push_back(pc(a, b));
    return TorusSystem::make(out);
}

}  // namespace

TEST_CASE("primitive classes are sign normalized and validated") {
    CHECK(pc(-2, -1) == pc(2, 1));
    CHECK(pc(0, -1) == pc(0, 1));
    CHECK(pc(-1, 1).a() == 1);
    CHECK(pc(-1, 1).b() == -1);
    CHECK_THROWS_AS(pc(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(pc(2, 4), std::invalid_argument);
    CHECK(pc(3, -5).norm() == 8);
}

TEST_CASE("intersection number") {
    CHECK(intersection_number(pc(1, 0), pc(0, 1)) == 1);
    CHECK(intersection_number(pc(2, 1), pc(1, 2)) == 3);
    CHECK(intersection_number(pc(1, 0), pc(1, 0)) == 0);
    CHECK(intersection_number(pc(1, 2), pc(2, 1)) == intersection_number(pc(2, 1), pc(1, 2)));
}

TEST_CASE("intersection number is exact at 2^31") {
    const Coord big = Coord{1} << 31;
    const auto u = pc(big, big - 1);
    const auto v = pc(big - 1, -big);
    // |big * (-big) - (big-1)(big-1)| = 2 big^2 - 2 big + 1
    const Count expected = 2 * static_cast<Count>(big) * static_cast<Count>(big) - 2 * static_cast<Count>(big) + 1;
    CHECK(intersection_number(u, v) == expected);
}

TEST_CASE("SL2 action") {
    CHECK_THROWS_AS(SL2Matrix::make(1, 1, 1, 1), std::invalid_argument);
    CHECK(apply(SL2Matrix::identity(), pc(2, 1)) == pc(2, 1));
    CHECK(apply(SL2Matrix::make(1, 1, 0, 1), pc(-1, 1)) == pc(0, 1));
    CHECK(apply(SL2Matrix::make(1, -1, 0, 1), pc(2, 1)) == pc(1, 1));
    const auto m = SL2Matrix::make(2, 3, 1, 2);
    CHECK(m * m.inverse() == SL2Matrix::identity());
}

TEST_CASE("crossing numbers of the reference systems") {
    CHECK(crossing_number(reference_system(3)) == 3);
    CHECK(crossing_number(reference_system(4)) == 7);
    CHECK(crossing_number(reference_system(6)) == 24);
    CHECK(crossing_number(reference_system(6)) == crossing_number(TorusSystem::make(reference_system(6).curves())));
    CHECK_THROWS_AS(TorusSystem::make({pc(1, 0), pc(-1, 0)}), std::invalid_argument);
}

TEST_CASE("cached crossing number matches the pairwise sum") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Coord> d(-30, 30);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<PrimitiveClass> curves;
        while (curves.size() < 5) {
            const Coord a = d(rng), b = d(rng);
            if (std::gcd(a, b) != 1) continue;
            const auto c = pc(a, b);
            if (std::find(curves.begin(), curves.end(), c) == curves.end()) curves.push_back(c);
        }
        const auto s = TorusSystem::make(curves);
        CHECK(static_cast<std::int64_t>(s.crossing_number()) == oracle::crossing(oracle::as_pairs(s)));
    }
}

TEST_CASE("canonical system") {
    CHECK(canonical_system(sys({{1, 0}, {0, 1}})) == sys({{0, 1}, {1, 0}}));
    CHECK(canonical_system(sys({{0, 1}, {1, 0}, {-1, 1}})) == canonical_system(reference_system(3)));
    CHECK_THROWS_AS(canonical_system(sys({{1, 0}, {1, 2}})), NoUnimodularPair);
    CHECK_FALSE(try_canonical_system(sys({{1, 0}, {1, 2}})).has_value());
    const auto c = canonical_system(reference_system(5));
    CHECK(canonical_system(c) == c);
}

TEST_CASE("bounded fallback canonicalizes systems without a once-intersecting pair") {
    const auto s = sys({{1, 0}, {1, 2}, {1, -2}});
    const auto shuffled = sys({{1, -2}, {1, 0}, {1, 2}});
    const auto c = canonical_system_bounded(s, 3);
    CHECK(c == canonical_system_bounded(shuffled, 3));
    CHECK(c.crossing_number() == s.crossing_number());
    CHECK(c.size() == 3);
    CHECK(c <= s.sorted());
}

TEST_CASE("intersection graph") {
    const auto g2 = intersection_graph(reference_system(2));
    CHECK(g2.size() == 2);
    CHECK(g2.weight(0, 1) == 1);
    CHECK(g2.weight(0, 0) == 0);

    const auto g = intersection_graph(sys({{0, 1}, {1, 0}, {1, 1}, {1, 3}}));
    CHECK(g.weight(0, 1) == 1);
    CHECK(g.weight(0, 2) == 1);
    CHECK(g.weight(0, 3) == 1);
    CHECK(g.weight(1, 2) == 1);
    CHECK(g.weight(1, 3) == 3);
    CHECK(g.weight(2, 3) == 2);

    const auto g4 = intersection_graph(reference_system(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) CHECK(g4.weight(i, j) == ((i == 2 && j == 3) ? 2u : 1u));
}

TEST_CASE("property: SL2 invariance of intersection and crossing numbers") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<Coord> d(-12, 12);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto m = oracle::random_sl2(rng, 50);
        CHECK(m.p() * m.s() - m.q() * m.r() == 1);
        Coord a = 0, b = 0, c = 0, e = 0;
        do {
            a = d(rng), b = d(rng);
        } while (std::gcd(a, b) != 1);
        do {
            c = d(rng), e = d(rng);
        } while (std::gcd(c, e) != 1);
        const auto u = pc(a, b), v = pc(c, e);
        REQUIRE(intersection_number(apply(m, u), apply(m, v)) == intersection_number(u, v));
        const auto s = reference_system(6);
        REQUIRE(crossing_number(apply(m, s)) == crossing_number(s));
    }
}

TEST_CASE("property: canonical system is constant on orbits and idempotent") {
    std::mt19937_64 rng(99);
    const std::vector<TorusSystem> seeds{reference_system(3), reference_system(4), reference_system(5),
                                         reference_system(6), sys({{0, 1}, {1, 0}, {1, 1}, {1, 3}})};
    for (const auto& s : seeds) {
        const auto c = canonical_system(s);
        CHECK(canonical_system(c) == c);
        for (int trial = 0; trial < 200; ++trial) {
            const auto m = oracle::random_sl2(rng, 50);
            const auto image = apply(m, s);
            REQUIRE(canonical_system(image) == c);
            REQUIRE(oracle::sl2_equivalent(oracle::as_pairs(image), oracle::as_pairs(c)));
        }
    }
    CHECK(canonical_system(reference_system(4)) != canonical_system(sys({{0, 1}, {1, 0}, {1, 1}, {1, 3}})));
}

TEST_CASE("property: sum of intersections with w1..w4 is 3 max + min") {
    const auto& w = reference_curves();
    for (Coord a = -20; a <= 20; ++a) {
        for (Coord b = -20; b <= 20; ++b) {
            if (a == 0 || b == 0 || std::gcd(a, b) != 1) continue;
            const auto v = pc(a, b);
            Count sum = 0;
            for (int i = 0; i < 4; ++i) sum += intersection_number(w[static_cast<std::size_t>(i)], v);
            const Count x = static_cast<Count>(std::abs(a)), y = static_cast<Count>(std::abs(b));
            REQUIRE(sum == 3 * std::max(x, y) + std::min(x, y));
        }
    }
}
