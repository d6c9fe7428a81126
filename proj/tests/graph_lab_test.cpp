#include <doctest.h>

#include <random>
#include <set>

#include "crn/graph_lab.hpp"
#include "crn/torus.hpp"
#include "oracles.hpp"

using namespace crn::graph;

namespace {

WeightedIntersectionGraph random_graph(std::mt19937_64& rng, std::size_t n, Weight total, Weight min_weight) {
    WeightedIntersectionGraph g(n);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
    Weight left = total - min_weight * edges.size();
    for (auto [i, j] : edges) g.set_weight(i, j, min_weight);
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    while (left-- > 0) {
        auto [i, j] = edges[pick(rng)];
        g.set_weight(i, j, g.weight(i, j) + 1);
    }
    return g;
}

WeightedIntersectionGraph nine_graph() {
    return WeightedIntersectionGraph::from_rows({{0, 1, 1, 1}, {1, 0, 1, 3}, {1, 1, 0, 2}, {1, 3, 2, 0}});
}

}  // namespace

TEST_CASE("graph construction validates") {
    CHECK_THROWS_AS(WeightedIntersectionGraph::from_rows({{0, 1}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(WeightedIntersectionGraph::from_rows({{1, 1}, {1, 0}}), std::invalid_argument);
    const std::vector<Weight> upper{1, 2, 3};
    const auto g = WeightedIntersectionGraph::from_upper_triangle(3, upper);
    CHECK(g.total() == 6);
    CHECK(g.row_sum(0) == 3);
    CHECK(g.upper_triangle() == upper);
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_graphs(4, 8, 1).size() == 3);
    CHECK(enumerate_graphs(4, 9, 1).size() == 6);
    CHECK(enumerate_graphs(2, 5).size() == 1);
    CHECK(enumerate_graphs(4, 5, 1).empty());
    CHECK_THROWS_AS(enumerate_graphs(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_graphs(17, 3), std::invalid_argument);
    for (const auto& g : enumerate_graphs(4, 9, 1)) CHECK(g.total() == 9);
}

TEST_CASE("property: enumeration has no duplicates and is closed") {
    std::mt19937_64 rng(5);
    const std::vector<std::tuple<std::size_t, Weight, Weight>> cases{{4, 8, 1}, {4, 9, 1}, {5, 6, 0}, {4, 5, 0}, {3, 7, 0}};
    for (auto [n, total, min_w] : cases) {
        const auto all = enumerate_graphs(n, total, min_w);
        std::set<WeightedIntersectionGraph> canon;
        for (const auto& g : all) {
            CHECK(canonical_graph(g) == g);
            canon.insert(canonical_graph(g));
        }
        CHECK(canon.size() == all.size());
        for (int trial = 0; trial < 300; ++trial) {
            const auto g = random_graph(rng, n, total, min_w);
            REQUIRE(canon.count(canonical_graph(g)) == 1);
        }
    }
}

TEST_CASE("oracle: canonical form equals the brute-force minimum over permutations") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 6);
        const auto g = random_graph(rng, n, static_cast<Weight>(n + trial % 9), 0);
        REQUIRE(canonical_graph(g) == oracle::brute_canonical(g));
    }
}

TEST_CASE("canonical graph examples") {
    const auto e1 = WeightedIntersectionGraph::from_rows({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}});
    const auto e2 = WeightedIntersectionGraph::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});
    CHECK(canonical_graph(e1) == canonical_graph(e2));

    const std::vector<std::size_t> swap34{0, 1, 3, 2};
    CHECK(canonical_graph(nine_graph()) == canonical_graph(nine_graph().relabeled(swap34)));

    const auto path = WeightedIntersectionGraph::from_rows({{0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}});
    const auto star = WeightedIntersectionGraph::from_rows({{0, 1, 1, 1}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}});
    CHECK(canonical_graph(path) != canonical_graph(star));
    CHECK_THROWS_AS(canonical_graph(WeightedIntersectionGraph(17)), std::invalid_argument);
    CHECK(canonical_graph(WeightedIntersectionGraph(16)).size() == 16);
}

TEST_CASE("realizability filter") {
    for (const auto& g : enumerate_graphs(4, 8, 1)) CHECK_FALSE(quadruple_realizability_filter(g));
    std::size_t survivors = 0;
    for (const auto& g : enumerate_graphs(4, 9, 1)) survivors += quadruple_realizability_filter(g) ? 1 : 0;
    CHECK(survivors == 1);
    CHECK(quadruple_realizability_filter(nine_graph()));

    const auto k4 = WeightedIntersectionGraph::from_rows({{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});
    CHECK_FALSE(quadruple_realizability_filter(k4));
    // Oracle: no four torus curves with budget 6 exist.
    std::int64_t smallest = -1;
    const auto pool = oracle::primitive_vectors(6);
    for (std::size_t a = 0; a < pool.size(); ++a)
        for (std::size_t b = a + 1; b < pool.size(); ++b)
            for (std::size_t c = b + 1; c < pool.size(); ++c)
                for (std::size_t d = c + 1; d < pool.size(); ++d) {
                    const auto x = oracle::crossing({pool[a], pool[b], pool[c], pool[d]});
                    if (smallest < 0 || x < smallest) smallest = x;
                }
    CHECK(smallest == 7);

    const auto twos = WeightedIntersectionGraph::from_rows({{0, 2, 2, 2}, {2, 0, 2, 2}, {2, 2, 0, 2}, {2, 2, 2, 0}});
    CHECK_THROWS_AS(quadruple_realizability_filter(twos), NoUnitEdge);
    CHECK_THROWS_WITH(quadruple_realizability_filter(twos), "no unit edge");
    CHECK_THROWS_AS(quadruple_realizability_filter(WeightedIntersectionGraph(3)), std::invalid_argument);
    auto zero = k4;
    zero.set_weight(0, 1, 0);
    CHECK_THROWS_AS(quadruple_realizability_filter(zero), std::invalid_argument);
}

TEST_CASE("property: filter is invariant under relabeling") {
    std::mt19937_64 rng(3);
    for (Weight total = 7; total <= 12; ++total) {
        for (const auto& g : enumerate_graphs(4, total, 1)) {
            bool has_unit = false;
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i + 1; j < 4; ++j) has_unit = has_unit || g.weight(i, j) == 1;
            if (!has_unit) continue;
            std::vector<std::size_t> p{0, 1, 2, 3};
            for (int t = 0; t < 6; ++t) {
                std::shuffle(p.begin(), p.end(), rng);
                REQUIRE(quadruple_realizability_filter(g.relabeled(p)) == quadruple_realizability_filter(g));
            }
        }
    }
}

TEST_CASE("oracle: every four-curve torus system with a unit pair passes the filter") {
    const auto pool = oracle::primitive_vectors(9);
    std::size_t checked = 0;
    for (std::size_t a = 0; a < pool.size(); ++a)
        for (std::size_t b = a + 1; b < pool.size(); ++b)
            for (std::size_t c = b + 1; c < pool.size(); ++c)
                for (std::size_t d = c + 1; d < pool.size(); ++d) {
                    std::vector<crn::torus::PrimitiveClass> curves;
                    for (auto v : {pool[a], pool[b], pool[c], pool[d]})
                        curves.push_back(crn::torus::PrimitiveClass::make(v.first, v.second));
                    const auto g = crn::torus::intersection_graph(crn::torus::TorusSystem::make(curves));
                    bool unit = false;
                    for (std::size_t i = 0; i < 4; ++i)
                        for (std::size_t j = i + 1; j < 4; ++j) unit = unit || g.weight(i, j) == 1;
                    if (!unit) continue;
                    ++checked;
                    if (!quadruple_realizability_filter(g)) FAIL("filter rejects a realizable graph");
                }
    CHECK(checked > 10000);
}

TEST_CASE("Turan bound") {
    CHECK(turan_bound(5) == 4);
    CHECK(turan_bound(9) == 16);
    CHECK(turan_bound(12) == 30);
    CHECK_THROWS_AS(turan_bound(2), std::invalid_argument);
}

TEST_CASE("oracle: Turan bound is the least edge count with no independent triple") {
    for (std::size_t n = 3; n <= 7; ++n) {
        const std::size_t m = n * (n - 1) / 2;
        std::size_t best = m;
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            const auto edges = static_cast<std::size_t>(__builtin_popcount(mask));
            if (edges >= best) continue;
            std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
            std::size_t e = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j, ++e) adj[i][j] = adj[j][i] = ((mask >> e) & 1u) != 0;
            bool independent = false;
            for (std::size_t a = 0; a < n && !independent; ++a)
                for (std::size_t b = a + 1; b < n && !independent; ++b)
                    for (std::size_t c = b + 1; c < n && !independent; ++c)
                        independent = !adj[a][b] && !adj[a][c] && !adj[b][c];
            if (!independent) best = edges;
        }
        CHECK(turan_bound(n) == best);
    }
}

TEST_CASE("Turan bound is below the torus minima") {
    const std::vector<std::uint64_t> torus{1, 3, 7, 14, 24};
    for (std::uint64_t k = 2; k <= 6; ++k) {
        if (k >= 3) CHECK(turan_bound(k) <= torus[k - 2]);
    }
}

TEST_CASE("DOT export") {
    const auto dot = to_dot(nine_graph(), "L");
    CHECK(dot.find("graph L {") == 0);
    CHECK(dot.find("1 -- 2;") != std::string::npos);
    CHECK(dot.find("2 -- 4 [label=\"3\"];") != std::string::npos);
    const auto sparse = to_dot(WeightedIntersectionGraph(3));
    CHECK(sparse.find("--") == std::string::npos);
}
