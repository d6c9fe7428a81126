#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "crn/bounds.hpp"
#include "crn/constructions.hpp"
#include "crn/torus_search.hpp"

using namespace crn::build;

namespace {

AssetMatrix asset() { return load_twelve_asset(std::string(CRN_TEST_DATA_DIR) + "/twelve_curves.txt"); }

bool all_pass(const AssetMatrix& m) {
    for (const auto& c : validate_twelve_asset(m))
        if (!c.passed) return false;
    return true;
}

}  // namespace

TEST_CASE("genus-2 family crossing numbers") {
    CHECK(genus2_family(8).crossing_number() == 10);
    CHECK(genus2_family(9).crossing_number() == 14);
    CHECK(genus2_family(10).crossing_number() == 21);
    CHECK(genus2_family(11).crossing_number() == 28);
    CHECK(genus2_family(4).crossing_number() == 1);
    CHECK(genus2_family(1).crossing_number() == 0);
    CHECK_THROWS_AS(genus2_family(12), std::invalid_argument);
    CHECK_THROWS_AS(genus2_family(0), std::invalid_argument);
    const auto m = genus2_family(11);
    CHECK(m.separating[0]);
    CHECK(m.graph.row_sum(0) == 0);
    CHECK(m.graph.max_weight() == 3);
}

TEST_CASE("property: each side of the genus-2 family is a minimal torus system") {
    for (int k = 2; k <= 11; ++k) {
        const auto m = genus2_family(k);
        for (int side : {0, 1}) {
            const auto s = side_system(m, side);
            if (s.size() == 0) continue;
            CHECK(s.crossing_number() == crn::torus::known_upper_bound(static_cast<int>(s.size())));
        }
        const int left = static_cast<int>(side_system(m, 0).size());
        const int right = static_cast<int>(side_system(m, 1).size());
        CHECK(left - right >= 0);
        CHECK(left - right <= 1);
    }
}

TEST_CASE("property: the genus-2 family meets the certified lower bounds") {
    for (int k = 4; k <= 11; ++k) CHECK(genus2_family(k).crossing_number() == crn::bounds::genus2_lower(k)->claim.value);
}

TEST_CASE("general genus family") {
    CHECK(genus_g_family(2, 7).crossing_number() == 6);
    CHECK(genus_g_family(4, 14).crossing_number() == 6);
    CHECK(genus_g_family(3, 6).crossing_number() == 0);
    CHECK_THROWS_AS(genus_g_family(3, 5), std::invalid_argument);
    CHECK_THROWS_AS(genus_g_family(3, 13), std::invalid_argument);
    for (int g = 2; g <= 8; ++g) {
        for (int k = 3 * g - 3; k <= 5 * g - 3; ++k) {
            const auto m = genus_g_family(g, k);
            CHECK(static_cast<std::int64_t>(m.crossing_number()) == *crn::bounds::crn_closed_form(k, g));
            if (k > 3 * g - 3) {
                const int j = k - (3 * g - 3);
                const auto step = m.crossing_number() - genus_g_family(g, k - 1).crossing_number();
                CHECK(step == (j <= g ? 1u : 2u));
            }
        }
    }
}

TEST_CASE("twelve-curve asset") {
    const auto m = asset();
    for (const auto& c : validate_twelve_asset(m)) CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
    const auto s = twelve_curve_system(m);
    CHECK(s.crossing_number() == 36);
    CHECK(s.graph.max_weight() == 1);
    for (std::size_t i = 0; i < 12; ++i) {
        CHECK(s.graph.row_sum(i) == 6);
        CHECK_FALSE(s.separating[i]);
    }
}

TEST_CASE("property: any single mutation of the asset breaks a check") {
    const auto base = asset();
    REQUIRE(all_pass(base));
    for (std::size_t i = 0; i < 12; ++i) {
        for (std::size_t j = i + 1; j < 12; ++j) {
            auto one = base;
            one[i][j] = 1 - one[i][j];
            CHECK_FALSE(all_pass(one));
            auto both = one;
            both[j][i] = 1 - both[j][i];
            CHECK_FALSE(all_pass(both));
            auto big = base;
            big[i][j] = big[j][i] = 2;
            CHECK_FALSE(all_pass(big));
        }
    }
    auto diag = base;
    diag[3][3] = 1;
    CHECK_FALSE(all_pass(diag));
}

TEST_CASE("asset errors name the failing check") {
    auto m = asset();
    m[0][1] = 1 - m[0][1];
    m[1][0] = m[0][1];
    try {
        twelve_curve_system(m);
        FAIL("expected an asset error");
    } catch (const AssetInvariantError& e) {
        CHECK(e.check() == "total_36");
    }
    CHECK_THROWS_AS(twelve_curve_system(parse_twelve_asset("0 1\n1 0\n")), AssetInvariantError);
    CHECK_THROWS_AS(parse_twelve_asset("0 x"), AssetInvariantError);
    CHECK_THROWS_AS(load_twelve_asset("/nonexistent/asset.txt"), AssetInvariantError);
}

TEST_CASE("asset path can be overridden") {
    const auto dir = std::filesystem::temp_directory_path() / "crn_asset_override";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "bad.txt").string();
    std::ofstream(path) << "0 1\n1 0\n";
    setenv("CRN_TWELVE_ASSET", path.c_str(), 1);
    CHECK(twelve_asset_path() == path);
    CHECK_THROWS_AS(twelve_curve_system(), AssetInvariantError);
    unsetenv("CRN_TWELVE_ASSET");
    CHECK(twelve_curve_system().crossing_number() == 36);
}

TEST_CASE("one-system check") {
    const auto twelve = one_system_check(twelve_curve_system(asset()));
    CHECK(twelve.is_one_system);
    CHECK(twelve.total == 36);
    CHECK(twelve.decomposition != "none");
    CHECK(twelve.triples.size() == 4);

    const auto eleven = one_system_check(genus2_family(11));
    CHECK_FALSE(eleven.is_one_system);

    CurveSystemModel empty;
    empty.genus = 2;
    const auto e = one_system_check(empty);
    CHECK(e.is_one_system);
    CHECK(e.total == 0);
}

TEST_CASE("oracle: the asset satisfies the equality conditions of the optimality proof") {
    const auto s = twelve_curve_system(asset());
    const auto r = one_system_check(s);
    REQUIRE(r.decomposition == "four_disjoint_triples");
    // Each curve outside a triple meets that triple exactly twice.
    for (const auto& t : r.triples) {
        for (std::size_t v = 0; v < 12; ++v) {
            if (v == t[0] || v == t[1] || v == t[2]) continue;
            CHECK(s.graph.weight(v, t[0]) + s.graph.weight(v, t[1]) + s.graph.weight(v, t[2]) == 2);
        }
    }
}

TEST_CASE("triangle-pair case is recognized") {
    // Disjoint triples 0..2 and 3..5, unit triangles 6..8 and 9..11, and no
    // decomposition into four disjoint triples.
    const std::vector<std::vector<crn::graph::Weight>> rows{
        {0, 0, 0, 0, 1, 1, 0, 1, 1, 0, 1, 1},
        {0, 0, 0, 1, 1, 0, 1, 0, 1, 1, 0, 0},
        {0, 0, 0, 1, 0, 1, 1, 1, 0, 1, 1, 1},
        {0, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 1},
        {1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0},
        {1, 0, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1},
        {0, 1, 1, 1, 0, 1, 0, 1, 1, 0, 0, 0},
        {1, 0, 1, 1, 0, 1, 1, 0, 1, 0, 0, 0},
        {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0},
        {0, 1, 1, 0, 1, 1, 0, 0, 0, 0, 1, 1},
        {1, 0, 1, 0, 1, 1, 0, 0, 0, 1, 0, 1},
        {1, 0, 1, 1, 0, 1, 0, 0, 0, 1, 1, 0}};
    auto model = twelve_curve_system(asset());
    model.graph = crn::graph::WeightedIntersectionGraph::from_rows(rows);
    const auto r = one_system_check(model);
    CHECK(r.is_one_system);
    CHECK(r.total == 36);
    CHECK(r.decomposition == "triangle_pair");
}

TEST_CASE("the twelve-curve system is not an extension of an 11-curve minimal system") {
    const auto twelve = twelve_curve_system(asset());
    for (std::size_t i = 0; i < 12; ++i) CHECK(twelve.graph.row_sum(i) > 0);
    const auto eleven = genus2_family(11);
    bool zero_row = false;
    for (std::size_t i = 0; i < 11; ++i) zero_row = zero_row || eleven.graph.row_sum(i) == 0;
    CHECK(zero_row);
}

TEST_CASE("upper certificates") {
    const auto nine = upper_certificate(genus2_family(9));
    CHECK(nine->claim.genus == 2);
    CHECK(nine->claim.k == 9);
    CHECK(nine->claim.rel == crn::cert::Relation::at_most);
    CHECK(nine->claim.value == 14);
    CHECK(crn::cert::replay_ok(*nine));
    CHECK(upper_certificate(twelve_curve_system(asset()))->claim.value == 36);
    CHECK(upper_certificate(genus_g_family(2, 5))->claim.value == 2);
}

TEST_CASE("assembled table") {
    const auto t = assemble_table();
    const std::vector<std::int64_t> expected{1, 2, 4, 6, 10, 14, 21, 28, 36};
    REQUIRE(t.rows.size() == 9);
    for (std::size_t i = 0; i < 9; ++i) {
        CHECK(t.rows[i].settled);
        CHECK(t.rows[i].lower->claim.value == expected[i]);
        CHECK(t.rows[i].upper->claim.value == expected[i]);
        CHECK(crn::cert::replay_ok(*t.rows[i].lower));
        CHECK(crn::cert::replay_ok(*t.rows[i].upper));
    }
    const auto ext = build_table(2, 1, 12);
    CHECK(ext.rows[2].settled);
    CHECK(ext.rows[2].lower->claim.value == 0);
    const auto beyond = build_table(2, 13, 13);
    CHECK_FALSE(beyond.rows[0].settled);
    CHECK(beyond.rows[0].upper == nullptr);
}

TEST_CASE("CSV output") {
    const auto csv = table_csv(build_table(2, 11, 13));
    CHECK(csv ==
          "k,lower,upper,settled,construction\n"
          "11,28,28,true,genus2_family(11)\n"
          "12,36,36,true,twelve_curve_system\n"
          "13,43,,false,\n");
}

TEST_CASE("model validation and prefixes") {
    auto m = genus2_family(6);
    const auto p = m.prefix(3);
    CHECK(p.size() == 3);
    CHECK(p.graph.size() == 3);
    CHECK_THROWS_AS(m.prefix(7), std::invalid_argument);
    m.labels.pop_back();
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);
}
