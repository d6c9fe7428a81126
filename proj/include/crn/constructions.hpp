#ifndef CRN_CONSTRUCTIONS_HPP
#define CRN_CONSTRUCTIONS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crn/bounds.hpp"
#include "crn/certificate.hpp"
#include "crn/torus.hpp"
#include "crn/weighted_graph.hpp"

namespace crn::build {

/// Torus coordinates of a curve living in one handle of the surface.
struct HandleCoord {
    int handle = 0;
    torus::PrimitiveClass curve = torus::PrimitiveClass::make(1, 0);
};

/// Abstract curve system: names, declared separating flags and the
/// intersection matrix. Crossing number is the graph total.
struct CurveSystemModel {
    int genus = 1;
    std::string name;
    std::vector<std::string> labels;
    std::vector<bool> separating;
    graph::WeightedIntersectionGraph graph;
    std::vector<std::optional<HandleCoord>> coords;  // empty, or one per curve

    std::size_t size() const { return labels.size(); }
    graph::Weight crossing_number() const { return graph.total(); }

    /// Throws std::invalid_argument if the fields disagree in size.
    void validate() const;

    /// The first k curves.
    CurveSystemModel prefix(std::size_t k) const;
};

/**
 * The system alpha_1..alpha_{2g-3}, beta_1..beta_g, gamma_1..gamma_g,
 * delta_1..delta_g cut down to its first k curves. In handle i,
 * beta = (0,1), gamma = (1,0), delta = (1,1). Requires g >= 2 and
 * 3g-3 <= k <= 5g-3.
 */
CurveSystemModel genus_g_family(int g, int k);

/**
 * Separating curve delta_1 followed by curves placed alternately on the left
 * and right one-holed tori, each side using a prefix of w1..w5. 1 <= k <= 11.
 */
CurveSystemModel genus2_family(int k);

/// Curves of the model placed on the given handle, as a torus system.
torus::TorusSystem side_system(const CurveSystemModel& m, int handle);

using AssetMatrix = std::vector<std::vector<std::int64_t>>;

struct AssetCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Checks shape, symmetry, zero_diagonal, entries_0_1, total_36 and row_sums_6, in that order.
std::vector<AssetCheck> validate_twelve_asset(const AssetMatrix& m);

class AssetInvariantError : public std::runtime_error {
public:
    AssetInvariantError(std::string check, const std::string& detail)
        : std::runtime_error("twelve-curve asset fails check '" + check + "': " + detail), check_(std::move(check)) {}
    const std::string& check() const { return check_; }

private:
    std::string check_;
};

/// Parses whitespace-separated integers; throws AssetInvariantError("shape") on malformed input.
AssetMatrix parse_twelve_asset(const std::string& text);
AssetMatrix load_twelve_asset(const std::string& path);

/// $CRN_TWELVE_ASSET if set, else the checked-in data file.
std::string twelve_asset_path();

/// Loads and validates the asset. Throws AssetInvariantError naming the first failed check.
CurveSystemModel twelve_curve_system();
CurveSystemModel twelve_curve_system(const std::string& path);
CurveSystemModel twelve_curve_system(const AssetMatrix& m);

using Triple = std::array<std::size_t, 3>;

struct OneSystemReport {
    bool is_one_system = true;
    graph::Weight total = 0;
    graph::Weight max_weight = 0;
    /// four_disjoint_triples, triangle_pair or none.
    std::string decomposition = "none";
    std::vector<Triple> triples;  // A, B and, for four_disjoint_triples, C and D
};

/**
 * For 12 curves, looks for disjoint triples A and B such that every later
 * curve meets each of them exactly twice in total, and then either two more
 * such triples or two unit triangles on the remaining six curves.
 */
OneSystemReport one_system_check(const CurveSystemModel& s);

/// Construction leaf (genus, k, <=, total) carrying the upper triangle and its digest.
cert::CertPtr upper_certificate(const CurveSystemModel& s);

/// Best available construction for k curves on the genus-g surface, if any.
std::optional<CurveSystemModel> construction_for(int k, int g);

/// Rows k_from..k_to, possibly unsettled.
bounds::Genus2Table build_table(int genus, int k_from, int k_to);

/// Rows 4..12 of the genus-2 table; throws std::runtime_error if any row is unsettled.
bounds::Genus2Table assemble_table();

/// Columns k, lower, upper, settled, construction.
std::string table_csv(const bounds::Genus2Table& t);

}  // namespace crn::build

#endif
