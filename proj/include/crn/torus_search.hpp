#ifndef CRN_TORUS_SEARCH_HPP
#define CRN_TORUS_SEARCH_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include <json.hpp>

#include "crn/torus.hpp"
#include "crn/weighted_graph.hpp"

namespace crn::torus {

/// crossing_number({w1, ..., wk}) for 1 <= k <= 6.
Count known_upper_bound(int k);

struct SearchResult {
    int k = 0;
    Count minimum = 0;
    std::vector<TorusSystem> minimizers;  // canonical forms, sorted
    std::size_t orbit_count = 0;
    std::uint64_t explored = 0;
    Coord coordinate_bound = 0;
};

/**
 * Exhaustive branch-and-bound search for crn(k;1). `upper` must be at least
 * the crossing number of some k-system. Systems are normalized to contain
 * (1,0) and (0,1); the result checks afterwards that 2 C(k,2) > minimum, so
 * that every minimal system has a once-intersecting pair.
 *
 * Throws std::invalid_argument for k < 2, for upper below the proven lower
 * bound, and std::runtime_error if no system within `upper` exists. Output
 * does not depend on `threads` (0 picks the hardware concurrency).
 */
SearchResult search_min(int k, Count upper, unsigned threads = 1);

struct QuadrupleSpectrum {
    std::set<Count> totals;
    std::map<Count, std::set<graph::WeightedIntersectionGraph>> graphs;  // canonical graphs per total
    std::map<Count, std::set<TorusSystem>> orbits;                       // canonical systems per total
    std::uint64_t explored = 0;
};

/**
 * Every crossing number <= max_total achieved by four torus curves, with the
 * canonical intersection graphs and orbits realizing it. Requires
 * 7 <= max_total <= 11 (above 11 a system need not contain a once-intersecting pair).
 */
QuadrupleSpectrum quadruple_crossing_spectrum(Count max_total);

nlohmann::ordered_json to_json(const SearchResult& r);
nlohmann::ordered_json to_json(const TorusSystem& s);

}  // namespace crn::torus

#endif
