#ifndef CRN_GRAPH_LAB_HPP
#define CRN_GRAPH_LAB_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "crn/weighted_graph.hpp"

namespace crn::graph {

/// Largest vertex count accepted by canonical_graph.
inline constexpr std::size_t kMaxCanonicalVertices = 16;

/**
 * Canonical relabeling: the graph whose strict lower triangle, read row by
 * row ((1,0), (2,0), (2,1), (3,0), ...), is lexicographically least over all
 * vertex permutations. Two graphs are isomorphic iff their canonical graphs
 * are equal. Throws std::invalid_argument for more than 16 vertices.
 */
WeightedIntersectionGraph canonical_graph(const WeightedIntersectionGraph& g);

bool is_canonical(const WeightedIntersectionGraph& g);

/**
 * One canonical representative per isomorphism class of weighted graphs on n
 * vertices with the given total and every edge weight >= min_weight. Output
 * is sorted and generated orderly (each prefix on the first i vertices is
 * itself canonical), so no post-hoc deduplication is needed.
 */
std::vector<WeightedIntersectionGraph> enumerate_graphs(std::size_t n, Weight total, Weight min_weight = 0);

class NoUnitEdge : public std::invalid_argument {
public:
    NoUnitEdge() : std::invalid_argument("no unit edge") {}
};

/**
 * Necessary condition for a 4-vertex graph to be the intersection graph of
 * four torus curves: for some labeling with w12 = 1,
 *   w34 = |w23 w14 - w13 w24|  or  w34 = w23 w14 + w13 w24.
 * Requires n = 4 and all weights >= 1; throws NoUnitEdge if no weight is 1.
 */
bool quadruple_realizability_filter(const WeightedIntersectionGraph& g);

/// ceil(k(k-2)/4): lower bound on the crossing number of k >= 3 curves on the
/// genus-2 surface with no three pairwise disjoint.
std::uint64_t turan_bound(std::uint64_t k);

/// Graphviz export. Vertices are 1..n; zero-weight pairs are omitted and
/// weight-1 edges carry no label.
std::string to_dot(const WeightedIntersectionGraph& g, const std::string& name = "G",
                   const std::vector<std::string>& labels = {});

}  // namespace crn::graph

#endif
