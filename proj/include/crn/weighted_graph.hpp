#ifndef CRN_WEIGHTED_GRAPH_HPP
#define CRN_WEIGHTED_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace crn::graph {

using Weight = std::uint64_t;

/**
 * Symmetric matrix of pairwise geometric intersection numbers of an abstract
 * curve system. Vertex i stands for curve i; the diagonal is always zero.
 */
class WeightedIntersectionGraph {
public:
    WeightedIntersectionGraph() = default;
    explicit WeightedIntersectionGraph(std::size_t n);

    /// Builds from full rows; throws std::invalid_argument unless square,
    /// symmetric and zero on the diagonal.
    static WeightedIntersectionGraph from_rows(const std::vector<std::vector<Weight>>& rows);

    /// Builds from the strict upper triangle read row by row.
    static WeightedIntersectionGraph from_upper_triangle(std::size_t n, std::span<const Weight> entries);

    std::size_t size() const { return n_; }
    Weight weight(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }
    void set_weight(std::size_t i, std::size_t j, Weight w);

    Weight total() const;
    Weight row_sum(std::size_t i) const;
    Weight max_weight() const;
    std::vector<Weight> upper_triangle() const;
    std::vector<std::vector<Weight>> rows() const;

    /// Graph whose vertex v is vertex order[v] of this graph.
    WeightedIntersectionGraph relabeled(std::span<const std::size_t> order) const;
    WeightedIntersectionGraph induced(std::span<const std::size_t> vertices) const;

    friend bool operator==(const WeightedIntersectionGraph&, const WeightedIntersectionGraph&) = default;
    friend std::strong_ordering operator<=>(const WeightedIntersectionGraph& a,
                                            const WeightedIntersectionGraph& b);

private:
    std::size_t n_ = 0;
    std::vector<Weight> w_;
};

}  // namespace crn::graph

#endif
