#include "crn/weighted_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace crn::graph {

WeightedIntersectionGraph::WeightedIntersectionGraph(std::size_t n) : n_(n), w_(n * n, 0) {}

WeightedIntersectionGraph WeightedIntersectionGraph::from_rows(const std::vector<std::vector<Weight>>& rows) {
    WeightedIntersectionGraph g(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw std::invalid_argument("weighted graph: row " + std::to_string(i) + " has wrong length");
        }
        if (rows[i][i] != 0) {
            throw std::invalid_argument("weighted graph: nonzero diagonal at " + std::to_string(i));
        }
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (rows[i][j] != rows[j][i]) {
                throw std::invalid_argument("weighted graph: asymmetric entry (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
            }
            g.w_[i * g.n_ + j] = rows[i][j];
        }
    }
    return g;
}

WeightedIntersectionGraph WeightedIntersectionGraph::from_upper_triangle(std::size_t n,
                                                                         std::span<const Weight> entries) {
    if (entries.size() != n * (n - (n > 0 ? 1 : 0)) / 2) {
        throw std::invalid_argument("weighted graph: upper triangle has wrong length");
    }
    WeightedIntersectionGraph g(n);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) g.set_weight(i, j, entries[idx++]);
    }
    return g;
}

void WeightedIntersectionGraph::set_weight(std::size_t i, std::size_t j, Weight w) {
    if (i >= n_ || j >= n_) throw std::out_of_range("weighted graph: vertex out of range");
    if (i == j) {
        if (w != 0) throw std::invalid_argument("weighted graph: diagonal must stay zero");
        return;
    }
    w_[i * n_ + j] = w;
    w_[j * n_ + i] = w;
}

Weight WeightedIntersectionGraph::total() const {
    Weight t = 0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) t += weight(i, j);
    return t;
}

Weight WeightedIntersectionGraph::row_sum(std::size_t i) const {
    Weight t = 0;
    for (std::size_t j = 0; j < n_; ++j) t += weight(i, j);
    return t;
}

Weight WeightedIntersectionGraph::max_weight() const {
    return w_.empty() ? 0 : *std::max_element(w_.begin(), w_.end());
}

std::vector<Weight> WeightedIntersectionGraph::upper_triangle() const {
    std::vector<Weight> out;
    out.reserve(n_ * (n_ > 0 ? n_ - 1 : 0) / 2);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) out.push_back(weight(i, j));
    return out;
}

std::vector<std::vector<Weight>> WeightedIntersectionGraph::rows() const {
    std::vector<std::vector<Weight>> out(n_, std::vector<Weight>(n_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out[i][j] = weight(i, j);
    return out;
}

WeightedIntersectionGraph WeightedIntersectionGraph::relabeled(std::span<const std::size_t> order) const {
    if (order.size() != n_) throw std::invalid_argument("weighted graph: relabeling has wrong length");
    return induced(order);
}

WeightedIntersectionGraph WeightedIntersectionGraph::induced(std::span<const std::size_t> vertices) const {
    WeightedIntersectionGraph g(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= n_) throw std::out_of_range("weighted graph: vertex out of range");
        for (std::size_t j = 0; j < vertices.size(); ++j) {
            g.w_[i * g.n_ + j] = weight(vertices[i], vertices[j]);
        }
    }
    return g;
}

std::strong_ordering operator<=>(const WeightedIntersectionGraph& a, const WeightedIntersectionGraph& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.w_.begin(), a.w_.end(), b.w_.begin(), b.w_.end());
}

}  // namespace crn::graph
