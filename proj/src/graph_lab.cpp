#include "crn/graph_lab.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace crn::graph {

namespace {

// Lexicographic-minimum search over vertex orderings. At every level only the
// candidates producing the least next row are expanded, and interchangeable
// vertices (identical rows outside the pair) are expanded once.
class Canonicalizer {
public:
    explicit Canonicalizer(const WeightedIntersectionGraph& g) : g_(g), n_(g.size()) {
        twin_class_.resize(n_);
        for (std::size_t u = 0; u < n_; ++u) {
            twin_class_[u] = u;
            for (std::size_t v = 0; v < u; ++v) {
                if (twins(u, v)) {
                    twin_class_[u] = twin_class_[v];
                    break;
                }
            }
        }
        best_rows_.resize(n_);
        used_.assign(n_, false);
    }

    std::vector<std::size_t> run() {
        order_.clear();
        valid_upto_ = 0;
        search(0);
        return best_order_;
    }

private:
    bool twins(std::size_t u, std::size_t v) const {
        for (std::size_t x = 0; x < n_; ++x) {
            if (x == u || x == v) continue;
            if (g_.weight(u, x) != g_.weight(v, x)) return false;
        }
        return true;
    }

    void row_of(std::size_t v, std::vector<Weight>& row) const {
        row.clear();
        for (std::size_t p : order_) row.push_back(g_.weight(v, p));
    }

    void search(std::size_t pos) {
        if (pos == n_) {
            best_order_ = order_;
            return;
        }
        std::vector<std::size_t> candidates;
        std::vector<Weight> min_row, row;
        bool have_min = false;
        std::vector<bool> class_seen(n_, false);
        for (std::size_t v = 0; v < n_; ++v) {
            if (used_[v] || class_seen[twin_class_[v]]) continue;
            class_seen[twin_class_[v]] = true;
            row_of(v, row);
            if (!have_min || row < min_row) {
                min_row = row;
                have_min = true;
                candidates.clear();
            }
            if (row == min_row) candidates.push_back(v);
        }
        // Rows at positions >= valid_upto_ are unset and compare as +infinity.
        if (pos < valid_upto_) {
            if (min_row > best_rows_[pos]) return;
            if (min_row < best_rows_[pos]) {
                best_rows_[pos] = min_row;
                valid_upto_ = pos + 1;
            }
        } else {
            best_rows_[pos] = min_row;
            valid_upto_ = pos + 1;
        }
        for (std::size_t v : candidates) {
            // A deeper improvement may have replaced this level's row.
            if (pos < valid_upto_ && best_rows_[pos] != min_row) return;
            used_[v] = true;
            order_.push_back(v);
            search(pos + 1);
            order_.pop_back();
            used_[v] = false;
        }
    }

    const WeightedIntersectionGraph& g_;
    std::size_t n_;
    std::vector<std::size_t> twin_class_;
    std::vector<std::vector<Weight>> best_rows_;
    std::size_t valid_upto_ = 0;
    std::vector<bool> used_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> best_order_;
};

struct OrderlyGenerator {
    std::size_t n;
    Weight total;
    Weight min_weight;
    WeightedIntersectionGraph g;
    std::vector<WeightedIntersectionGraph> out;

    // Fills row i (edges to vertices 0..i-1) one entry at a time.
    void fill(std::size_t i, std::size_t j, Weight budget) {
        if (i == n) {
            if (budget == 0) out.push_back(g);
            return;
        }
        if (j == i) {
            std::vector<std::size_t> prefix(i + 1);
            std::iota(prefix.begin(), prefix.end(), 0);
            if (!is_canonical(g.induced(prefix))) return;
            fill(i + 1, 0, budget);
            return;
        }
        // Edges still to be assigned after this one.
        const std::size_t later = (n * (n - 1)) / 2 - (i * (i - 1)) / 2 - j - 1;
        for (Weight w = min_weight; w <= budget; ++w) {
            const Weight left = budget - w;
            if (min_weight * later > left) break;
            g.set_weight(i, j, w);
            fill(i, j + 1, left);
        }
        g.set_weight(i, j, 0);
    }
};

}  // namespace

WeightedIntersectionGraph canonical_graph(const WeightedIntersectionGraph& g) {
    if (g.size() > kMaxCanonicalVertices) {
        throw std::invalid_argument("canonical_graph: more than 16 vertices");
    }
    if (g.size() < 2) return g;
    Canonicalizer c(g);
    const auto order = c.run();
    return g.relabeled(order);
}

bool is_canonical(const WeightedIntersectionGraph& g) { return canonical_graph(g) == g; }

std::vector<WeightedIntersectionGraph> enumerate_graphs(std::size_t n, Weight total, Weight min_weight) {
    if (n < 2) throw std::invalid_argument("enumerate_graphs: need at least two vertices");
    if (n > kMaxCanonicalVertices) throw std::invalid_argument("enumerate_graphs: more than 16 vertices");
    const Weight edges = n * (n - 1) / 2;
    if (min_weight * edges > total) return {};
    OrderlyGenerator gen{n, total, min_weight, WeightedIntersectionGraph(n), {}};
    gen.fill(1, 0, total);
    std::sort(gen.out.begin(), gen.out.end());
    return gen.out;
}

bool quadruple_realizability_filter(const WeightedIntersectionGraph& g) {
    if (g.size() != 4) throw std::invalid_argument("quadruple filter: graph must have 4 vertices");
    bool unit = false;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (g.weight(i, j) == 0) throw std::invalid_argument("quadruple filter: zero weight");
            unit = unit || g.weight(i, j) == 1;
        }
    }
    if (!unit) throw NoUnitEdge();

    std::array<std::size_t, 4> p{0, 1, 2, 3};
    do {
        auto w = [&](std::size_t i, std::size_t j) { return g.weight(p[i - 1], p[j - 1]); };
        if (w(1, 2) != 1) continue;
        const Weight x = w(2, 3) * w(1, 4);
        const Weight y = w(1, 3) * w(2, 4);
        const Weight diff = x > y ? x - y : y - x;
        if (w(3, 4) == diff || w(3, 4) == x + y) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

std::uint64_t turan_bound(std::uint64_t k) {
    if (k < 3) throw std::invalid_argument("turan_bound: k must be at least 3");
    return (k * (k - 2) + 3) / 4;
}

std::string to_dot(const WeightedIntersectionGraph& g, const std::string& name,
                   const std::vector<std::string>& labels) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        os << "  " << i + 1;
        if (i < labels.size()) os << " [xlabel=\"" << labels[i] << "\"]";
        os << ";\n";
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            const Weight w = g.weight(i, j);
            if (w == 0) continue;
            os << "  " << i + 1 << " -- " << j + 1;
            if (w != 1) os << " [label=\"" << w << "\"]";
            os << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace crn::graph
