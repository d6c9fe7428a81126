#include "crn/torus_search.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "crn/bounds.hpp"
#include "crn/graph_lab.hpp"

namespace crn::torus {

namespace {

Count choose2(Count r) { return r * (r - (r > 0 ? 1 : 0)) / 2; }

// Sign-normalized primitive vectors with |a|+|b| <= bound other than (1,0)
// and (0,1), ordered by (|a|+|b|, a, b).
std::vector<PrimitiveClass> candidates(Coord bound) {
    std::vector<PrimitiveClass> out;
    for (Coord a = 0; a <= bound; ++a) {
        for (Coord b = -(bound - a); b <= bound - a; ++b) {
            if (a == 0 && b <= 0) continue;
            if (std::gcd(a, b) != 1) continue;
            if ((a == 1 && b == 0) || (a == 0 && b == 1)) continue;
            out.push_back(PrimitiveClass::make(a, b));
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimitiveClass& x, const PrimitiveClass& y) {
        if (x.norm() != y.norm()) return x.norm() < y.norm();
        return x < y;
    });
    return out;
}

// Depth-first extension of {(1,0), (0,1), ...} by candidates in increasing
// order. With `tighten`, the bound drops to the best total found and only
// systems attaining it are kept; otherwise every system within the bound is
// reported.
class Explorer {
public:
    Explorer(const std::vector<PrimitiveClass>& cands, std::size_t k, Count bound, bool tighten)
        : cands_(cands), k_(k), best_(bound), tighten_(tighten) {
        chosen_.push_back(PrimitiveClass::make(1, 0));
        chosen_.push_back(PrimitiveClass::make(0, 1));
        partial_ = 1;
    }

    template <class Visit>
    void run_from(std::size_t first, std::size_t last, Visit&& visit) {
        if (chosen_.size() == k_) {
            record(visit);
            return;
        }
        for (std::size_t idx = first; idx < last; ++idx) {
            if (!try_push(idx)) {
                if (stop_) break;
                continue;
            }
            dfs(idx + 1, visit);
            pop();
        }
    }

    Count best() const { return best_; }
    std::vector<TorusSystem>& found() { return found_; }
    std::uint64_t explored() const { return explored_; }

private:
    // Adds cands_[idx] if the pruning bounds allow. Sets stop_ when no later
    // candidate can succeed either.
    bool try_push(std::size_t idx) {
        stop_ = false;
        const Count j = chosen_.size();
        const Count r = k_ - j;
        const PrimitiveClass& v = cands_[idx];
        const Count n = v.norm();
        // Every remaining curve has norm >= n and meets each other chosen curve.
        if (partial_ + r * n + r * (j - 2) + choose2(r) > best_) {
            stop_ = true;
            return false;
        }
        Count add = n;
        for (std::size_t i = 2; i < chosen_.size(); ++i) add += intersection_number(v, chosen_[i]);
        if (partial_ + add + (r - 1) * (n + j - 1) + choose2(r - 1) > best_) return false;
        ++explored_;
        chosen_.push_back(v);
        partial_ += add;
        adds_.push_back(add);
        return true;
    }

    void pop() {
        partial_ -= adds_.back();
        adds_.pop_back();
        chosen_.pop_back();
    }

    template <class Visit>
    void dfs(std::size_t start, Visit& visit) {
        if (chosen_.size() == k_) {
            record(visit);
            return;
        }
        for (std::size_t idx = start; idx < cands_.size(); ++idx) {
            if (!try_push(idx)) {
                if (stop_) break;
                continue;
            }
            dfs(idx + 1, visit);
            pop();
        }
    }

    template <class Visit>
    void record(Visit& visit) {
        if (tighten_) {
            if (partial_ < best_) {
                best_ = partial_;
                found_.clear();
            }
            found_.push_back(TorusSystem::make(chosen_));
        } else {
            visit(chosen_, partial_);
        }
    }

    const std::vector<PrimitiveClass>& cands_;
    std::size_t k_;
    Count best_;
    bool tighten_;
    bool stop_ = false;
    std::vector<PrimitiveClass> chosen_;
    std::vector<Count> adds_;
    Count partial_ = 0;
    std::vector<TorusSystem> found_;
    std::uint64_t explored_ = 0;
};

struct PartitionResult {
    bool any = false;
    Count best = 0;
    std::set<TorusSystem> canonical;
    std::uint64_t explored = 0;
};

}  // namespace

Count known_upper_bound(int k) {
    if (k < 1 || k > 6) throw std::invalid_argument("known_upper_bound: k must be in 1..6");
    return crossing_number(reference_system(static_cast<std::size_t>(k)));
}

SearchResult search_min(int k, Count upper, unsigned threads) {
    if (k < 2) throw std::invalid_argument("search_min: k must be at least 2");
    const auto proven = bounds::torus_value_or_bound(k).value;
    if (upper < static_cast<Count>(proven)) {
        throw std::invalid_argument("search_min: upper " + std::to_string(upper) + " is below the proven lower bound " +
                                    std::to_string(proven));
    }
    SearchResult result;
    result.k = k;
    result.coordinate_bound = static_cast<Coord>(upper) - 1;
    if (k == 2) {
        const auto sys = TorusSystem::make({PrimitiveClass::make(1, 0), PrimitiveClass::make(0, 1)});
        result.minimum = 1;
        result.minimizers = {canonical_system(sys)};
        result.orbit_count = 1;
        return result;
    }

    const auto cands = candidates(result.coordinate_bound);
    std::vector<PartitionResult> parts(cands.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t p = next++; p < cands.size(); p = next++) {
            Explorer ex(cands, static_cast<std::size_t>(k), upper, true);
            auto ignore = [](const std::vector<PrimitiveClass>&, Count) {};
            ex.run_from(p, p + 1, ignore);
            PartitionResult& out = parts[p];
            out.explored = ex.explored();
            out.any = !ex.found().empty();
            out.best = ex.best();
            for (const auto& s : ex.found()) out.canonical.insert(canonical_system(s));
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, cands.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    bool any = false;
    Count best = 0;
    for (const auto& p : parts) {
        result.explored += p.explored;
        if (p.any && (!any || p.best < best)) best = p.best, any = true;
    }
    if (!any) throw std::runtime_error("search_min: no " + std::to_string(k) + "-system within " + std::to_string(upper));
    std::set<TorusSystem> merged;
    for (const auto& p : parts) {
        if (p.any && p.best == best) merged.insert(p.canonical.begin(), p.canonical.end());
    }
    const Count kk = static_cast<Count>(k);
    if (kk * (kk - 1) <= best) {
        throw std::runtime_error("search_min: minimum " + std::to_string(best) +
                                 " does not force a once-intersecting pair; normalization unsound");
    }
    result.minimum = best;
    result.minimizers.assign(merged.begin(), merged.end());
    result.orbit_count = result.minimizers.size();
    return result;
}

QuadrupleSpectrum quadruple_crossing_spectrum(Count max_total) {
    if (max_total < 7 || max_total > 11) {
        throw std::invalid_argument("quadruple_crossing_spectrum: max_total must be in 7..11");
    }
    QuadrupleSpectrum out;
    const auto cands = candidates(static_cast<Coord>(max_total) - 1);
    Explorer ex(cands, 4, max_total, false);
    ex.run_from(0, cands.size(), [&](const std::vector<PrimitiveClass>& curves, Count total) {
        const auto sys = TorusSystem::make(curves);
        out.totals.insert(total);
        out.graphs[total].insert(graph::canonical_graph(intersection_graph(sys)));
        out.orbits[total].insert(canonical_system(sys));
    });
    out.explored = ex.explored();
    return out;
}

nlohmann::ordered_json to_json(const TorusSystem& s) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : s.curves()) arr.push_back({c.a(), c.b()});
    return arr;
}

nlohmann::ordered_json to_json(const SearchResult& r) {
    nlohmann::ordered_json j;
    j["k"] = r.k;
    j["minimum"] = r.minimum;
    j["coordinate_bound"] = r.coordinate_bound;
    j["orbit_count"] = r.orbit_count;
    j["minimizers"] = nlohmann::ordered_json::array();
    for (const auto& s : r.minimizers) j["minimizers"].push_back(to_json(s));
    j["explored"] = r.explored;
    return j;
}

}  // namespace crn::torus
