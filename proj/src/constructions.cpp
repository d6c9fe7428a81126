#include "crn/constructions.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#ifndef CRN_DATA_DIR
#define CRN_DATA_DIR "data"
#endif

namespace crn::build {

using graph::Weight;
using graph::WeightedIntersectionGraph;
using torus::PrimitiveClass;

void CurveSystemModel::validate() const {
    const std::size_t n = labels.size();
    if (separating.size() != n) throw std::invalid_argument("model: separating flags do not match labels");
    if (graph.size() != n) throw std::invalid_argument("model: graph size does not match labels");
    if (!coords.empty() && coords.size() != n) throw std::invalid_argument("model: coordinates do not match labels");
    if (genus < 1) throw std::invalid_argument("model: genus must be at least 1");
}

CurveSystemModel CurveSystemModel::prefix(std::size_t k) const {
    if (k > size()) throw std::invalid_argument("prefix: k exceeds system size");
    CurveSystemModel out;
    out.genus = genus;
    out.name = name + "[:" + std::to_string(k) + "]";
    out.labels.assign(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(k));
    out.separating.assign(separating.begin(), separating.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<std::size_t> first(k);
    std::iota(first.begin(), first.end(), 0);
    out.graph = graph.induced(first);
    if (!coords.empty()) out.coords.assign(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
}

namespace {

// Curves on distinct handles, or without coordinates, are disjoint.
WeightedIntersectionGraph graph_from_coords(const std::vector<std::optional<HandleCoord>>& coords) {
    WeightedIntersectionGraph g(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        for (std::size_t j = i + 1; j < coords.size(); ++j) {
            if (!coords[i] || !coords[j] || coords[i]->handle != coords[j]->handle) continue;
            g.set_weight(i, j, torus::intersection_number(coords[i]->curve, coords[j]->curve));
        }
    }
    return g;
}

}  // namespace

CurveSystemModel genus_g_family(int g, int k) {
    if (g < 2) throw std::invalid_argument("genus_g_family: genus must be at least 2");
    if (k < 3 * g - 3 || k > 5 * g - 3) throw std::invalid_argument("genus_g_family: need 3g-3 <= k <= 5g-3");
    CurveSystemModel m;
    m.genus = g;
    m.name = "genus_g_family(" + std::to_string(g) + "," + std::to_string(k) + ")";
    auto add = [&](std::string label, bool sep, std::optional<HandleCoord> c) {
        m.labels.push_back(std::move(label));
        m.separating.push_back(sep);
        m.coords.push_back(c);
    };
    for (int i = 1; i <= 2 * g - 3; ++i) add("alpha" + std::to_string(i), true, std::nullopt);
    const std::array<std::pair<const char*, PrimitiveClass>, 3> kinds{{{"beta", PrimitiveClass::make(0, 1)},
                                                                         {"gamma", PrimitiveClass::make(1, 0)},
                                                                         {"delta", PrimitiveClass::make(1, 1)}}};
    for (const auto& [prefix, curve] : kinds) {
        for (int i = 1; i <= g; ++i) add(prefix + std::to_string(i), false, HandleCoord{i - 1, curve});
    }
    m.graph = graph_from_coords(m.coords);
    CurveSystemModel out = m.prefix(static_cast<std::size_t>(k));
    out.name = m.name;
    return out;
}

CurveSystemModel genus2_family(int k) {
    if (k < 1 || k > 11) throw std::invalid_argument("genus2_family: need 1 <= k <= 11");
    CurveSystemModel m;
    m.genus = 2;
    m.name = "genus2_family(" + std::to_string(k) + ")";
    m.labels.push_back("delta1");
    m.separating.push_back(true);
    m.coords.push_back(std::nullopt);
    const auto& w = torus::reference_curves();
    std::array<std::size_t, 2> used{0, 0};
    for (int i = 2; i <= k; ++i) {
        const int side = (i - 2) % 2;
        m.labels.push_back("delta" + std::to_string(i));
        m.separating.push_back(false);
        m.coords.push_back(HandleCoord{side, w[used[static_cast<std::size_t>(side)]++]});
    }
    m.graph = graph_from_coords(m.coords);
    return m;
}

torus::TorusSystem side_system(const CurveSystemModel& m, int handle) {
    std::vector<PrimitiveClass> curves;
    for (const auto& c : m.coords) {
        if (c && c->handle == handle) curves.push_back(c->curve);
    }
    return torus::TorusSystem::make(std::move(curves));
}

std::vector<AssetCheck> validate_twelve_asset(const AssetMatrix& m) {
    std::vector<AssetCheck> out;
    bool shape = m.size() == 12;
    for (const auto& row : m) shape = shape && row.size() == 12;
    out.push_back({"shape", shape, shape ? "" : "expected 12 rows of 12 entries"});
    if (!shape) return out;

    auto first_bad = [&](auto pred) -> std::string {
        for (std::size_t i = 0; i < 12; ++i)
            for (std::size_t j = 0; j < 12; ++j)
                if (pred(i, j)) return "at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        return "";
    };
    std::string bad = first_bad([&](std::size_t i, std::size_t j) { return m[i][j] != m[j][i]; });
    out.push_back({"symmetry", bad.empty(), bad});
    bad = first_bad([&](std::size_t i, std::size_t j) { return i == j && m[i][j] != 0; });
    out.push_back({"zero_diagonal", bad.empty(), bad});
    bad = first_bad([&](std::size_t i, std::size_t j) { return m[i][j] != 0 && m[i][j] != 1; });
    out.push_back({"entries_0_1", bad.empty(), bad});

    std::int64_t total = 0;
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = i + 1; j < 12; ++j) total += m[i][j];
    out.push_back({"total_36", total == 36, "total " + std::to_string(total)});

    std::string rows;
    for (std::size_t i = 0; i < 12; ++i) {
        const std::int64_t s = std::accumulate(m[i].begin(), m[i].end(), std::int64_t{0});
        if (s != 6 && rows.empty()) rows = "row " + std::to_string(i + 1) + " sums to " + std::to_string(s);
    }
    out.push_back({"row_sums_6", rows.empty(), rows});
    return out;
}

AssetMatrix parse_twelve_asset(const std::string& text) {
    AssetMatrix m;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream in(line);
        std::vector<std::int64_t> row;
        std::string tok;
        while (in >> tok) {
            std::size_t used = 0;
            std::int64_t v = 0;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) throw AssetInvariantError("shape", "not an integer: '" + tok + "'");
            row.push_back(v);
        }
        if (!row.empty()) m.push_back(std::move(row));
    }
    return m;
}

AssetMatrix load_twelve_asset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw AssetInvariantError("shape", "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_twelve_asset(buf.str());
}

std::string twelve_asset_path() {
    if (const char* env = std::getenv("CRN_TWELVE_ASSET"); env != nullptr && *env != '\0') return env;
    return std::string(CRN_DATA_DIR) + "/twelve_curves.txt";
}

CurveSystemModel twelve_curve_system() { return twelve_curve_system(twelve_asset_path()); }

CurveSystemModel twelve_curve_system(const std::string& path) { return twelve_curve_system(load_twelve_asset(path)); }

CurveSystemModel twelve_curve_system(const AssetMatrix& m) {
    for (const auto& c : validate_twelve_asset(m)) {
        if (!c.passed) throw AssetInvariantError(c.name, c.detail);
    }
    std::vector<std::vector<Weight>> rows(12, std::vector<Weight>(12));
    for (std::size_t i = 0; i < 12; ++i)
        for (std::size_t j = 0; j < 12; ++j) rows[i][j] = static_cast<Weight>(m[i][j]);
    CurveSystemModel s;
    s.genus = 2;
    s.name = "twelve_curve_system";
    for (int i = 1; i <= 12; ++i) s.labels.push_back("gamma" + std::to_string(i));
    s.separating.assign(12, false);
    s.graph = WeightedIntersectionGraph::from_rows(rows);
    return s;
}

namespace {

bool disjoint_triple(const WeightedIntersectionGraph& g, const Triple& t) {
    return g.weight(t[0], t[1]) == 0 && g.weight(t[0], t[2]) == 0 && g.weight(t[1], t[2]) == 0;
}

// Every listed curve meets the triple exactly twice in total.
bool meets_twice(const WeightedIntersectionGraph& g, const Triple& t, const std::vector<std::size_t>& others) {
    for (std::size_t v : others) {
        if (g.weight(v, t[0]) + g.weight(v, t[1]) + g.weight(v, t[2]) != 2) return false;
    }
    return true;
}

std::vector<Triple> triples_of(const std::vector<std::size_t>& pool) {
    std::vector<Triple> out;
    for (std::size_t a = 0; a < pool.size(); ++a)
        for (std::size_t b = a + 1; b < pool.size(); ++b)
            for (std::size_t c = b + 1; c < pool.size(); ++c) out.push_back({pool[a], pool[b], pool[c]});
    return out;
}

std::vector<std::size_t> without(const std::vector<std::size_t>& pool, const Triple& t) {
    std::vector<std::size_t> out;
    for (std::size_t v : pool) {
        if (v != t[0] && v != t[1] && v != t[2]) out.push_back(v);
    }
    return out;
}

bool unit_triangle(const WeightedIntersectionGraph& g, const Triple& t) {
    return g.weight(t[0], t[1]) == 1 && g.weight(t[0], t[2]) == 1 && g.weight(t[1], t[2]) == 1;
}

}  // namespace

OneSystemReport one_system_check(const CurveSystemModel& s) {
    s.validate();
    OneSystemReport r;
    const auto& g = s.graph;
    r.total = g.total();
    r.max_weight = g.max_weight();
    r.is_one_system = r.max_weight <= 1;
    if (g.size() != 12) return r;

    std::vector<std::size_t> all(12);
    std::iota(all.begin(), all.end(), 0);
    std::optional<OneSystemReport> triangle_case;
    for (const Triple& a : triples_of(all)) {
        if (!disjoint_triple(g, a)) continue;
        const auto rest_a = without(all, a);
        if (!meets_twice(g, a, rest_a)) continue;
        for (const Triple& b : triples_of(rest_a)) {
            if (!disjoint_triple(g, b)) continue;
            const auto rest_b = without(rest_a, b);
            if (!meets_twice(g, b, rest_b)) continue;
            for (const Triple& c : triples_of(rest_b)) {
                const auto rest_c = without(rest_b, c);
                const Triple d{rest_c[0], rest_c[1], rest_c[2]};
                if (disjoint_triple(g, c) && meets_twice(g, c, rest_c) && disjoint_triple(g, d)) {
                    r.decomposition = "four_disjoint_triples";
                    r.triples = {a, b, c, d};
                    return r;
                }
                if (!triangle_case && unit_triangle(g, c) && unit_triangle(g, d)) {
                    bool across = false;
                    for (std::size_t x : c)
                        for (std::size_t y : d) across = across || g.weight(x, y) != 0;
                    if (!across) {
                        OneSystemReport t = r;
                        t.decomposition = "triangle_pair";
                        t.triples = {a, b, c, d};
                        triangle_case = t;
                    }
                }
            }
        }
    }
    return triangle_case ? *triangle_case : r;
}

cert::CertPtr upper_certificate(const CurveSystemModel& s) {
    s.validate();
    auto c = std::make_shared<cert::BoundCertificate>();
    const auto n = static_cast<cert::Int>(s.size());
    c->claim = cert::Claim{s.genus, n, cert::Relation::at_most, static_cast<cert::Int>(s.crossing_number()), "all"};
    c->rule = "construction";
    for (Weight w : s.graph.upper_triangle()) c->data.push_back(static_cast<cert::Int>(w));
    c->params = {{"n", n}, {"digest", cert::matrix_digest(c->data)}};
    c->label = s.name;
    return c;
}

std::optional<CurveSystemModel> construction_for(int k, int g) {
    if (k < 1 || g < 2) return std::nullopt;
    if (g == 2) {
        if (k <= 11) return genus2_family(k);
        if (k == 12) return twelve_curve_system();
        return std::nullopt;
    }
    if (k > 5 * g - 3) return std::nullopt;
    if (k >= 3 * g - 3) return genus_g_family(g, k);
    CurveSystemModel m = genus_g_family(g, 3 * g - 3).prefix(static_cast<std::size_t>(k));
    return m;
}

bounds::Genus2Table build_table(int genus, int k_from, int k_to) {
    if (genus < 2) throw std::invalid_argument("build_table: genus must be at least 2");
    if (k_from < 1 || k_from > k_to) throw std::invalid_argument("build_table: bad k range");
    bounds::Genus2Table t;
    t.genus = genus;
    bounds::Genus2Derivation derivation;
    for (int k = k_from; k <= k_to; ++k) {
        bounds::TableRow row;
        row.k = k;
        if (genus == 2 && k <= 12) {
            for (int j = 1; j <= k; ++j) derivation.derive(j);
            row.lower = derivation.lower(k);
        } else {
            row.lower = bounds::lower_certificate(k, genus);
        }
        if (auto m = construction_for(k, genus)) {
            row.upper = upper_certificate(*m);
            row.construction = m->name;
        }
        row.settled = row.upper && row.upper->claim.value == row.lower->claim.value;
        t.rows.push_back(std::move(row));
    }
    return t;
}

bounds::Genus2Table assemble_table() {
    auto t = build_table(2, 4, 12);
    for (const auto& row : t.rows) {
        if (!row.settled) throw std::runtime_error("assemble_table: row k=" + std::to_string(row.k) + " is unsettled");
    }
    return t;
}

std::string table_csv(const bounds::Genus2Table& t) {
    std::ostringstream os;
    os << "k,lower,upper,settled,construction\n";
    for (const auto& row : t.rows) {
        os << row.k << ',' << row.lower->claim.value << ',';
        if (row.upper) os << row.upper->claim.value;
        os << ',' << (row.settled ? "true" : "false") << ',' << row.construction << '\n';
    }
    return os.str();
}

}  // namespace crn::build
