#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "check_command.hpp"
#include "crn/bounds.hpp"
#include "crn/constructions.hpp"
#include "crn/graph_lab.hpp"
#include "crn/torus_search.hpp"
#include "exit_codes.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace crn;
using namespace crn::tools;

struct BadInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::pair<int, int> parse_range(const std::string& s) {
    try {
        const auto dots = s.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const int k = std::stoi(s, &used);
            if (used != s.size()) throw BadInput("bad k range '" + s + "'");
            return {k, k};
        }
        const std::string lo = s.substr(0, dots), hi = s.substr(dots + 2);
        const int a = std::stoi(lo, &used);
        if (used != lo.size()) throw BadInput("bad k range '" + s + "'");
        const int b = std::stoi(hi, &used);
        if (used != hi.size()) throw BadInput("bad k range '" + s + "'");
        if (a < 1 || a > b) throw BadInput("bad k range '" + s + "'");
        return {a, b};
    } catch (const std::logic_error&) {
        throw BadInput("bad k range '" + s + "'");
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw BadInput("cannot write " + path);
    out << text;
}

void write_json(const Json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        write_file(path, j.dump(2) + "\n");
    }
}

Json matrix_json(const graph::WeightedIntersectionGraph& g) {
    Json rows = Json::array();
    for (const auto& r : g.rows()) rows.push_back(r);
    return rows;
}

// ---- table ------------------------------------------------------------

struct TableOpts {
    int genus = 2;
    std::string k = "4..12";
    std::string csv;
    std::string cert_dir;
    std::string format = "json";
};

int cmd_table(const TableOpts& o) {
    if (o.genus < 2) throw BadInput("table: genus must be at least 2");
    const auto [lo, hi] = parse_range(o.k);
    const auto table = build::build_table(o.genus, lo, hi);
    if (!o.cert_dir.empty()) std::filesystem::create_directories(o.cert_dir);
    Json j;
    j["genus"] = table.genus;
    j["rows"] = Json::array();
    bool all = true;
    for (const auto& row : table.rows) {
        Json r;
        r["k"] = row.k;
        r["lower"] = row.lower->claim.value;
        r["lower_rule"] = row.lower->rule;
        r["upper"] = row.upper ? Json(row.upper->claim.value) : Json(nullptr);
        r["settled"] = row.settled;
        r["construction"] = row.construction;
        if (!o.cert_dir.empty()) {
            const std::string stem = o.cert_dir + "/g" + std::to_string(o.genus) + "_k" + std::to_string(row.k);
            write_file(stem + "_lower.json", cert::to_json(*row.lower).dump(2) + "\n");
            r["lower_certificate"] = stem + "_lower.json";
            if (row.upper) {
                write_file(stem + "_upper.json", cert::to_json(*row.upper).dump(2) + "\n");
                r["upper_certificate"] = stem + "_upper.json";
            }
        }
        all = all && row.settled;
        j["rows"].push_back(r);
    }
    j["settled"] = all;
    if (!o.csv.empty()) write_file(o.csv, build::table_csv(table));
    if (o.format == "text") {
        std::cout << "genus " << o.genus << "\n";
        for (const auto& r : j["rows"]) {
            std::cout << "k=" << r["k"].get<int>() << "  lower=" << r["lower"].get<long long>() << "  upper="
                      << (r["upper"].is_null() ? std::string("none") : std::to_string(r["upper"].get<long long>()))
                      << (r["settled"].get<bool>() ? "  settled" : "  UNSETTLED");
            if (!r["construction"].get<std::string>().empty()) std::cout << "  " << r["construction"].get<std::string>();
            std::cout << "\n";
        }
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return all ? kExitOk : kExitUnsettled;
}

// ---- torus --------------------------------------------------------------

struct SearchOpts {
    int k = 0;
    std::optional<unsigned long long> upper;
    unsigned threads = 1;
    std::string out;
};

int cmd_torus_search(const SearchOpts& o) {
    if (o.k < 2) throw BadInput("torus search: k must be at least 2");
    torus::Count upper = 0;
    if (o.upper) {
        upper = *o.upper;
    } else if (o.k <= 6) {
        upper = torus::known_upper_bound(o.k);
    } else {
        throw BadInput("torus search: --upper is required for k >= 7");
    }
    const auto r = torus::search_min(o.k, upper, o.threads);
    Json j = torus::to_json(r);
    if (o.k >= 7) j["proven_lower_bound"] = bounds::torus_value_or_bound(o.k).value;
    write_json(j, o.out);
    return kExitOk;
}

int cmd_torus_spectrum(unsigned long long max_total, const std::string& out) {
    const auto s = torus::quadruple_crossing_spectrum(max_total);
    Json j;
    j["max_total"] = max_total;
    j["totals"] = s.totals;
    j["by_total"] = Json::array();
    for (auto total : s.totals) {
        Json t;
        t["total"] = total;
        t["orbit_count"] = s.orbits.at(total).size();
        t["graphs"] = Json::array();
        for (const auto& g : s.graphs.at(total)) t["graphs"].push_back(matrix_json(g));
        j["by_total"].push_back(t);
    }
    j["explored"] = s.explored;
    write_json(j, out);
    return kExitOk;
}

// ---- graphs -------------------------------------------------------------

struct GraphOpts {
    int n = 0;
    int total = 0;
    int min_weight = 0;
    bool filter = false;
    std::string dot;
};

int cmd_graphs(const GraphOpts& o) {
    if (o.n < 2 || o.n > 8) throw BadInput("graphs: n must be in 2..8");
    if (o.total < 0 || o.total > 40) throw BadInput("graphs: total must be in 0..40");
    if (o.filter && o.n != 4) throw BadInput("graphs: --filter needs n = 4");
    const graph::Weight min_w = o.filter ? std::max(1, o.min_weight) : static_cast<graph::Weight>(o.min_weight);
    const auto all = graph::enumerate_graphs(static_cast<std::size_t>(o.n), static_cast<graph::Weight>(o.total), min_w);
    Json j;
    j["n"] = o.n;
    j["total"] = o.total;
    j["min_weight"] = min_w;
    j["classes"] = all.size();
    j["graphs"] = Json::array();
    std::size_t survivors = 0;
    std::string dot;
    std::size_t idx = 0;
    for (const auto& g : all) {
        Json e;
        e["matrix"] = matrix_json(g);
        if (o.filter) {
            std::string verdict;
            try {
                verdict = graph::quadruple_realizability_filter(g) ? "pass" : "fail";
            } catch (const graph::NoUnitEdge&) {
                verdict = "no_unit_edge";
            }
            e["filter"] = verdict;
            if (verdict == "pass") ++survivors;
        }
        j["graphs"].push_back(e);
        dot += graph::to_dot(g, "G" + std::to_string(++idx));
    }
    if (o.filter) j["survivors"] = survivors;
    if (!o.dot.empty()) write_file(o.dot, dot);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

// ---- construct ------------------------------------------------------------

struct ConstructOpts {
    std::string family;
    int k = 0;
    int genus = 2;
    std::string dot;
    std::string cert;
};

int cmd_construct(const ConstructOpts& o) {
    build::CurveSystemModel m;
    if (o.family == "genus2") {
        m = build::genus2_family(o.k);
    } else if (o.family == "genus-g") {
        m = build::genus_g_family(o.genus, o.k);
    } else if (o.family == "twelve") {
        m = build::twelve_curve_system();
    } else {
        throw BadInput("construct: unknown family '" + o.family + "'");
    }
    const auto report = build::one_system_check(m);
    Json j;
    j["name"] = m.name;
    j["genus"] = m.genus;
    j["k"] = m.size();
    j["labels"] = m.labels;
    Json sep = Json::array();
    for (bool b : m.separating) sep.push_back(static_cast<bool>(b));
    j["separating"] = sep;
    j["matrix"] = matrix_json(m.graph);
    j["crossing_number"] = m.crossing_number();
    Json one;
    one["is_one_system"] = report.is_one_system;
    one["max_weight"] = report.max_weight;
    one["decomposition"] = report.decomposition;
    Json triples = Json::array();
    for (const auto& t : report.triples) triples.push_back({t[0] + 1, t[1] + 1, t[2] + 1});
    one["triples"] = triples;
    j["one_system"] = one;
    if (!o.dot.empty()) write_file(o.dot, graph::to_dot(m.graph, "system", m.labels));
    if (!o.cert.empty()) write_file(o.cert, cert::to_json(*build::upper_certificate(m)).dump(2) + "\n");
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

// ---- certify --------------------------------------------------------------

struct CertifyOpts {
    std::string kind;
    int k = 0;
    int genus = 2;
    std::optional<long long> upper;
    int from = 0;
    long long value = 0;
    std::string out;
};

int cmd_certify(const CertifyOpts& o) {
    cert::CertPtr c;
    if (o.kind == "genus2") {
        c = bounds::genus2_lower(o.k);
    } else if (o.kind == "lower") {
        c = bounds::lower_certificate(o.k, o.genus);
    } else if (o.kind == "no3disjoint") {
        c = bounds::no3disjoint_bound(o.k).certificate;
    } else if (o.kind == "nonseparating") {
        c = bounds::nonseparating_bound(o.k);
    } else if (o.kind == "separating") {
        if (o.upper) {
            c = bounds::separating_replay(o.k, *o.upper);
        } else {
            const auto m = build::construction_for(o.k, 2);
            if (!m) throw BadInput("certify separating: no construction for k; pass --upper");
            c = bounds::separating_replay(o.k, build::upper_certificate(*m));
        }
    } else if (o.kind == "chain") {
        c = bounds::count_chain(o.from, o.value, o.k, o.genus);
    } else if (o.kind == "closed-form") {
        c = bounds::closed_form_certificate(o.k, o.genus);
    } else if (o.kind == "torus") {
        c = bounds::torus_certificate(o.k);
    } else if (o.kind == "split") {
        c = bounds::split_certificate(o.k);
    } else if (o.kind == "construction") {
        const auto m = build::construction_for(o.k, o.genus);
        if (!m) throw BadInput("certify construction: none available");
        c = build::upper_certificate(*m);
    } else {
        throw BadInput("certify: unknown kind '" + o.kind + "'");
    }
    write_json(cert::to_json(*c), o.out);
    return kExitOk;
}

// ---- growth ---------------------------------------------------------------

int cmd_growth(int k, int genus) {
    const auto q = bounds::quadratic_lower_bound(k, genus);
    Json j;
    j["k"] = k;
    j["genus"] = genus;
    j["bound"] = q.str();
    j["floor"] = q.floor();
    j["ceil"] = q.ceil();
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal crossing numbers of curve systems on surfaces"};
    app.require_subcommand(1);

    TableOpts table;
    auto* t = app.add_subcommand("table", "settled table of crn(k;g)");
    t->add_option("--genus", table.genus, "surface genus")->default_val(2);
    t->add_option("--k", table.k, "k or k range A..B")->default_val("4..12");
    t->add_option("--csv", table.csv, "write CSV to file");
    t->add_option("--cert-dir", table.cert_dir, "write lower/upper certificates to directory");
    t->add_option("--format", table.format, "json or text")->check(CLI::IsMember({"json", "text"}));

    auto* tor = app.add_subcommand("torus", "torus searches");
    tor->require_subcommand(1);
    SearchOpts search;
    auto* ts = tor->add_subcommand("search", "exhaustive search for crn(k;1)");
    ts->add_option("--k", search.k, "number of curves")->required();
    ts->add_option("--upper", search.upper, "known upper bound (required for k >= 7)");
    ts->add_option("--threads", search.threads, "worker threads, 0 for all cores")->default_val(1);
    ts->add_option("--out", search.out, "write JSON to file");
    unsigned long long max_total = 9;
    std::string spectrum_out;
    auto* tsp = tor->add_subcommand("spectrum", "crossing numbers of four-curve systems");
    tsp->add_option("--max-total", max_total, "largest total, 7..11")->default_val(9);
    tsp->add_option("--out", spectrum_out, "write JSON to file");

    std::string check_path;
    auto* ch = app.add_subcommand("check", "replay a certificate file");
    ch->add_option("certificate", check_path, "certificate JSON")->required();

    GraphOpts graphs;
    auto* gr = app.add_subcommand("graphs", "weighted graphs up to isomorphism");
    gr->add_option("--n", graphs.n, "vertices")->required();
    gr->add_option("--total", graphs.total, "total weight")->required();
    gr->add_option("--min-weight", graphs.min_weight, "smallest allowed edge weight")->default_val(0);
    gr->add_flag("--filter", graphs.filter, "apply the four-curve realizability filter (weights >= 1)");
    gr->add_option("--dot", graphs.dot, "write DOT to file");

    CertifyOpts certify;
    auto* ce = app.add_subcommand("certify", "emit a bound certificate");
    ce->add_option("kind", certify.kind,
                   "genus2 | lower | no3disjoint | nonseparating | separating | chain | closed-form | torus | split | "
                   "construction")
        ->required();
    ce->add_option("--k", certify.k, "number of curves")->required();
    ce->add_option("--genus", certify.genus, "surface genus")->default_val(2);
    ce->add_option("--upper", certify.upper, "upper bound for separating");
    ce->add_option("--from", certify.from, "chain start");
    ce->add_option("--value", certify.value, "chain start value");
    ce->add_option("--out", certify.out, "write JSON to file");

    ConstructOpts construct;
    auto* co = app.add_subcommand("construct", "build an explicit curve system");
    co->add_option("family", construct.family, "genus2 | genus-g | twelve")->required();
    co->add_option("--k", construct.k, "number of curves");
    co->add_option("--genus", construct.genus, "surface genus for genus-g")->default_val(2);
    co->add_option("--dot", construct.dot, "write DOT to file");
    co->add_option("--cert", construct.cert, "write upper-bound certificate to file");

    int growth_k = 0, growth_g = 2;
    auto* gw = app.add_subcommand("growth", "quadratic lower bound k(k-1)/((3g-2)(3g-3))");
    gw->add_option("--k", growth_k, "number of curves")->required();
    gw->add_option("--genus", growth_g, "surface genus")->default_val(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*t) return cmd_table(table);
        if (*ts) return cmd_torus_search(search);
        if (*tsp) return cmd_torus_spectrum(max_total, spectrum_out);
        if (*ch) return run_check(check_path, std::cout, std::cerr);
        if (*gr) return cmd_graphs(graphs);
        if (*ce) return cmd_certify(certify);
        if (*co) return cmd_construct(construct);
        if (*gw) return cmd_growth(growth_k, growth_g);
    } catch (const build::AssetInvariantError& e) {
        std::cerr << e.what() << "\n";
        return kExitInvariant;
    } catch (const bounds::CaseNotClosed& e) {
        std::cerr << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitBadInput;
}
