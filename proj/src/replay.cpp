// Certificate replay. Everything here is recomputed from the certificate's
// own fields; nothing calls into the derivation code.

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "crn/certificate.hpp"

namespace crn::cert {

namespace {

struct Mismatch {
    std::string reason;
};

[[noreturn]] void fail(const std::string& why) { throw Mismatch{why}; }

void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
}

Int ceil_div(Int num, Int den) {
    expect(den > 0 && num >= 0, "ceil_div: bad operands");
    return static_cast<Int>((static_cast<__int128>(num) + den - 1) / den);
}

bool is_lower(const BoundCertificate& p) { return p.claim.rel == Relation::at_least || p.claim.rel == Relation::equal; }

void expect_arity(const BoundCertificate& c, std::size_t n) {
    expect(c.premises.size() == n, "arity mismatch: rule " + c.rule + " expects " + std::to_string(n) +
                                       " premises, got " + std::to_string(c.premises.size()));
}

void expect_claim(const BoundCertificate& c, Int genus, Relation rel, const std::string& scope) {
    expect(c.claim.genus == genus, "genus must be " + std::to_string(genus));
    expect(c.claim.rel == rel, "relation must be " + to_string(rel));
    expect(c.claim.scope == scope, "scope must be " + scope + ", got " + c.claim.scope);
}

void expect_value(const BoundCertificate& c, Int recomputed) {
    expect(c.claim.value == recomputed,
           "claimed value " + std::to_string(c.claim.value) + " but rule yields " + std::to_string(recomputed));
}

const BoundCertificate& premise(const BoundCertificate& c, std::size_t i) { return *c.premises.at(i); }

void expect_lower_premise(const BoundCertificate& p, Int genus, Int k, std::initializer_list<const char*> scopes,
                          const std::string& what) {
    expect(is_lower(p), what + ": premise must be a lower bound");
    expect(p.claim.genus == genus, what + ": premise genus must be " + std::to_string(genus));
    expect(p.claim.k == k, what + ": premise must be about " + std::to_string(k) + " curves, got " +
                               std::to_string(p.claim.k));
    bool ok = false;
    for (const char* s : scopes) ok = ok || p.claim.scope == s;
    expect(ok, what + ": premise scope " + p.claim.scope + " not admissible");
}

// Axiom tables.
constexpr std::array<Int, 7> kTorusValues{0, 0, 1, 3, 7, 14, 24};

Int closed_form_value(Int k, Int g) {
    if (k <= 3 * g - 3) return 0;
    if (k <= 4 * g - 3) return k - (3 * g - 3);
    return g + 2 * (k - (4 * g - 3));
}

// Minimum number of edges of a graph on 4 vertices with no independent
// triple and no induced pair of disjoint edges, by enumeration.
Int min_edges_four_no_star() {
    const std::array<std::array<int, 2>, 6> pairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    Int best = 6;
    for (int mask = 0; mask < 64; ++mask) {
        auto adj = [&](int a, int b) {
            for (int e = 0; e < 6; ++e) {
                if ((pairs[e][0] == a && pairs[e][1] == b) || (pairs[e][0] == b && pairs[e][1] == a)) {
                    return ((mask >> e) & 1) != 0;
                }
            }
            return false;
        };
        bool bad = false;
        for (int a = 0; a < 4 && !bad; ++a)
            for (int b = a + 1; b < 4 && !bad; ++b)
                for (int c = b + 1; c < 4 && !bad; ++c)
                    bad = !adj(a, b) && !adj(a, c) && !adj(b, c);
        // Perfect matchings {ab, cd}: edges ab, cd present, no edge across.
        const std::array<std::array<int, 4>, 3> matchings{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
        for (const auto& mt : matchings) {
            if (bad) break;
            const int a = mt[0], b = mt[1], c = mt[2], d = mt[3];
            bad = adj(a, b) && adj(c, d) && !adj(a, c) && !adj(a, d) && !adj(b, c) && !adj(b, d);
        }
        if (!bad) best = std::min<Int>(best, __builtin_popcount(mask));
    }
    return best;
}

using RuleCheck = std::function<void(const BoundCertificate&)>;

void check_torus_known(const BoundCertificate& c) {
    expect_arity(c, 0);
    expect_claim(c, 1, Relation::equal, "all");
    expect(c.param("k") == c.claim.k, "parameter k disagrees with claim");
    expect(c.claim.k >= 0 && c.claim.k <= 6, "torus values are known only for k <= 6");
    expect_value(c, kTorusValues[static_cast<std::size_t>(c.claim.k)]);
}

void check_closed_form(const BoundCertificate& c) {
    expect_arity(c, 0);
    const Int g = c.param("g"), k = c.param("k");
    expect_claim(c, g, Relation::equal, "all");
    expect(k == c.claim.k, "parameter k disagrees with claim");
    expect(g >= 2, "closed form needs genus >= 2");
    expect(k >= 0 && k <= 5 * g - 3, "closed form covers k <= 5g-3 only");
    expect_value(c, closed_form_value(k, g));
}

void check_construction(const BoundCertificate& c) {
    expect_arity(c, 0);
    expect(c.claim.rel == Relation::at_most, "construction gives an upper bound");
    expect(c.claim.scope == "all", "construction scope must be all");
    expect(!c.label.empty(), "construction needs a name");
    const Int n = c.param("n");
    expect(n == c.claim.k, "matrix size disagrees with claim");
    expect(static_cast<Int>(c.data.size()) == n * (n - 1) / 2, "upper triangle has wrong length");
    Int sum = 0;
    for (Int e : c.data) {
        expect(e >= 0, "negative intersection number");
        sum += e;
    }
    expect(c.param("digest") == matrix_digest(c.data), "matrix digest mismatch");
    expect_value(c, sum);
}

void check_hypothesis(const BoundCertificate& c) { expect_arity(c, 0); }

void check_count_step(const BoundCertificate& c) {
    expect_arity(c, 1);
    const auto& p = premise(c, 0);
    const Int k = c.param("k"), m = c.param("m");
    expect(k == c.claim.k, "parameter k disagrees with claim");
    expect(c.claim.rel == Relation::at_least, "counting gives a lower bound");
    expect(2 <= m && m <= k, "counting needs 2 <= m <= k");
    expect_lower_premise(p, c.claim.genus, m, {c.claim.scope.c_str()}, "count_step");
    expect(p.claim.value >= 0, "negative premise");
    expect_value(c, ceil_div(k * (k - 1) * p.claim.value, m * (m - 1)));
}

void check_turan(const BoundCertificate& c) {
    expect_arity(c, 0);
    expect_claim(c, 2, Relation::at_least, "no3disjoint");
    const Int k = c.param("k");
    expect(k == c.claim.k && k >= 3, "turan bound needs k >= 3");
    // Edges of the intersection graph >= C(k,2) - ex(k, triangle).
    expect_value(c, k * (k - 1) / 2 - (k * k) / 4);
}

void check_no_star_four(const BoundCertificate& c) {
    expect_arity(c, 0);
    expect_claim(c, 2, Relation::at_least, "no3disjoint_nostar");
    expect(c.claim.k == 4, "four-curve axiom");
    expect_value(c, min_edges_four_no_star());
}

void check_split_min(const BoundCertificate& c) {
    const Int j = c.param("j");
    expect_claim(c, 2, Relation::at_least, "punctured_pair");
    expect(j == c.claim.k && j >= 0, "parameter j disagrees with claim");
    expect_arity(c, static_cast<std::size_t>(j + 1));
    std::vector<Int> torus(static_cast<std::size_t>(j + 1));
    for (Int i = 0; i <= j; ++i) {
        const auto& p = premise(c, static_cast<std::size_t>(i));
        expect_lower_premise(p, 1, i, {"all"}, "split_min");
        torus[static_cast<std::size_t>(i)] = p.claim.value;
    }
    Int best = -1, arg = -1;
    for (Int l = 0; l <= j; ++l) {
        const Int v = torus[static_cast<std::size_t>(j - l)] + torus[static_cast<std::size_t>(l)];
        if (arg < 0 || v < best) best = v, arg = l;
    }
    expect(c.param("l") == arg, "recorded minimizing l is " + std::to_string(c.param("l")) + ", replay finds " +
                                    std::to_string(arg));
    expect_value(c, best);
}

void check_estimation_i(const BoundCertificate& c) {
    expect_arity(c, 1);
    expect_claim(c, 2, Relation::at_least, "separating_m");
    const Int k = c.param("k"), m = c.param("m");
    expect(k == c.claim.k && k <= 12 && k >= 1, "estimation needs 1 <= k <= 12");
    expect(0 <= m && m <= k - 1, "m out of range");
    expect_lower_premise(premise(c, 0), 2, k - 1, {"all"}, "estimation_i");
    expect_value(c, 2 * m + premise(c, 0).claim.value);
}

void check_estimation_ii(const BoundCertificate& c) {
    expect_arity(c, 2);
    expect_claim(c, 2, Relation::at_least, "separating_m");
    const Int k = c.param("k"), m = c.param("m");
    expect(k == c.claim.k && k <= 12 && k >= 1, "estimation needs 1 <= k <= 12");
    expect(0 <= m && m <= k - 1, "m out of range");
    expect(c.param("meet_term") == 2 * m, "meet term must be 2m");
    expect(c.param("outer_term") == m * (k - m - 3), "outer term must be m(k-m-3)");
    expect(c.param("cross") == c.param("meet_term") + c.param("outer_term"), "cross term must be meet + outer");
    expect_lower_premise(premise(c, 0), 2, m, {"all"}, "estimation_ii crn(M)");
    expect_lower_premise(premise(c, 1), 2, k - m - 1, {"punctured_pair"}, "estimation_ii split");
    expect_value(c, premise(c, 0).claim.value + c.param("cross") + premise(c, 1).claim.value);
}

void check_separating_case(const BoundCertificate& c) {
    expect_arity(c, 2);
    expect_claim(c, 2, Relation::at_least, "separating_m");
    const Int k = c.param("k"), m = c.param("m");
    expect(k == c.claim.k, "parameter k disagrees with claim");
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& p = premise(c, i);
        expect_lower_premise(p, 2, k, {"separating_m"}, "separating_case");
        expect(p.param("m") == m, "separating_case: premise is about a different m");
    }
    expect(premise(c, 0).rule == "estimation_i" && premise(c, 1).rule == "estimation_ii",
           "separating_case combines estimation_i and estimation_ii");
    expect_value(c, std::max(premise(c, 0).claim.value, premise(c, 1).claim.value));
}

void check_no3disjoint_star_m(const BoundCertificate& c) {
    expect_arity(c, 2);
    expect_claim(c, 2, Relation::at_least, "no3disjoint_star");
    const Int k = c.param("k"), m = c.param("m");
    expect(k == c.claim.k, "parameter k disagrees with claim");
    expect(0 <= m && m <= 5 && m <= k, "m out of range");
    expect(c.param("cross") == m * (k - 1 - m), "cross term must be m(k-1-m)");
    if (m >= 3) {
        expect_lower_premise(premise(c, 0), 2, m, {"no3disjoint"}, "crn(M)");
    } else {
        expect_lower_premise(premise(c, 0), 2, m, {"all", "no3disjoint"}, "crn(M)");
    }
    expect_lower_premise(premise(c, 1), 2, k - m, {"punctured_pair"}, "split");
    expect_value(c, premise(c, 0).claim.value + premise(c, 1).claim.value + c.param("cross"));
}

void check_no3disjoint_cases(const BoundCertificate& c) {
    expect_arity(c, 7);
    expect_claim(c, 2, Relation::at_least, "no3disjoint");
    const Int k = c.param("k");
    expect(k == c.claim.k, "parameter k disagrees with claim");
    Int best = -1;
    for (Int m = 0; m <= 5; ++m) {
        const auto& p = premise(c, static_cast<std::size_t>(m));
        expect_lower_premise(p, 2, k, {"no3disjoint_star"}, "case 1");
        expect(p.param("m") == m, "case 1 premises must be ordered by m");
        best = best < 0 ? p.claim.value : std::min(best, p.claim.value);
    }
    const auto& star_free = premise(c, 6);
    expect_lower_premise(star_free, 2, k, {"no3disjoint_nostar"}, "case 2");
    expect_value(c, std::min(best, star_free.claim.value));
}

void check_nonsep_triple(const BoundCertificate& c) {
    expect_arity(c, 2);
    expect_claim(c, 2, Relation::at_least, "nonseparating");
    const Int j = c.param("j");
    expect(j == c.claim.k && j >= 3, "parameter j disagrees with claim");
    expect(c.param("triple_term") == 2 * (j - 3), "triple term must be 2(j-3)");
    expect_lower_premise(premise(c, 0), 2, j, {"no3disjoint"}, "no disjoint triple");
    expect_lower_premise(premise(c, 1), 2, j - 3, {"nonseparating", "all"}, "remaining curves");
    expect_value(c, std::min(premise(c, 0).claim.value, c.param("triple_term") + premise(c, 1).claim.value));
}

void check_separating_forced(const BoundCertificate& c) {
    expect_arity(c, 2);
    expect_claim(c, 2, Relation::at_least, "nonseparating");
    const Int k = c.param("k"), upper = c.param("upper");
    expect(k == c.claim.k, "parameter k disagrees with claim");
    const auto& nonsep = premise(c, 0);
    const auto& up = premise(c, 1);
    expect(nonsep.rule == "nonsep_triple", "first premise must be a nonsep_triple bound");
    expect_lower_premise(nonsep, 2, k, {"nonseparating"}, "separating_forced");
    expect(up.claim.rel == Relation::at_most && up.claim.genus == 2 && up.claim.k == k && up.claim.scope == "all",
           "second premise must be an upper bound for crn(k;2)");
    expect(up.claim.value == upper, "recorded upper bound disagrees with premise");
    expect(c.param("triple_term") == 2 * (k - 3), "triple term must be 2(k-3)");
    expect(c.param("remaining_budget") == upper - 2 * (k - 3), "remaining budget must be U - 2(k-3)");
    expect(nonsep.premises.size() == 2, "nonsep_triple premise malformed");
    expect(c.param("remaining_bound") == nonsep.premises[1]->claim.value, "remaining bound disagrees with premise");
    expect(c.param("triple_free_bound") == nonsep.premises[0]->claim.value,
           "triple-free bound disagrees with premise");
    expect(c.param("triple_free_bound") > upper, "case not closed: no-disjoint-triple bound " +
                                                     std::to_string(c.param("triple_free_bound")) + " <= " +
                                                     std::to_string(upper));
    expect(c.param("remaining_bound") > c.param("remaining_budget"),
           "case not closed: remaining curves need " + std::to_string(c.param("remaining_bound")) +
               " but only " + std::to_string(c.param("remaining_budget")) + " are available");
    expect_value(c, nonsep.claim.value);
}

// Premises: `context` leading facts (verified on their own, available to
// later cite nodes), then the separating cases m = 0..k-1, then the
// nonseparating case.
void check_genus2_cases(const BoundCertificate& c) {
    expect_claim(c, 2, Relation::at_least, "all");
    const Int k = c.param("k"), context = c.param("context");
    expect(k == c.claim.k && k >= 1 && k <= 12, "case analysis covers 1 <= k <= 12");
    expect(context >= 0, "negative context count");
    expect_arity(c, static_cast<std::size_t>(context + k + 1));
    const auto at = [&](Int i) -> const BoundCertificate& { return premise(c, static_cast<std::size_t>(context + i)); };
    Int best = -1, arg = -1;
    for (Int m = 0; m < k; ++m) {
        const auto& p = at(m);
        expect(p.rule == "separating_case", "premise " + std::to_string(m) + " must be a separating_case");
        expect_lower_premise(p, 2, k, {"separating_m"}, "separating case");
        expect(p.param("m") == m, "separating cases must be ordered by m");
        if (arg < 0 || p.claim.value < best) best = p.claim.value, arg = m;
    }
    const auto& nonsep = at(k);
    expect_lower_premise(nonsep, 2, k, {"nonseparating"}, "nonseparating case");
    if (nonsep.claim.value < best) best = nonsep.claim.value, arg = k;
    expect(c.param("argmin") == arg, "recorded argmin disagrees with replay");
    expect_value(c, best);
}

const std::unordered_map<std::string, RuleCheck>& rules() {
    static const std::unordered_map<std::string, RuleCheck> table{
        {"hypothesis", check_hypothesis},
        {"torus_known", check_torus_known},
        {"closed_form", check_closed_form},
        {"construction", check_construction},
        {"count_step", check_count_step},
        {"turan", check_turan},
        {"no_star_four", check_no_star_four},
        {"split_min", check_split_min},
        {"estimation_i", check_estimation_i},
        {"estimation_ii", check_estimation_ii},
        {"separating_case", check_separating_case},
        {"no3disjoint_star_m", check_no3disjoint_star_m},
        {"no3disjoint_cases", check_no3disjoint_cases},
        {"nonsep_triple", check_nonsep_triple},
        {"separating_forced", check_separating_forced},
        {"genus2_cases", check_genus2_cases},
    };
    return table;
}

std::string describe(const BoundCertificate& c, const std::string& path) {
    std::ostringstream os;
    os << path << " (rule=" << c.rule << ", g=" << c.claim.genus << ", k=" << c.claim.k << ", "
       << to_string(c.claim.rel) << " " << c.claim.value << ", scope=" << c.claim.scope << ")";
    return os.str();
}

using ClaimKey = std::tuple<Int, Int, int, Int, std::string>;

ClaimKey key_of(const Claim& c) { return {c.genus, c.k, static_cast<int>(c.rel), c.value, c.scope}; }

// A cite node restates a claim already verified earlier in post-order, so
// shared sub-derivations are serialized once.
void check_cite(const BoundCertificate& c, const std::set<ClaimKey>& verified) {
    expect_arity(c, 0);
    expect(c.claim.rel != Relation::at_most, "only lower bounds and values may be cited");
    expect(verified.count(key_of(c.claim)) != 0, "cited claim was not established earlier in the certificate");
}

bool walk(const BoundCertificate& c, const std::string& path, ReplayReport& report, std::set<ClaimKey>& verified) {
    for (std::size_t i = 0; i < c.premises.size(); ++i) {
        if (!c.premises[i]) {
            report.ok = false;
            report.failing_node = path + "/premises[" + std::to_string(i) + "]";
            report.reason = "null premise";
            return false;
        }
        if (!walk(*c.premises[i], path + "/premises[" + std::to_string(i) + "]", report, verified)) return false;
    }
    ++report.nodes_checked;
    const auto it = rules().find(c.rule);
    try {
        if (c.rule == "cite") {
            check_cite(c, verified);
        } else {
            if (it == rules().end()) fail("unknown rule name '" + c.rule + "'");
            it->second(c);
        }
    } catch (const Mismatch& m) {
        report.ok = false;
        report.failing_node = describe(c, path);
        report.reason = m.reason;
        return false;
    } catch (const std::exception& e) {
        report.ok = false;
        report.failing_node = describe(c, path);
        report.reason = e.what();
        return false;
    }
    if (c.rule == "hypothesis") {
        ++report.hypotheses;
    } else {
        verified.insert(key_of(c.claim));
    }
    return true;
}

}  // namespace

ReplayReport replay(const BoundCertificate& c) {
    ReplayReport report;
    std::set<ClaimKey> verified;
    walk(c, "root", report, verified);
    return report;
}

bool replay_ok(const BoundCertificate& c) { return replay(c).ok; }

}  // namespace crn::cert
