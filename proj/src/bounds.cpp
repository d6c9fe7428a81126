#include "crn/bounds.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace crn::bounds {

namespace {

using cert::BoundCertificate;
using cert::Claim;
using cert::Relation;

constexpr std::array<Int, 7> kTorusValues{0, 0, 1, 3, 7, 14, 24};
constexpr Int kNoStarFour = 3;

CertPtr node(Claim claim, std::string rule, std::map<std::string, Int> params, std::vector<CertPtr> premises = {}) {
    auto c = std::make_shared<BoundCertificate>();
    c->claim = std::move(claim);
    c->rule = std::move(rule);
    c->params = std::move(params);
    c->premises = std::move(premises);
    return c;
}

Claim lower_claim(Int genus, Int k, Int value, std::string scope) {
    return Claim{genus, k, Relation::at_least, value, std::move(scope)};
}

Int turan_value(Int k) { return k * (k - 1) / 2 - (k * k) / 4; }

CertPtr no_star_four() { return node(lower_claim(2, 4, kNoStarFour, "no3disjoint_nostar"), "no_star_four", {}); }

}  // namespace

Int count_bound(Int k, Int m, Int n) {
    if (m < 2 || m > k) throw std::invalid_argument("count_bound: need 2 <= m <= k");
    if (n < 0) throw std::invalid_argument("count_bound: negative n");
    const __int128 num = static_cast<__int128>(k) * (k - 1) * n;
    const __int128 den = static_cast<__int128>(m) * (m - 1);
    return static_cast<Int>((num + den - 1) / den);
}

CertPtr count_chain(const CertPtr& base, Int to_k) {
    const Claim& b = base->claim;
    if (b.rel == Relation::at_most) throw std::invalid_argument("count_chain: base must be a lower bound");
    if (b.k < 2 || b.k > to_k) throw std::invalid_argument("count_chain: need 2 <= from_m <= to_k");
    CertPtr cur = base;
    for (Int k = b.k + 1; k <= to_k; ++k) {
        const Int value = count_bound(k, k - 1, cur->claim.value);
        cur = node(lower_claim(b.genus, k, value, b.scope), "count_step", {{"k", k}, {"m", k - 1}}, {cur});
    }
    return cur;
}

CertPtr count_chain(Int from_m, Int n, Int to_k, Int genus, const std::string& scope) {
    if (from_m < 2 || from_m > to_k) throw std::invalid_argument("count_chain: need 2 <= from_m <= to_k");
    if (n < 0) throw std::invalid_argument("count_chain: negative n");
    return count_chain(node(lower_claim(genus, from_m, n, scope), "hypothesis", {}), to_k);
}

std::optional<Int> crn_closed_form(Int k, Int g) {
    if (g < 2) throw std::invalid_argument("crn_closed_form: genus must be at least 2");
    if (k < 0) throw std::invalid_argument("crn_closed_form: negative k");
    if (k <= 3 * g - 3) return 0;
    if (k <= 4 * g - 3) return k - (3 * g - 3);
    if (k <= 5 * g - 3) return g + 2 * (k - (4 * g - 3));
    return std::nullopt;
}

CertPtr closed_form_certificate(Int k, Int g) {
    const auto v = crn_closed_form(k, g);
    if (!v) throw std::invalid_argument("closed_form_certificate: k beyond 5g-3");
    return node(Claim{g, k, Relation::equal, *v, "all"}, "closed_form", {{"g", g}, {"k", k}});
}

TorusValue torus_value_or_bound(Int j) {
    if (j < 0) throw std::invalid_argument("torus_value_or_bound: negative j");
    if (j <= 6) return {kTorusValues[static_cast<std::size_t>(j)], true};
    Int v = kTorusValues[6];
    for (Int k = 7; k <= j; ++k) v = count_bound(k, k - 1, v);
    return {v, false};
}

CertPtr torus_certificate(Int j) {
    if (j < 0) throw std::invalid_argument("torus_certificate: negative j");
    if (j <= 6) {
        return node(Claim{1, j, Relation::equal, kTorusValues[static_cast<std::size_t>(j)], "all"}, "torus_known",
                    {{"k", j}});
    }
    return count_chain(torus_certificate(6), j);
}

SplitResult split_bound(Int j) {
    if (j < 0) throw std::invalid_argument("split_bound: negative j");
    SplitResult best{-1, -1};
    for (Int l = 0; l <= j; ++l) {
        const Int v = torus_value_or_bound(j - l).value + torus_value_or_bound(l).value;
        if (best.l < 0 || v < best.value) best = {v, l};
    }
    return best;
}

CertPtr split_certificate(Int j) {
    const SplitResult s = split_bound(j);
    std::vector<CertPtr> torus;
    for (Int i = 0; i <= j; ++i) torus.push_back(torus_certificate(i));
    return node(lower_claim(2, j, s.value, "punctured_pair"), "split_min", {{"j", j}, {"l", s.l}}, std::move(torus));
}

Int estimation_i(Int k, Int m, Int prev_lower) {
    if (k > 12 || m < 0 || m > k - 1) throw std::invalid_argument("estimation_i: need 0 <= m < k <= 12");
    return 2 * m + prev_lower;
}

Int estimation_ii(Int k, Int m, Int crn_m_genus2) {
    if (k > 12 || m < 0 || m > k - 1) throw std::invalid_argument("estimation_ii: need 0 <= m < k <= 12");
    return crn_m_genus2 + m * (k - m - 1) + split_bound(k - m - 1).value;
}

CertPtr turan_certificate(Int k) {
    if (k < 3) throw std::invalid_argument("turan_certificate: k must be at least 3");
    return node(lower_claim(2, k, turan_value(k), "no3disjoint"), "turan", {{"k", k}});
}

No3DisjointResult no3disjoint_bound(Int k) {
    if (k != 8 && k != 9) throw std::invalid_argument("no3disjoint_bound: k must be 8 or 9");
    No3DisjointResult r;
    std::vector<CertPtr> cases;
    for (Int m = 0; m <= 5; ++m) {
        CertPtr inner = m <= 2 ? closed_form_certificate(m, 2) : turan_certificate(m);
        CertPtr split = split_certificate(k - m);
        const Int cross = m * (k - 1 - m);
        const Int v = inner->claim.value + split->claim.value + cross;
        r.case1.push_back(v);
        cases.push_back(node(lower_claim(2, k, v, "no3disjoint_star"), "no3disjoint_star_m",
                             {{"k", k}, {"m", m}, {"cross", cross}}, {inner, split}));
    }
    CertPtr star_free = count_chain(no_star_four(), k);
    r.case2 = star_free->claim.value;
    cases.push_back(star_free);
    r.value = std::min(*std::min_element(r.case1.begin(), r.case1.end()), r.case2);
    r.certificate = node(lower_claim(2, k, r.value, "no3disjoint"), "no3disjoint_cases", {{"k", k}}, std::move(cases));
    return r;
}

CertPtr no3disjoint_certificate(Int j) {
    if (j < 3) throw std::invalid_argument("no3disjoint_certificate: j must be at least 3");
    if (j <= 7) return turan_certificate(j);
    if (j <= 9) return no3disjoint_bound(j).certificate;
    return count_chain(no3disjoint_bound(9).certificate, j);
}

CertPtr nonseparating_bound(Int j) {
    if (j < 0 || j > 12) throw std::invalid_argument("nonseparating_bound: need 0 <= j <= 12");
    if (j <= 3) return closed_form_certificate(j, 2);
    CertPtr free = no3disjoint_certificate(j);
    CertPtr rest = nonseparating_bound(j - 3);
    const Int triple = 2 * (j - 3);
    const Int v = std::min(free->claim.value, triple + rest->claim.value);
    return node(lower_claim(2, j, v, "nonseparating"), "nonsep_triple", {{"j", j}, {"triple_term", triple}},
                {free, rest});
}

CertPtr separating_replay(Int k, const CertPtr& upper) {
    if (k < 4 || k > 12) throw std::invalid_argument("separating_replay: need 4 <= k <= 12");
    if (upper->claim.rel != Relation::at_most || upper->claim.genus != 2 || upper->claim.k != k) {
        throw std::invalid_argument("separating_replay: need an upper bound for crn(k;2)");
    }
    CertPtr nonsep = nonseparating_bound(k);
    const Int u = upper->claim.value;
    const Int triple = 2 * (k - 3);
    const Int budget = u - triple;
    const Int remaining = nonsep->premises[1]->claim.value;
    const Int triple_free = nonsep->premises[0]->claim.value;
    if (triple_free <= u) {
        throw CaseNotClosed("case not closed: systems without three disjoint curves only need " +
                            std::to_string(triple_free) + " <= " + std::to_string(u));
    }
    if (remaining <= budget) {
        throw CaseNotClosed("case not closed: remaining curves need " + std::to_string(remaining) + " and " +
                            std::to_string(budget) + " are available");
    }
    return node(lower_claim(2, k, nonsep->claim.value, "nonseparating"), "separating_forced",
                {{"k", k},
                 {"upper", u},
                 {"triple_term", triple},
                 {"remaining_budget", budget},
                 {"remaining_bound", remaining},
                 {"triple_free_bound", triple_free}},
                {nonsep, upper});
}

CertPtr separating_replay(Int k, Int upper) {
    return separating_replay(k, node(Claim{2, k, Relation::at_most, upper, "all"}, "hypothesis", {}));
}

Genus2Derivation::Genus2Derivation() {
    certs_.push_back(closed_form_certificate(0, 2));
    analyses_.push_back(Genus2Analysis{});
}

const CertPtr& Genus2Derivation::derive(Int k) {
    if (k < 1 || k > 12) throw std::invalid_argument("genus-2 derivation covers 1 <= k <= 12");
    if (k <= highest()) return certs_[static_cast<std::size_t>(k)];
    if (k != highest() + 1) {
        throw std::logic_error("bootstrap order violation: crn(" + std::to_string(k - 1) + ";2) not certified");
    }
    Genus2Analysis a;
    a.k = k;
    if (k <= 7) {
        certs_.push_back(closed_form_certificate(k, 2));
        a.value = certs_.back()->claim.value;
        analyses_.push_back(a);
        return certs_.back();
    }
    // Reference to an earlier value: closed forms are inlined, derived
    // values are cited from the context premise.
    auto earlier = [&](Int j) -> CertPtr {
        const CertPtr& c = certs_[static_cast<std::size_t>(j)];
        if (j <= 7) return c;
        return node(c->claim, "cite", {});
    };
    std::vector<CertPtr> premises;
    Int context = 0;
    if (k - 1 >= 8) {
        premises.push_back(certs_[static_cast<std::size_t>(k - 1)]);
        context = 1;
    }
    const Int prev = certs_[static_cast<std::size_t>(k - 1)]->claim.value;
    for (Int m = 0; m < k; ++m) {
        CaseValue cv;
        cv.m = m;
        cv.est_i = estimation_i(k, m, prev);
        CertPtr ei = node(lower_claim(2, k, cv.est_i, "separating_m"), "estimation_i", {{"k", k}, {"m", m}},
                          {earlier(k - 1)});
        const Int crn_m = certs_[static_cast<std::size_t>(m)]->claim.value;
        cv.est_ii = estimation_ii(k, m, crn_m);
        const Int meet = 2 * m, outer = m * (k - m - 3);
        CertPtr eii = node(lower_claim(2, k, cv.est_ii, "separating_m"), "estimation_ii",
                           {{"k", k}, {"m", m}, {"meet_term", meet}, {"outer_term", outer}, {"cross", meet + outer}},
                           {earlier(m), split_certificate(k - m - 1)});
        cv.value = std::max(cv.est_i, cv.est_ii);
        premises.push_back(node(lower_claim(2, k, cv.value, "separating_m"), "separating_case", {{"k", k}, {"m", m}},
                                {ei, eii}));
        a.separating.push_back(cv);
    }
    CertPtr nonsep = nonseparating_bound(k);
    a.nonseparating = nonsep->claim.value;
    premises.push_back(nonsep);
    a.value = -1;
    for (const auto& cv : a.separating) {
        if (a.value < 0 || cv.value < a.value) a.value = cv.value, a.argmin = cv.m;
    }
    if (a.nonseparating < a.value) a.value = a.nonseparating, a.argmin = k;
    certs_.push_back(node(lower_claim(2, k, a.value, "all"), "genus2_cases",
                          {{"k", k}, {"context", context}, {"argmin", a.argmin}}, std::move(premises)));
    analyses_.push_back(a);
    return certs_.back();
}

const CertPtr& Genus2Derivation::lower(Int k) const {
    if (k < 0 || k > highest()) throw std::logic_error("crn(" + std::to_string(k) + ";2) not certified yet");
    return certs_[static_cast<std::size_t>(k)];
}

Genus2Analysis Genus2Derivation::analysis(Int k) const {
    if (k < 0 || k > highest()) throw std::logic_error("crn(" + std::to_string(k) + ";2) not certified yet");
    return analyses_[static_cast<std::size_t>(k)];
}

CertPtr genus2_lower(Int k) {
    if (k < 0 || k > 12) throw std::invalid_argument("genus2_lower: need 0 <= k <= 12");
    Genus2Derivation d;
    for (Int j = 1; j <= k; ++j) d.derive(j);
    return d.lower(k);
}

Genus2Analysis genus2_analysis(Int k) {
    if (k < 1 || k > 12) throw std::invalid_argument("genus2_analysis: need 1 <= k <= 12");
    Genus2Derivation d;
    for (Int j = 1; j <= k; ++j) d.derive(j);
    return d.analysis(k);
}

CertPtr lower_certificate(Int k, Int g) {
    if (k < 0 || g < 1) throw std::invalid_argument("lower_certificate: bad arguments");
    if (g == 1) return torus_certificate(k);
    if (g == 2) return k <= 12 ? genus2_lower(k) : count_chain(genus2_lower(12), k);
    const Int top = 5 * g - 3;
    return k <= top ? closed_form_certificate(k, g) : count_chain(closed_form_certificate(top, g), k);
}

Rational::Rational(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) num = -num, den = -den;
    const Int d = std::gcd(num, den);
    num_ = num / d;
    den_ = den / d;
}

Int Rational::floor() const {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Int Rational::ceil() const {
    Int q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

std::string Rational::str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    const __int128 l = static_cast<__int128>(x.num_) * y.den_;
    const __int128 r = static_cast<__int128>(y.num_) * x.den_;
    return l <=> r;
}

Rational quadratic_lower_bound(Int k, Int g) {
    if (g < 2) throw std::invalid_argument("quadratic_lower_bound: genus must be at least 2");
    if (k < 3 * g - 2) throw std::invalid_argument("quadratic_lower_bound: need k >= 3g-2");
    return Rational(k * (k - 1), (3 * g - 2) * (3 * g - 3));
}

}  // namespace crn::bounds
