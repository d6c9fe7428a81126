#ifndef CRN_BOUNDS_HPP
#define CRN_BOUNDS_HPP

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crn/certificate.hpp"

namespace crn::bounds {

using cert::CertPtr;
using cert::Int;

/// ceil(k(k-1) n / (m(m-1))). Throws std::invalid_argument unless 2 <= m <= k and n >= 0.
Int count_bound(Int k, Int m, Int n);

/// Applies count_bound one curve at a time from base->claim.k up to to_k.
CertPtr count_chain(const CertPtr& base, Int to_k);

/// Chain from a bare value n for from_m curves, recorded as a hypothesis leaf.
CertPtr count_chain(Int from_m, Int n, Int to_k, Int genus = 2, const std::string& scope = "all");

/// Value of crn(k;g) for k <= 5g-3, nullopt beyond. Throws if g < 2 or k < 0.
std::optional<Int> crn_closed_form(Int k, Int g);
CertPtr closed_form_certificate(Int k, Int g);

struct TorusValue {
    Int value = 0;
    bool exact = false;
};

/// crn(j;1) for j <= 6, and the counting-chain lower bound from crn(6;1) beyond.
TorusValue torus_value_or_bound(Int j);
CertPtr torus_certificate(Int j);

struct SplitResult {
    Int value = 0;
    Int l = 0;  // smallest minimizing l
};

/// min over l of crn(j-l;1) + crn(l;1): lower bound for j curves on the two
/// sides of a separating curve.
SplitResult split_bound(Int j);
CertPtr split_certificate(Int j);

/// 2m + prev_lower.
Int estimation_i(Int k, Int m, Int prev_lower);
/// crn_m_genus2 + m(k-m-1) + split_bound(k-m-1).
Int estimation_ii(Int k, Int m, Int crn_m_genus2);

/// ceil(k(k-2)/4) as a certificate for systems with no three disjoint curves.
CertPtr turan_certificate(Int k);

struct No3DisjointResult {
    Int value = 0;
    std::vector<Int> case1;  // per m = 0..5
    Int case2 = 0;
    CertPtr certificate;
};

/// Lower bound for k in {8, 9} curves on the genus-2 surface with no three pairwise disjoint.
No3DisjointResult no3disjoint_bound(Int k);

/// Lower bound for j curves with no three pairwise disjoint, 3 <= j <= 12.
CertPtr no3disjoint_certificate(Int j);

/// Lower bound R(j) for systems of j nonseparating curves on the genus-2 surface, j <= 12.
CertPtr nonseparating_bound(Int j);

class CaseNotClosed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shows that a k-curve system with at most `upper` crossings must contain a
/// separating curve. Throws CaseNotClosed if the arithmetic does not close.
CertPtr separating_replay(Int k, const CertPtr& upper);
CertPtr separating_replay(Int k, Int upper);

struct CaseValue {
    Int m = 0;
    Int est_i = 0;
    Int est_ii = 0;
    Int value = 0;  // max of the two
};

struct Genus2Analysis {
    Int k = 0;
    std::vector<CaseValue> separating;  // m = 0..k-1
    Int nonseparating = 0;
    Int value = 0;
    Int argmin = 0;  // m of the weakest case, or k for the nonseparating case
};

/// Builds crn(k;2) lower certificates in increasing k. Asking for k before
/// k-1 is certified throws std::logic_error.
class Genus2Derivation {
public:
    Genus2Derivation();

    /// Certifies k (1 <= k <= 12); requires every smaller k certified.
    const CertPtr& derive(Int k);
    const CertPtr& lower(Int k) const;
    Int highest() const { return static_cast<Int>(certs_.size()) - 1; }
    Genus2Analysis analysis(Int k) const;

private:
    std::vector<CertPtr> certs_;  // index k; entry 0 is the empty system
    std::vector<Genus2Analysis> analyses_;
};

/// Full bootstrap up to k. Throws std::invalid_argument outside 1..12.
CertPtr genus2_lower(Int k);
Genus2Analysis genus2_analysis(Int k);

/// Lower bound for crn(k;g) on any k: closed form, the genus-2 derivation, or
/// a counting chain from the last certified value.
CertPtr lower_certificate(Int k, Int g);

class Rational {
public:
    Rational(Int num = 0, Int den = 1);
    Int num() const { return num_; }
    Int den() const { return den_; }
    Int floor() const;
    Int ceil() const;
    std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

private:
    Int num_;
    Int den_;
};

/// k(k-1) / ((3g-2)(3g-3)) exactly. Throws unless g >= 2 and k >= 3g-2.
Rational quadratic_lower_bound(Int k, Int g);

struct TableRow {
    Int k = 0;
    CertPtr lower;
    CertPtr upper;  // null when no construction is available
    bool settled = false;
    std::string construction;
};

struct Genus2Table {
    Int genus = 2;
    std::vector<TableRow> rows;
};

}  // namespace crn::bounds

#endif
