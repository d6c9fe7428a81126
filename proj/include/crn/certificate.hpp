#ifndef CRN_CERTIFICATE_HPP
#define CRN_CERTIFICATE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace crn::cert {

using Int = std::int64_t;
using Json = nlohmann::ordered_json;

enum class Relation { at_least, equal, at_most };

std::string to_string(Relation r);
Relation relation_from_string(const std::string& s);

/**
 * A claim about crossing numbers of k-curve systems on the genus-g surface.
 * `scope` narrows the class of systems the claim quantifies over:
 *   all                 every system of k curves (the crn(k;g) value)
 *   no3disjoint         systems with no three pairwise disjoint curves
 *   no3disjoint_nostar  additionally without two disjoint intersecting pairs
 *   nonseparating       systems of nonseparating curves only
 *   separating_m        systems whose first curve is separating and meets
 *                       exactly params["m"] of the others
 *   punctured_pair      curves in the complement of a separating curve
 */
struct Claim {
    Int genus = 0;
    Int k = 0;
    Relation rel = Relation::at_least;
    Int value = 0;
    std::string scope = "all";
};

struct BoundCertificate;
using CertPtr = std::shared_ptr<const BoundCertificate>;

/// Node of a derivation tree. Every integer a rule consumes is stored
/// explicitly, so replay never re-derives anything from external state.
struct BoundCertificate {
    Claim claim;
    std::string rule;
    std::map<std::string, Int> params;
    std::vector<CertPtr> premises;
    std::string label;
    std::vector<Int> data;

    Int param(const std::string& key) const;
};

class CertificateFormatError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json to_json(const BoundCertificate& c);
/// Throws CertificateFormatError on missing or mistyped fields.
BoundCertificate from_json(const Json& j);
CertPtr parse_certificate(const std::string& text);

struct ReplayReport {
    bool ok = true;
    std::string failing_node;  // path such as root/premises[2]/premises[0] (rule ...)
    std::string reason;
    std::size_t nodes_checked = 0;
    std::size_t hypotheses = 0;  // unproven leaves accepted as given
};

/// Recomputes every node bottom-up from its rule and premises.
ReplayReport replay(const BoundCertificate& c);
bool replay_ok(const BoundCertificate& c);

/// 53-bit FNV-1a digest of a weight list, as stored by construction leaves.
Int matrix_digest(const std::vector<Int>& entries);

std::size_t node_count(const BoundCertificate& c);

}  // namespace crn::cert

#endif
