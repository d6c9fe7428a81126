#include "crn/certificate.hpp"

#include <cstring>

namespace crn::cert {

std::string to_string(Relation r) {
    switch (r) {
        case Relation::at_least: return ">=";
        case Relation::equal: return "=";
        case Relation::at_most: return "<=";
    }
    return "?";
}

Relation relation_from_string(const std::string& s) {
    if (s == ">=") return Relation::at_least;
    if (s == "=") return Relation::equal;
    if (s == "<=") return Relation::at_most;
    throw CertificateFormatError("unknown relation '" + s + "'");
}

Int BoundCertificate::param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw CertificateFormatError("rule " + rule + ": missing parameter '" + key + "'");
    return it->second;
}

Json to_json(const BoundCertificate& c) {
    Json j;
    j["claim"] = {{"g", c.claim.genus},
                  {"k", c.claim.k},
                  {"rel", to_string(c.claim.rel)},
                  {"value", c.claim.value},
                  {"scope", c.claim.scope}};
    j["rule"] = c.rule;
    j["params"] = Json::object();
    for (const auto& [key, v] : c.params) j["params"][key] = v;
    j["premises"] = Json::array();
    for (const auto& p : c.premises) j["premises"].push_back(to_json(*p));
    if (!c.label.empty()) j["label"] = c.label;
    if (!c.data.empty()) j["data"] = c.data;
    return j;
}

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw CertificateFormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

Int integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw CertificateFormatError(std::string("field '") + what + "' is not an integer");
    return j.get<Int>();
}

}  // namespace

BoundCertificate from_json(const Json& j) {
    BoundCertificate c;
    const Json& claim = field(j, "claim");
    c.claim.genus = integer(field(claim, "g"), "g");
    c.claim.k = integer(field(claim, "k"), "k");
    const Json& rel = field(claim, "rel");
    if (!rel.is_string()) throw CertificateFormatError("field 'rel' is not a string");
    c.claim.rel = relation_from_string(rel.get<std::string>());
    c.claim.value = integer(field(claim, "value"), "value");
    if (claim.contains("scope")) {
        if (!claim.at("scope").is_string()) throw CertificateFormatError("field 'scope' is not a string");
        c.claim.scope = claim.at("scope").get<std::string>();
    }
    const Json& rule = field(j, "rule");
    if (!rule.is_string()) throw CertificateFormatError("field 'rule' is not a string");
    c.rule = rule.get<std::string>();
    const Json& params = field(j, "params");
    if (!params.is_object()) throw CertificateFormatError("field 'params' is not an object");
    for (const auto& [key, v] : params.items()) c.params[key] = integer(v, key.c_str());
    const Json& premises = field(j, "premises");
    if (!premises.is_array()) throw CertificateFormatError("field 'premises' is not an array");
    for (const auto& p : premises) c.premises.push_back(std::make_shared<const BoundCertificate>(from_json(p)));
    if (j.contains("label")) {
        if (!j.at("label").is_string()) throw CertificateFormatError("field 'label' is not a string");
        c.label = j.at("label").get<std::string>();
    }
    if (j.contains("data")) {
        if (!j.at("data").is_array()) throw CertificateFormatError("field 'data' is not an array");
        for (const auto& v : j.at("data")) c.data.push_back(integer(v, "data"));
    }
    return c;
}

CertPtr parse_certificate(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw CertificateFormatError(std::string("malformed JSON: ") + e.what());
    }
    return std::make_shared<const BoundCertificate>(from_json(j));
}

Int matrix_digest(const std::vector<Int>& entries) {
    std::uint64_t h = 1469598103934665603ULL;
    for (Int e : entries) {
        std::uint64_t u;
        std::memcpy(&u, &e, sizeof u);
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (u >> (8 * byte)) & 0xffU;
            h *= 1099511628211ULL;
        }
    }
    return static_cast<Int>(h & ((1ULL << 53) - 1));
}

std::size_t node_count(const BoundCertificate& c) {
    std::size_t n = 1;
    for (const auto& p : c.premises) n += node_count(*p);
    return n;
}

}  // namespace crn::cert
