#ifndef CRN_TOOLS_CHECK_COMMAND_HPP
#define CRN_TOOLS_CHECK_COMMAND_HPP

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "crn/certificate.hpp"
#include "exit_codes.hpp"

namespace crn::tools {

// Replays a certificate file and prints a JSON verdict.
inline int run_check(const std::string& path, std::ostream& out, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "cannot read " << path << "\n";
        return kExitBadInput;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    cert::CertPtr c;
    try {
        c = cert::parse_certificate(buf.str());
    } catch (const cert::CertificateFormatError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitBadInput;
    }
    const auto report = cert::replay(*c);
    nlohmann::ordered_json j;
    j["file"] = path;
    j["valid"] = report.ok;
    j["claim"] = cert::to_json(*c)["claim"];
    j["nodes_checked"] = report.nodes_checked;
    j["hypotheses"] = report.hypotheses;
    if (!report.ok) {
        j["failing_node"] = report.failing_node;
        j["reason"] = report.reason;
    }
    out << j.dump(2) << "\n";
    if (!report.ok) {
        err << "replay failed at " << report.failing_node << ": " << report.reason << "\n";
        return kExitInvariant;
    }
    return kExitOk;
}

}  // namespace crn::tools

#endif
