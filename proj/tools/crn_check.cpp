// Standalone certificate checker. Links only the certificate library.

#include <iostream>

#include <CLI11.hpp>

#include "check_command.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Replay a bound certificate"};
    std::string path;
    app.add_option("certificate", path, "certificate JSON file")->required();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : crn::tools::kExitBadInput;
    }
    return crn::tools::run_check(path, std::cout, std::cerr);
}
