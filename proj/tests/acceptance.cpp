// one line per acceptance criterion; exit status 1 if any fails
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "msplab/suite.hpp"

int main(int argc, char** argv) {
    std::string report;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--json") report = argv[i + 1];
    msplab::json all = msplab::json::array();
    bool ok = true;
    for (int n = 1; n <= 10; ++n) {
        msplab::Criterion c = msplab::run_criterion(n);
        std::cout << c.line() << std::endl;
        ok = ok && c.pass;
        all.push_back(c.to_json());
    }
    if (!report.empty()) std::ofstream(report) << all.dump(1) << "\n";
    return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
