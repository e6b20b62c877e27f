// Linked against a core whose regular boundary has one face sign flipped.
// The primitive-equals-path family must notice.
#include "pathhom/crosscheck.hpp"

#include <iostream>

int main() {
    pathhom::SuiteOptions opts;
    opts.instances = 20;
    const auto report = pathhom::run_theorem_suite(opts);
    const auto* family = report.find("primitive-equals-path");
    if (!family) {
        std::cerr << "primitive-equals-path family missing\n";
        return 1;
    }
    if (family->passed()) {
        std::cerr << "mutated boundary went unnoticed\n";
        return 1;
    }
    std::cout << "mutation detected: " << family->failures.size() << " failure reports\n"
              << family->failures.front() << '\n';
    return 0;
}
