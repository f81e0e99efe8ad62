// Shared doctest runner. Every fire() in the unit suites is audited for
// chip conservation and shift equivariance; any violation fails the binary.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <iostream>

#include "diffusion/engine.hpp"

int main(int argc, char** argv) {
    diffusion::audit::enable(true);
    doctest::Context context;
    context.applyCommandLine(argc, argv);
    const int result = context.run();
    if (context.shouldExit()) return result;

    const auto stats = diffusion::audit::stats();
    std::cout << "fire audit: " << stats.calls << " calls, " << stats.violations << " violations\n";
    if (stats.violations != 0) return 1;
    return result;
}
