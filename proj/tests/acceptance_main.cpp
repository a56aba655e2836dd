// Acceptance gate: runs every verification criterion at its pinned tolerance
// and prints one pass/fail line per criterion. Exits nonzero on any failure.

#include <chrono>
#include <iostream>

#include "nullcurve/acceptance.hpp"

int main() {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();

    const auto results = nullcurve::run_acceptance();
    nullcurve::print_results(std::cout, results);

    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start);
    const bool ok = nullcurve::all_passed(results);
    std::cout << (ok ? "ACCEPTED" : "REJECTED") << " (" << results.size() << " criteria, "
              << elapsed.count() << " ms)\n";
    return ok ? 0 : 1;
}
