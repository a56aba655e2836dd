#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace nullcurve {

struct CriterionResult {
    int id = 0;
    std::string name;
    double worst = 0.0;     ///< worst residual observed
    double threshold = 0.0; ///< pinned limit the residual must stay under
    bool passed = false;
    std::string detail;
};

struct AcceptanceOptions {
    double quad_tol = 1e-10;
    std::uint64_t rng_seed = 0x5eed0f9d2c4b71a3ull;
};

/// Runs the full verification battery over the reference catalog with the
/// default parameters, returning one result per criterion.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});

bool all_passed(const std::vector<CriterionResult>& results);

/// One pass/fail line per criterion.
void print_results(std::ostream& os, const std::vector<CriterionResult>& results);

} // namespace nullcurve
