#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rootpat::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the acceptance suite in order, streaming one PASS/FAIL line per
/// criterion to `live` when given.  A non-empty `only` restricts the run to
/// those criterion ids.  Returns the results.
std::vector<CriterionResult> run_acceptance(std::ostream* live,
                                            const std::vector<int>& only = {});

/// Number of worker threads the heavy criteria may use (the output is
/// identical regardless).  Default 1.
void set_jobs(int jobs);

}  // namespace rootpat::verify
