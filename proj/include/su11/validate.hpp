#pragma once

#include <string>
#include <vector>

namespace su11 {

// One reconciliation measurement: the max deviation between a closed-form
// line and the oracle over a pinned sampling set, checked against the
// committed expectation.  flagged == false: the line is expected to agree
// (measured <= tol).  flagged == true: the line is a known, documented
// discrepancy and the measurement must fall inside [lo, hi] (a measurement
// outside the bracket means the build contradicts the committed ledger).
struct ValidationRow {
    std::string id;
    std::string detail;
    double measured = 0.0;
    bool flagged = false;
    double tol = 0.0;      // agreement tolerance (flagged == false)
    double lo = 0.0, hi = 0.0;  // expected bracket (flagged == true)
    bool pass = false;
};

struct ValidationReport {
    std::vector<ValidationRow> rows;
    bool ok = false;
};

// Runs every committed reconciliation row.  ok iff all rows pass.
ValidationReport run_validation();

}  // namespace su11
