#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace mulab {

// Outcome of one verification step.  A composite check carries one
// sub-report per defining identity; `residual` of the composite is the
// maximum over its sub-reports, and `passed` is their conjunction.
struct CheckReport {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::vector<CheckReport> subs;
    std::string note;

    static CheckReport leaf(std::string name, double residual, double tol,
                            std::string note = {}) {
        CheckReport r;
        r.name = std::move(name);
        r.residual = residual;
        r.tolerance = tol;
        r.passed = residual <= tol;
        r.note = std::move(note);
        return r;
    }

    static CheckReport composite(std::string name, std::vector<CheckReport> subs,
                                 double tol, std::string note = {}) {
        CheckReport r;
        r.name = std::move(name);
        r.tolerance = tol;
        r.subs = std::move(subs);
        r.note = std::move(note);
        r.residual = 0.0;
        r.passed = true;
        for (const auto& s : r.subs) {
            r.residual = std::max(r.residual, s.residual);
            r.passed = r.passed && s.passed;
        }
        // Deterministic ordering: sub-checks are named with sortable
        // numeric prefixes by convention; keep insertion order otherwise.
        return r;
    }

    void add(CheckReport sub) {
        residual = std::max(residual, sub.residual);
        if (subs.empty()) passed = true;
        passed = passed && sub.passed;
        subs.push_back(std::move(sub));
    }
};

}  // namespace mulab
