#pragma once

#include <string>
#include <vector>

namespace vectcoh {

struct CheckResult {
    std::string name;
    long checked = 0;
    bool passed = true;
    std::string counterexample;
};

struct SelftestReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    long total_checked() const;
    const CheckResult* first_failure() const;
};

/// Full invariant battery: Pascal, rational axioms, Leibniz, Jacobi,
/// Lie-action, multilinearity/antisymmetry, basis enumeration against a
/// brute-force enumerator, relative vanishing, delta^2 = 0, image-in-kernel
/// at the matrix level, the closed-form coboundary entries, the exhaustive
/// oracle crosscheck, and invariance of computed relative cocycles.
/// Weight sweeps are bounded by max_lambda.
SelftestReport run_selftest(int max_lambda);

}  // namespace vectcoh
