#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mumch/mum.hpp"

namespace mumch {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    int threads = 1;
    long long mc_samples = 100000;
    // Test hook: criterion id -> offset added to that criterion's reference
    // constant (or measured deviation), so the row can be forced to fail.
    std::map<int, double> perturbation;
};

// Runs criteria 1..15 and returns one row per criterion, in order.
std::vector<CheckResult> run_acceptance_suite(const SuiteOptions& options = {});

// One-line rendering: "[PASS] 01 name: detail".
std::string format_check(const CheckResult& r);

// The explicit d=3 matrices U_{alpha,1}, alpha = 1..4, tabulated for the
// Gell-Mann ("gell-mann") and Heisenberg-Weyl ("heisenberg-weyl") bases at
// parameter t.
std::vector<Operator> reference_u_matrices(const std::string& label, double t);

}  // namespace mumch
