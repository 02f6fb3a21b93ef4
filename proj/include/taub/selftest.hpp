#pragma once

#include <functional>
#include <string>
#include <vector>

namespace taub {

struct CheckOutcome {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// End-to-end invariant suite (sharpness, real condition, bound chain,
/// transform identities, pole bound, boundary contrast, Hardy-Littlewood
/// ratios, diagnostic oracle). Each outcome is reported as it completes.
std::vector<CheckOutcome> run_selftest(const std::function<void(const CheckOutcome&)>& on_result = {});

CheckOutcome check_sharpness();
CheckOutcome check_real_condition();
CheckOutcome check_bound_chain();
CheckOutcome check_transform_identities();
CheckOutcome check_pole_bound();
CheckOutcome check_boundary_contrast();
CheckOutcome check_hardy_littlewood();
CheckOutcome check_diagnostic_oracle();

}  // namespace taub
