#pragma once

#include <functional>
#include <vector>

namespace zonecast::forecast {

struct OptimResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct OptimOptions {
    int max_iters = 400;
    double value_tolerance = 1e-12;
    double gradient_tolerance = 1e-8;
    double finite_diff_step = 1e-6;
};

/// Dense BFGS with central-difference gradients and Armijo backtracking.
/// Fully deterministic: same objective and starting point always walk the
/// same path. Suitable for the low-dimensional likelihood surfaces here.
OptimResult minimize_bfgs(const std::function<double(const std::vector<double>&)>& objective,
                          std::vector<double> start, const OptimOptions& options = {});

}  // namespace zonecast::forecast
