#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace oip {

struct NelderMeadOptions {
    std::size_t max_iterations = 4000;
    double x_tolerance = 1e-10; // relative simplex spread
    double f_tolerance = 1e-14; // relative objective spread across the simplex
    double initial_step = 0.25; // absolute offset of the initial simplex vertices
    std::size_t max_restarts = 4;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    std::vector<double> best_history; // best objective after each iteration
};

/// Derivative-free downhill simplex minimisation. After convergence the simplex is rebuilt around
/// the best point and the search resumed, until a restart stops improving the objective.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                             std::vector<double> start, const NelderMeadOptions& options = {});

} // namespace oip
