#include "oip/nelder_mead.hpp"

#include "oip/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oip {

namespace {

struct Vertex {
    std::vector<double> x;
    double f;
};

bool simplex_converged(const std::vector<Vertex>& simplex, const NelderMeadOptions& opt) {
    const Vertex& best = simplex.front();
    const double f_hi = simplex.back().f;
    const double f_lo = best.f;
    if (2.0 * std::abs(f_hi - f_lo) <= opt.f_tolerance * (std::abs(f_hi) + std::abs(f_lo)) + 1e-300)
        return true;
    double spread = 0.0;
    for (std::size_t v = 1; v < simplex.size(); ++v) {
        for (std::size_t j = 0; j < best.x.size(); ++j) {
            const double scale = std::max(1.0, std::abs(best.x[j]));
            spread = std::max(spread, std::abs(simplex[v].x[j] - best.x[j]) / scale);
        }
    }
    return spread < opt.x_tolerance;
}

} // namespace

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                             std::vector<double> start, const NelderMeadOptions& options) {
    const std::size_t n = start.size();
    if (n == 0)
        throw InvalidArgument("nelder_mead needs at least one parameter");

    auto eval = [&](const std::vector<double>& x) {
        const double f = objective(x);
        return std::isnan(f) ? HUGE_VAL : f;
    };

    NelderMeadResult result;
    result.x = std::move(start);
    result.value = eval(result.x);

    std::size_t restarts = 0;
    while (true) {
        std::vector<Vertex> simplex;
        simplex.push_back({result.x, result.value});
        for (std::size_t j = 0; j < n; ++j) {
            Vertex v{result.x, 0.0};
            v.x[j] += options.initial_step;
            v.f = eval(v.x);
            simplex.push_back(std::move(v));
        }

        bool converged = false;
        while (result.iterations < options.max_iterations) {
            std::sort(simplex.begin(), simplex.end(),
                      [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
            if (simplex_converged(simplex, options)) {
                converged = true;
                break;
            }
            ++result.iterations;

            std::vector<double> centroid(n, 0.0);
            for (std::size_t v = 0; v < n; ++v)
                for (std::size_t j = 0; j < n; ++j)
                    centroid[j] += simplex[v].x[j] / static_cast<double>(n);

            Vertex& worst = simplex.back();
            auto along = [&](double t) {
                std::vector<double> x(n);
                for (std::size_t j = 0; j < n; ++j)
                    x[j] = centroid[j] + t * (worst.x[j] - centroid[j]);
                return x;
            };

            Vertex reflected{along(-1.0), 0.0};
            reflected.f = eval(reflected.x);
            if (reflected.f < simplex.front().f) {
                Vertex expanded{along(-2.0), 0.0};
                expanded.f = eval(expanded.x);
                worst = expanded.f < reflected.f ? std::move(expanded) : std::move(reflected);
            } else if (reflected.f < simplex[n - 1].f) {
                worst = std::move(reflected);
            } else {
                const bool outside = reflected.f < worst.f;
                Vertex contracted{along(outside ? -0.5 : 0.5), 0.0};
                contracted.f = eval(contracted.x);
                if (contracted.f < (outside ? reflected.f : worst.f)) {
                    worst = std::move(contracted);
                } else {
                    for (std::size_t v = 1; v <= n; ++v) {
                        for (std::size_t j = 0; j < n; ++j)
                            simplex[v].x[j] = simplex[0].x[j] + 0.5 * (simplex[v].x[j] - simplex[0].x[j]);
                        simplex[v].f = eval(simplex[v].x);
                    }
                }
            }
            const auto best = std::min_element(simplex.begin(), simplex.end(),
                                               [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
            result.best_history.push_back(std::min(best->f, result.value));
        }

        std::sort(simplex.begin(), simplex.end(),
                  [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
        const bool improved = simplex.front().f < result.value;
        if (improved) {
            result.x = simplex.front().x;
            result.value = simplex.front().f;
        }
        if (!converged) {
            result.converged = false;
            return result;
        }
        if (!improved || restarts >= options.max_restarts) {
            result.converged = true;
            return result;
        }
        ++restarts;
    }
}

} // namespace oip
