#include "zonecast/optim.hpp"

#include <cmath>

namespace zonecast::forecast {

namespace {

std::vector<double> numeric_gradient(
    const std::function<double(const std::vector<double>&)>& f, const std::vector<double>& x,
    double h) {
    std::vector<double> g(x.size());
    std::vector<double> probe = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double step = h * std::max(1.0, std::abs(x[i]));
        probe[i] = x[i] + step;
        double fp = f(probe);
        probe[i] = x[i] - step;
        double fm = f(probe);
        probe[i] = x[i];
        g[i] = (fp - fm) / (2.0 * step);
    }
    return g;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const std::vector<double>& v) { return std::sqrt(dot(v, v)); }

}  // namespace

OptimResult minimize_bfgs(const std::function<double(const std::vector<double>&)>& objective,
                          std::vector<double> start, const OptimOptions& options) {
    std::size_t n = start.size();
    OptimResult result;
    result.x = std::move(start);
    result.value = objective(result.x);
    if (n == 0) {
        result.converged = true;
        return result;
    }

    // inverse Hessian approximation, identity to start
    std::vector<std::vector<double>> h_inv(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) h_inv[i][i] = 1.0;

    std::vector<double> grad = numeric_gradient(objective, result.x, options.finite_diff_step);

    for (int iter = 0; iter < options.max_iters; ++iter) {
        result.iterations = iter + 1;
        if (norm(grad) < options.gradient_tolerance) {
            result.converged = true;
            break;
        }

        std::vector<double> direction(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) direction[i] -= h_inv[i][j] * grad[j];
        double slope = dot(grad, direction);
        if (!(slope < 0.0)) {
            // curvature bookkeeping went bad: restart from steepest descent
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) h_inv[i][j] = 0.0;
                h_inv[i][i] = 1.0;
                direction[i] = -grad[i];
            }
            slope = dot(grad, direction);
            if (!(slope < 0.0)) {
                result.converged = true;
                break;
            }
        }

        // Armijo backtracking
        double step = 1.0;
        double f_new = 0.0;
        std::vector<double> x_new(n);
        bool accepted = false;
        for (int tries = 0; tries < 60; ++tries) {
            for (std::size_t i = 0; i < n; ++i) x_new[i] = result.x[i] + step * direction[i];
            f_new = objective(x_new);
            if (std::isfinite(f_new) && f_new <= result.value + 1e-4 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;

        std::vector<double> grad_new =
            numeric_gradient(objective, x_new, options.finite_diff_step);
        std::vector<double> s(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = x_new[i] - result.x[i];
            y[i] = grad_new[i] - grad[i];
        }
        double sy = dot(s, y);
        double improvement = result.value - f_new;
        result.x = std::move(x_new);
        result.value = f_new;
        grad = std::move(grad_new);

        if (sy > 1e-12) {
            // BFGS inverse update: H <- (I - s yᵀ/sy) H (I - y sᵀ/sy) + s sᵀ/sy
            double rho = 1.0 / sy;
            std::vector<double> hy(n, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) hy[i] += h_inv[i][j] * y[j];
            double yhy = dot(y, hy);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    h_inv[i][j] += (1.0 + rho * yhy) * rho * s[i] * s[j] -
                                   rho * (s[i] * hy[j] + hy[i] * s[j]);
        }

        if (improvement < options.value_tolerance) {
            result.converged = true;
            break;
        }
    }
    return result;
}

}  // namespace zonecast::forecast
