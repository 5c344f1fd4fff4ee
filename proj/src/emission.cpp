#include "zonecast/emission.hpp"

#include <cmath>

#include "zonecast/csv.hpp"
#include "zonecast/error.hpp"

namespace zonecast::forecast {

namespace {

constexpr double kMinRate = 1e-8;
constexpr double kMinSigma = 1e-6;
constexpr double kMinP = 1e-8;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double clamp(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

}  // namespace

EmissionKind emission_kind_from_string(const std::string& name) {
    std::string n = to_lower(trim(name));
    if (n == "poisson") return EmissionKind::poisson;
    if (n == "gaussian" || n == "normal") return EmissionKind::gaussian;
    if (n == "geometric") return EmissionKind::geometric;
    if (n == "hurdle_geometric" || n == "hurdle-geometric" || n == "hurdle")
        return EmissionKind::hurdle_geometric;
    raise(Errc::invalid_argument, "unknown emission family '" + name + "'");
}

std::string emission_kind_name(EmissionKind kind) {
    switch (kind) {
        case EmissionKind::poisson: return "poisson";
        case EmissionKind::gaussian: return "gaussian";
        case EmissionKind::geometric: return "geometric";
        case EmissionKind::hurdle_geometric: return "hurdle_geometric";
    }
    return "?";
}

bool is_count_family(EmissionKind kind) { return kind != EmissionKind::gaussian; }

double EmissionParams::mean() const {
    switch (kind) {
        case EmissionKind::poisson: return lambda;
        case EmissionKind::gaussian: return mu;
        case EmissionKind::geometric: return (1.0 - p) / p;
        case EmissionKind::hurdle_geometric: return (1.0 - pi0) / p;
    }
    return 0.0;
}

double EmissionParams::log_prob(double y) const {
    switch (kind) {
        case EmissionKind::poisson: {
            double k = std::round(y);
            if (k < 0) return kNegInf;
            return k * std::log(lambda) - lambda - std::lgamma(k + 1.0);
        }
        case EmissionKind::gaussian: {
            double z = (y - mu) / sigma;
            return -0.5 * z * z - std::log(sigma) - 0.5 * std::log(2.0 * M_PI);
        }
        case EmissionKind::geometric: {
            double k = std::round(y);
            if (k < 0) return kNegInf;
            return std::log(p) + k * std::log1p(-clamp(p, 0.0, 1.0 - 1e-15));
        }
        case EmissionKind::hurdle_geometric: {
            double k = std::round(y);
            if (k < 0) return kNegInf;
            if (k == 0) return pi0 > 0 ? std::log(pi0) : kNegInf;
            if (pi0 >= 1.0) return kNegInf;
            return std::log1p(-pi0) + std::log(p) +
                   (k - 1.0) * std::log1p(-clamp(p, 0.0, 1.0 - 1e-15));
        }
    }
    return kNegInf;
}

double EmissionParams::sample(Rng& rng) const {
    switch (kind) {
        case EmissionKind::poisson:
            return static_cast<double>(rng.poisson(lambda));
        case EmissionKind::gaussian:
            return rng.normal(mu, sigma);
        case EmissionKind::geometric:
            return static_cast<double>(rng.geometric(p));
        case EmissionKind::hurdle_geometric:
            if (rng.uniform() < pi0) return 0.0;
            return 1.0 + static_cast<double>(rng.geometric(p));
    }
    return 0.0;
}

EmissionParams EmissionParams::fit_weighted(EmissionKind kind, const std::vector<double>& values,
                                            const std::vector<double>& weights) {
    double w_sum = 0.0, wy_sum = 0.0;
    for (std::size_t t = 0; t < values.size(); ++t) {
        w_sum += weights[t];
        wy_sum += weights[t] * values[t];
    }
    EmissionParams out;
    out.kind = kind;
    if (w_sum <= 0.0) return out;
    double mean = wy_sum / w_sum;

    switch (kind) {
        case EmissionKind::poisson:
            out.lambda = std::max(mean, kMinRate);
            break;
        case EmissionKind::gaussian: {
            double var = 0.0;
            for (std::size_t t = 0; t < values.size(); ++t) {
                double d = values[t] - mean;
                var += weights[t] * d * d;
            }
            out.mu = mean;
            out.sigma = std::max(std::sqrt(var / w_sum), kMinSigma);
            break;
        }
        case EmissionKind::geometric:
            out.p = clamp(1.0 / (1.0 + mean), kMinP, 1.0);
            break;
        case EmissionKind::hurdle_geometric: {
            double w_zero = 0.0, w_pos = 0.0, wy_pos = 0.0;
            for (std::size_t t = 0; t < values.size(); ++t) {
                if (values[t] == 0.0) {
                    w_zero += weights[t];
                } else {
                    w_pos += weights[t];
                    wy_pos += weights[t] * values[t];
                }
            }
            out.pi0 = clamp(w_zero / w_sum, 0.0, 1.0);
            out.p = w_pos > 0.0 ? clamp(w_pos / wy_pos, kMinP, 1.0) : 1.0;
            break;
        }
    }
    return out;
}

}  // namespace zonecast::forecast
