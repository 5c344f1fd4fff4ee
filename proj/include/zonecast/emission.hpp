#pragma once

#include <string>
#include <vector>

#include "zonecast/rng.hpp"

namespace zonecast::forecast {

enum class EmissionKind { poisson, gaussian, geometric, hurdle_geometric };

EmissionKind emission_kind_from_string(const std::string& name);
std::string emission_kind_name(EmissionKind kind);

/// True for families defined on integer counts.
bool is_count_family(EmissionKind kind);

/// Per-state emission distribution.
///   poisson:          P(k) = e^-λ λ^k / k!                     mean λ
///   gaussian:         N(μ, σ²)                                 mean μ
///   geometric:        P(k) = p (1-p)^k on {0,1,...}            mean (1-p)/p
///   hurdle geometric: P(0) = π₀, P(k) = (1-π₀) p (1-p)^(k-1)   mean (1-π₀)/p
struct EmissionParams {
    EmissionKind kind = EmissionKind::poisson;
    double lambda = 1.0;  // poisson
    double mu = 0.0;      // gaussian
    double sigma = 1.0;   // gaussian
    double p = 0.5;       // geometric / hurdle
    double pi0 = 0.5;     // hurdle zero mass

    double mean() const;
    double log_prob(double y) const;
    double sample(Rng& rng) const;

    /// Weighted maximum-likelihood update (EM M-step). Parameters are
    /// clamped away from their degenerate boundaries.
    static EmissionParams fit_weighted(EmissionKind kind, const std::vector<double>& values,
                                       const std::vector<double>& weights);
};

}  // namespace zonecast::forecast
