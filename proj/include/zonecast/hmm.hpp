#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zonecast/emission.hpp"
#include "zonecast/timeseries.hpp"

namespace zonecast::forecast {

/// Hidden Markov model over daily counts: N latent activity regimes with
/// Markov transitions and per-state emission distributions.
struct HmmModel {
    int n_states = 0;
    std::vector<double> initial;                  // π
    std::vector<std::vector<double>> transition;  // η, row-stochastic
    std::vector<EmissionParams> emissions;        // φ per state
    std::optional<std::vector<int>> state_path;   // Viterbi estimate
    double log_likelihood = 0.0;
    int iterations = 0;
    bool fitted = false;
    bool degenerate = false;  // constant count series collapsed the states
    std::string warning;
};

struct HmmGenerateConfig {
    int n_states = 2;
    std::vector<double> pi;
    /// Explicit transition matrix; when empty, rows are drawn from a
    /// symmetric Dirichlet with `dirichlet_alpha`.
    std::vector<std::vector<double>> eta;
    double dirichlet_alpha = 1.0;
    std::vector<EmissionParams> emissions;  // one per state
    std::size_t length = 0;
    std::uint64_t seed = 0;
};

struct HmmSample {
    TimeSeries series;
    std::vector<int> states;
    long gaussian_clips = 0;  // negative Gaussian draws truncated to zero
};

/// Draws a state path from the Markov chain and emissions from the active
/// state's distribution. Gaussian draws are truncated at zero (the modeled
/// quantities are counts) and the truncation count is reported.
/// InvalidStochasticVector when π or an η row does not sum to one.
HmmSample hmm_generate(const HmmGenerateConfig& config);

struct HmmFitConfig {
    int max_iters = 500;
    double tolerance = 1e-6;
    int restarts = 3;
    std::uint64_t seed = 0;
};

/// Optional explicit starting point (used by tests and restarts).
struct HmmInit {
    std::vector<double> pi;
    std::vector<std::vector<double>> eta;
    std::vector<EmissionParams> emissions;
};

/// Baum-Welch estimation with the forward-backward pass in log space. The
/// per-iteration log-likelihood is non-decreasing; the best of `restarts`
/// jittered starts is returned. Constant series with a count family and
/// more than one state collapse to a single effective state (flagged, not
/// an error).
HmmModel hmm_fit(const TimeSeries& series, int n_states, EmissionKind family,
                 const HmmFitConfig& config, const std::optional<HmmInit>& init = std::nullopt);

/// Filtered state distribution P(z_T | y_1..y_T).
std::vector<double> hmm_filter(const HmmModel& model, const TimeSeries& series);

/// Expected counts for the next `horizon` days: the filtered state
/// distribution is pushed through the transition matrix once per step and
/// dotted with the per-state emission means.
std::vector<double> hmm_forecast(const HmmModel& model, const TimeSeries& series, int horizon);

/// Full-series log-likelihood under the model.
double hmm_log_likelihood(const HmmModel& model, const TimeSeries& series);

std::vector<int> hmm_viterbi(const HmmModel& model, const TimeSeries& series);

}  // namespace zonecast::forecast
