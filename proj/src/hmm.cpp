#include "zonecast/hmm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zonecast/error.hpp"

namespace zonecast::forecast {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double logsumexp(const std::vector<double>& v) {
    double m = kNegInf;
    for (double x : v) m = std::max(m, x);
    if (m == kNegInf) return kNegInf;
    double s = 0.0;
    for (double x : v) s += std::exp(x - m);
    return m + std::log(s);
}

void check_stochastic(const std::vector<double>& v, const char* what) {
    double sum = 0.0;
    for (double x : v) {
        if (x < 0.0 || x > 1.0 || !std::isfinite(x))
            raise(Errc::invalid_stochastic_vector, std::string(what) + " entry out of [0,1]");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        raise(Errc::invalid_stochastic_vector,
              std::string(what) + " sums to " + std::to_string(sum));
}

struct LogParams {
    std::vector<double> log_pi;
    std::vector<std::vector<double>> log_eta;
    std::vector<std::vector<double>> log_emit;  // [t][state]
};

LogParams log_params(const std::vector<double>& pi,
                     const std::vector<std::vector<double>>& eta,
                     const std::vector<EmissionParams>& emissions,
                     const std::vector<double>& values) {
    std::size_t n = pi.size();
    LogParams lp;
    lp.log_pi.resize(n);
    for (std::size_t i = 0; i < n; ++i) lp.log_pi[i] = std::log(std::max(pi[i], 1e-300));
    lp.log_eta.assign(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            lp.log_eta[i][j] = std::log(std::max(eta[i][j], 1e-300));
    lp.log_emit.assign(values.size(), std::vector<double>(n));
    for (std::size_t t = 0; t < values.size(); ++t)
        for (std::size_t i = 0; i < n; ++i) lp.log_emit[t][i] = emissions[i].log_prob(values[t]);
    return lp;
}

/// Forward pass; returns log alpha and the sequence log-likelihood.
double forward(const LogParams& lp, std::vector<std::vector<double>>& log_alpha) {
    std::size_t T = lp.log_emit.size();
    std::size_t n = lp.log_pi.size();
    log_alpha.assign(T, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) log_alpha[0][i] = lp.log_pi[i] + lp.log_emit[0][i];
    std::vector<double> terms(n);
    for (std::size_t t = 1; t < T; ++t) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i)
                terms[i] = log_alpha[t - 1][i] + lp.log_eta[i][j];
            log_alpha[t][j] = logsumexp(terms) + lp.log_emit[t][j];
        }
    }
    double ll = logsumexp(log_alpha[T - 1]);
    if (!std::isfinite(ll))
        raise(Errc::numerical_underflow, "non-finite log-likelihood in forward pass");
    return ll;
}

void backward(const LogParams& lp, std::vector<std::vector<double>>& log_beta) {
    std::size_t T = lp.log_emit.size();
    std::size_t n = lp.log_pi.size();
    log_beta.assign(T, std::vector<double>(n, 0.0));
    std::vector<double> terms(n);
    for (std::size_t t = T - 1; t-- > 0;) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                terms[j] = lp.log_eta[i][j] + lp.log_emit[t + 1][j] + log_beta[t + 1][j];
            log_beta[t][i] = logsumexp(terms);
        }
    }
}

struct EmStep {
    std::vector<double> pi;
    std::vector<std::vector<double>> eta;
    std::vector<EmissionParams> emissions;
    double log_likelihood = 0.0;
};

EmStep em_step(const std::vector<double>& pi, const std::vector<std::vector<double>>& eta,
               const std::vector<EmissionParams>& emissions, const std::vector<double>& values,
               EmissionKind family) {
    std::size_t T = values.size();
    std::size_t n = pi.size();
    LogParams lp = log_params(pi, eta, emissions, values);
    std::vector<std::vector<double>> log_alpha, log_beta;
    double ll = forward(lp, log_alpha);
    backward(lp, log_beta);

    // posteriors in linear domain, normalized by the sequence likelihood
    std::vector<std::vector<double>> gamma(T, std::vector<double>(n));
    for (std::size_t t = 0; t < T; ++t)
        for (std::size_t i = 0; i < n; ++i)
            gamma[t][i] = std::exp(log_alpha[t][i] + log_beta[t][i] - ll);

    std::vector<std::vector<double>> xi_sum(n, std::vector<double>(n, 0.0));
    for (std::size_t t = 0; t + 1 < T; ++t)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                xi_sum[i][j] += std::exp(log_alpha[t][i] + lp.log_eta[i][j] +
                                         lp.log_emit[t + 1][j] + log_beta[t + 1][j] - ll);

    EmStep out;
    out.log_likelihood = ll;
    out.pi.resize(n);
    double pi_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) pi_sum += gamma[0][i];
    for (std::size_t i = 0; i < n; ++i) out.pi[i] = gamma[0][i] / pi_sum;

    out.eta.assign(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) row_sum += xi_sum[i][j];
        if (row_sum > 0.0) {
            for (std::size_t j = 0; j < n; ++j) out.eta[i][j] = xi_sum[i][j] / row_sum;
        } else {
            out.eta[i] = eta[i];  // state never occupied before T: keep row
        }
    }

    out.emissions.reserve(n);
    std::vector<double> weights(T);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = 0; t < T; ++t) weights[t] = gamma[t][i];
        out.emissions.push_back(EmissionParams::fit_weighted(family, values, weights));
    }
    return out;
}

/// Quantile-split starting point: state i gets the statistics of the i-th
/// slice of the sorted values, jittered per restart.
HmmInit default_init(const std::vector<double>& values, int n_states, EmissionKind family,
                     Rng& rng) {
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    std::size_t T = sorted.size();
    std::size_t n = static_cast<std::size_t>(n_states);

    double global_sd = 0.0, global_mean = 0.0;
    for (double v : sorted) global_mean += v;
    global_mean /= static_cast<double>(T);
    for (double v : sorted) global_sd += (v - global_mean) * (v - global_mean);
    global_sd = std::sqrt(global_sd / static_cast<double>(T));

    HmmInit init;
    init.pi.assign(n, 1.0 / static_cast<double>(n));
    init.eta.assign(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            init.eta[i][j] = i == j ? 0.8 : 0.2 / std::max<double>(1.0, double(n) - 1.0);
        }

    for (std::size_t i = 0; i < n; ++i) {
        std::size_t lo = i * T / n;
        std::size_t hi = std::max(lo + 1, (i + 1) * T / n);
        hi = std::min(hi, T);
        double mean = 0.0, zeros = 0.0, pos_sum = 0.0, pos_count = 0.0;
        for (std::size_t t = lo; t < hi; ++t) {
            mean += sorted[t];
            if (sorted[t] == 0.0)
                zeros += 1.0;
            else {
                pos_sum += sorted[t];
                pos_count += 1.0;
            }
        }
        double count = static_cast<double>(hi - lo);
        mean /= count;
        double jitter = 1.0 + 0.2 * (rng.uniform() - 0.5);

        EmissionParams e;
        e.kind = family;
        switch (family) {
            case EmissionKind::poisson:
                e.lambda = std::max(mean * jitter, 0.05);
                break;
            case EmissionKind::gaussian:
                e.mu = mean * jitter;
                e.sigma = std::max(global_sd * 0.75, 1e-3);
                break;
            case EmissionKind::geometric:
                e.p = std::clamp(1.0 / (1.0 + mean * jitter), 1e-6, 1.0 - 1e-6);
                break;
            case EmissionKind::hurdle_geometric: {
                e.pi0 = std::clamp(zeros / count + 0.05 * (rng.uniform() - 0.5), 0.01, 0.99);
                double pos_mean = pos_count > 0.0 ? pos_sum / pos_count : 1.0;
                e.p = std::clamp(1.0 / std::max(pos_mean * jitter, 1.0), 1e-6, 1.0);
                break;
            }
        }
        init.emissions.push_back(e);
    }
    return init;
}

HmmModel run_em(const HmmInit& init, const std::vector<double>& values, EmissionKind family,
                const HmmFitConfig& config) {
    HmmModel model;
    model.n_states = static_cast<int>(init.pi.size());
    model.initial = init.pi;
    model.transition = init.eta;
    model.emissions = init.emissions;

    double prev_ll = kNegInf;
    for (int iter = 0; iter < config.max_iters; ++iter) {
        EmStep step = em_step(model.initial, model.transition, model.emissions, values, family);
        model.log_likelihood = step.log_likelihood;
        model.iterations = iter + 1;
        bool converged =
            prev_ll != kNegInf && std::abs(step.log_likelihood - prev_ll) < config.tolerance;
        prev_ll = step.log_likelihood;
        model.initial = std::move(step.pi);
        model.transition = std::move(step.eta);
        model.emissions = std::move(step.emissions);
        if (converged) break;
    }
    model.fitted = true;
    return model;
}

}  // namespace

HmmSample hmm_generate(const HmmGenerateConfig& config) {
    if (config.length < 1) raise(Errc::invalid_argument, "length must be >= 1");
    if (static_cast<int>(config.pi.size()) != config.n_states)
        raise(Errc::invalid_stochastic_vector, "pi size does not match n_states");
    check_stochastic(config.pi, "pi");
    if (static_cast<int>(config.emissions.size()) != config.n_states)
        raise(Errc::invalid_argument, "one emission parameter set per state required");

    Rng rng(config.seed);
    std::vector<std::vector<double>> eta = config.eta;
    if (eta.empty()) {
        for (int i = 0; i < config.n_states; ++i)
            eta.push_back(rng.dirichlet(config.dirichlet_alpha,
                                        static_cast<std::size_t>(config.n_states)));
    } else {
        if (static_cast<int>(eta.size()) != config.n_states)
            raise(Errc::invalid_stochastic_vector, "eta must have one row per state");
        for (const auto& row : eta) {
            if (static_cast<int>(row.size()) != config.n_states)
                raise(Errc::invalid_stochastic_vector, "eta row size does not match n_states");
            check_stochastic(row, "eta row");
        }
    }

    HmmSample sample;
    sample.states.reserve(config.length);
    sample.series.values.reserve(config.length);
    sample.series.name = "hmm-sample";

    int state = static_cast<int>(rng.categorical(config.pi));
    for (std::size_t t = 0; t < config.length; ++t) {
        if (t > 0) state = static_cast<int>(rng.categorical(eta[state]));
        double y = config.emissions[state].sample(rng);
        if (config.emissions[state].kind == EmissionKind::gaussian && y < 0.0) {
            y = 0.0;
            ++sample.gaussian_clips;
        }
        sample.states.push_back(state);
        sample.series.values.push_back(y);
    }
    return sample;
}

HmmModel hmm_fit(const TimeSeries& series, int n_states, EmissionKind family,
                 const HmmFitConfig& config, const std::optional<HmmInit>& init) {
    const auto& values = series.values;
    if (n_states < 1) raise(Errc::invalid_argument, "n_states must be >= 1");
    if (static_cast<long>(values.size()) <= n_states)
        raise(Errc::series_too_short, "need more observations than states");
    if (is_count_family(family)) {
        for (double v : values)
            if (v < 0.0 || v != std::round(v))
                raise(Errc::invalid_argument,
                      "count emission families need non-negative integer values");
    }

    bool constant = std::all_of(values.begin(), values.end(),
                                [&](double v) { return v == values.front(); });
    if (constant && n_states > 1 && is_count_family(family)) {
        // one state explains everything; EM would make η unidentifiable
        HmmModel model;
        model.n_states = n_states;
        std::size_t n = static_cast<std::size_t>(n_states);
        model.initial.assign(n, 1.0 / double(n));
        model.transition.assign(n, std::vector<double>(n, 1.0 / double(n)));
        std::vector<double> ones(values.size(), 1.0);
        EmissionParams e = EmissionParams::fit_weighted(family, values, ones);
        model.emissions.assign(n, e);
        model.fitted = true;
        model.degenerate = true;
        model.warning = "constant series: states collapsed to a single effective state";
        model.log_likelihood = hmm_log_likelihood(model, series);
        model.state_path = std::vector<int>(values.size(), 0);
        return model;
    }

    HmmModel best;
    bool have_best = false;
    int restarts = init ? 1 : std::max(1, config.restarts);
    for (int r = 0; r < restarts; ++r) {
        HmmInit start;
        if (init) {
            start = *init;
        } else {
            Rng rng(derive_seed(config.seed, "hmm-restart", static_cast<std::uint64_t>(r)));
            start = default_init(values, n_states, family, rng);
        }
        HmmModel model = run_em(start, values, family, config);
        if (!have_best || model.log_likelihood > best.log_likelihood) {
            best = std::move(model);
            have_best = true;
        }
    }
    best.state_path = hmm_viterbi(best, series);
    return best;
}

std::vector<double> hmm_filter(const HmmModel& model, const TimeSeries& series) {
    if (!model.fitted) raise(Errc::unfit_model, "hmm_filter needs a fitted model");
    LogParams lp = log_params(model.initial, model.transition, model.emissions, series.values);
    std::vector<std::vector<double>> log_alpha;
    forward(lp, log_alpha);
    const auto& last = log_alpha.back();
    double norm = logsumexp(last);
    std::vector<double> dist(last.size());
    for (std::size_t i = 0; i < last.size(); ++i) dist[i] = std::exp(last[i] - norm);
    return dist;
}

std::vector<double> hmm_forecast(const HmmModel& model, const TimeSeries& series, int horizon) {
    if (!model.fitted) raise(Errc::unfit_model, "model is not fitted");
    if (horizon < 1) raise(Errc::unfit_model, "horizon must be >= 1");
    if (series.values.empty()) raise(Errc::series_too_short, "empty series");

    std::vector<double> dist = hmm_filter(model, series);
    std::size_t n = dist.size();
    std::vector<double> means(n);
    for (std::size_t i = 0; i < n; ++i) means[i] = model.emissions[i].mean();

    std::vector<double> forecasts;
    forecasts.reserve(static_cast<std::size_t>(horizon));
    std::vector<double> next(n);
    for (int h = 0; h < horizon; ++h) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) next[j] += dist[i] * model.transition[i][j];
        dist = next;
        double expected = 0.0;
        for (std::size_t j = 0; j < n; ++j) expected += dist[j] * means[j];
        forecasts.push_back(std::max(expected, 0.0));
    }
    return forecasts;
}

double hmm_log_likelihood(const HmmModel& model, const TimeSeries& series) {
    LogParams lp = log_params(model.initial, model.transition, model.emissions, series.values);
    std::vector<std::vector<double>> log_alpha;
    return forward(lp, log_alpha);
}

std::vector<int> hmm_viterbi(const HmmModel& model, const TimeSeries& series) {
    const auto& values = series.values;
    std::size_t T = values.size();
    std::size_t n = static_cast<std::size_t>(model.n_states);
    LogParams lp = log_params(model.initial, model.transition, model.emissions, values);

    std::vector<std::vector<double>> delta(T, std::vector<double>(n, kNegInf));
    std::vector<std::vector<int>> back(T, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) delta[0][i] = lp.log_pi[i] + lp.log_emit[0][i];
    for (std::size_t t = 1; t < T; ++t) {
        for (std::size_t j = 0; j < n; ++j) {
            double best = kNegInf;
            int arg = 0;
            for (std::size_t i = 0; i < n; ++i) {
                double cand = delta[t - 1][i] + lp.log_eta[i][j];
                if (cand > best) {
                    best = cand;
                    arg = static_cast<int>(i);
                }
            }
            delta[t][j] = best + lp.log_emit[t][j];
            back[t][j] = arg;
        }
    }
    std::vector<int> path(T);
    path[T - 1] = static_cast<int>(
        std::max_element(delta[T - 1].begin(), delta[T - 1].end()) - delta[T - 1].begin());
    for (std::size_t t = T - 1; t-- > 0;) path[t] = back[t + 1][path[t + 1]];
    return path;
}

}  // namespace zonecast::forecast
