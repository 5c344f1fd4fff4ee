#include "zonecast/classifier.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "zonecast/error.hpp"

namespace zonecast::classify {

using nlohmann::json;

void LabeledDataset::add(features::FeatureVector vector, Label label) {
    if (schema.empty())
        schema = vector.schema;
    else if (schema != vector.schema)
        raise(Errc::schema_mismatch, "row schema differs from dataset schema");
    rows.emplace_back(std::move(vector), label);
}

std::size_t LabeledDataset::count(Label label) const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [&](const auto& r) { return r.second == label; }));
}

LabeledDataset balance_dataset(const LabeledDataset& data, double majority_ratio, Rng& rng) {
    std::size_t n_mal = data.count(Label::malicious);
    std::size_t n_ben = data.rows.size() - n_mal;
    Label majority = n_ben >= n_mal ? Label::benign : Label::malicious;
    std::size_t minority_count = std::min(n_mal, n_ben);
    std::size_t keep = static_cast<std::size_t>(
        std::llround(majority_ratio * static_cast<double>(minority_count)));
    keep = std::max<std::size_t>(keep, 1);

    std::vector<std::size_t> majority_rows;
    for (std::size_t i = 0; i < data.rows.size(); ++i)
        if (data.rows[i].second == majority) majority_rows.push_back(i);
    if (majority_rows.size() <= keep) return data;

    rng.shuffle(majority_rows);
    majority_rows.resize(keep);
    std::sort(majority_rows.begin(), majority_rows.end());

    LabeledDataset out;
    out.schema = data.schema;
    std::size_t next = 0;
    for (std::size_t i = 0; i < data.rows.size(); ++i) {
        bool is_majority = data.rows[i].second == majority;
        if (is_majority) {
            if (next < majority_rows.size() && majority_rows[next] == i) {
                out.rows.push_back(data.rows[i]);
                ++next;
            }
        } else {
            out.rows.push_back(data.rows[i]);
        }
    }
    return out;
}

namespace {

double sigmoid(double z) {
    if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
    double e = std::exp(z);
    return e / (1.0 + e);
}

/// log(1 + exp(-m)) without overflow.
double logistic_loss_term(double margin) {
    if (margin > 0) return std::log1p(std::exp(-margin));
    return -margin + std::log1p(std::exp(margin));
}

struct Standardized {
    std::vector<std::vector<double>> x;  // rows, standardized
    std::vector<double> y;               // +1 / -1
    std::vector<FeatureScale> scales;
};

Standardized standardize(const LabeledDataset& data) {
    std::size_t n = data.rows.size();
    std::size_t m = data.schema.size();
    Standardized out;
    out.scales.resize(m);

    for (std::size_t j = 0; j < m; ++j) {
        double sum = 0.0;
        for (const auto& [vec, label] : data.rows) sum += vec.values[j];
        double mean = sum / static_cast<double>(n);
        double var = 0.0;
        for (const auto& [vec, label] : data.rows) {
            double d = vec.values[j] - mean;
            var += d * d;
        }
        var /= static_cast<double>(n);
        double sd = std::sqrt(var);
        out.scales[j].mean = mean;
        if (sd < 1e-12) {
            out.scales[j].stddev = 1.0;
            out.scales[j].constant = true;
        } else {
            out.scales[j].stddev = sd;
        }
    }

    out.x.reserve(n);
    out.y.reserve(n);
    for (const auto& [vec, label] : data.rows) {
        std::vector<double> row(m);
        for (std::size_t j = 0; j < m; ++j)
            row[j] = (vec.values[j] - out.scales[j].mean) / out.scales[j].stddev;
        out.x.push_back(std::move(row));
        out.y.push_back(label == Label::malicious ? 1.0 : -1.0);
    }
    return out;
}

double objective(const Standardized& s, const std::vector<double>& w, double b, double l2) {
    double loss = 0.0;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        double z = b;
        for (std::size_t j = 0; j < w.size(); ++j) z += w[j] * s.x[i][j];
        loss += logistic_loss_term(s.y[i] * z);
    }
    loss /= static_cast<double>(s.x.size());
    double penalty = 0.0;
    for (double wj : w) penalty += wj * wj;
    return loss + 0.5 * l2 * penalty;
}

}  // namespace

LinearClassifier train(const LabeledDataset& data, const TrainConfig& config) {
    if (data.rows.empty() || data.count(Label::malicious) == 0 ||
        data.count(Label::benign) == 0)
        raise(Errc::single_class, "training data must contain both classes");
    for (const auto& [vec, label] : data.rows)
        for (double v : vec.values)
            if (!std::isfinite(v)) raise(Errc::non_finite_feature, "in row for " + vec.domain.raw);

    Standardized s = standardize(data);
    std::size_t n = s.x.size();
    std::size_t m = data.schema.size();

    std::vector<double> w(m, 0.0);
    double b = 0.0;
    double loss = objective(s, w, b, config.l2);
    double lr = 1.0;
    int iters = 0;

    std::vector<double> grad(m);
    for (; iters < config.max_iters; ++iters) {
        std::fill(grad.begin(), grad.end(), 0.0);
        double grad_b = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double z = b;
            for (std::size_t j = 0; j < m; ++j) z += w[j] * s.x[i][j];
            // d/dz log(1+exp(-y z)) = -y * sigmoid(-y z)
            double g = -s.y[i] * sigmoid(-s.y[i] * z);
            for (std::size_t j = 0; j < m; ++j) grad[j] += g * s.x[i][j];
            grad_b += g;
        }
        double inv_n = 1.0 / static_cast<double>(n);
        for (std::size_t j = 0; j < m; ++j) {
            grad[j] = grad[j] * inv_n + config.l2 * w[j];
            if (s.scales[j].constant) grad[j] = 0.0;
        }
        grad_b *= inv_n;

        // monotone step: halve the rate until the objective decreases
        std::vector<double> w_next(m);
        double b_next = 0.0, loss_next = 0.0;
        bool accepted = false;
        for (int halvings = 0; halvings < 40; ++halvings) {
            for (std::size_t j = 0; j < m; ++j) w_next[j] = w[j] - lr * grad[j];
            b_next = b - lr * grad_b;
            loss_next = objective(s, w_next, b_next, config.l2);
            if (loss_next <= loss) {
                accepted = true;
                break;
            }
            lr *= 0.5;
        }
        if (!accepted) break;
        double delta = loss - loss_next;
        w = std::move(w_next);
        b = b_next;
        loss = loss_next;
        lr = std::min(lr * 1.1, 16.0);
        if (delta < config.tolerance) {
            ++iters;
            break;
        }
    }

    LinearClassifier model;
    model.schema_ = data.schema;
    model.weights_ = std::move(w);
    model.bias_ = b;
    model.scales_ = std::move(s.scales);
    model.meta_ = {iters, loss, config.seed};
    return model;
}

double LinearClassifier::predict_proba(const features::FeatureVector& x) const {
    if (x.schema != schema_)
        raise(Errc::schema_mismatch, "feature schema does not match the model");
    double z = bias_;
    for (std::size_t j = 0; j < weights_.size(); ++j)
        z += weights_[j] * (x.values[j] - scales_[j].mean) / scales_[j].stddev;
    return sigmoid(z);
}

std::string LinearClassifier::to_json() const {
    json j;
    j["format_version"] = 1;
    j["schema"] = schema_;
    j["weights"] = weights_;
    j["bias"] = bias_;
    j["threshold"] = threshold_;
    json scales = json::array();
    for (const auto& s : scales_)
        scales.push_back({{"mean", s.mean}, {"stddev", s.stddev}, {"constant", s.constant}});
    j["standardization"] = scales;
    j["training_meta"] = {{"iterations", meta_.iterations},
                          {"final_loss", meta_.final_loss},
                          {"seed", meta_.seed}};
    return j.dump(2);
}

LinearClassifier LinearClassifier::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        raise(Errc::io_error, std::string("bad model file: ") + e.what());
    }
    if (!j.contains("format_version") || j["format_version"].get<int>() != 1)
        raise(Errc::io_error, "unsupported model format_version");
    LinearClassifier model;
    model.schema_ = j["schema"].get<std::vector<std::string>>();
    model.weights_ = j["weights"].get<std::vector<double>>();
    model.bias_ = j["bias"].get<double>();
    model.threshold_ = j["threshold"].get<double>();
    for (const auto& s : j["standardization"])
        model.scales_.push_back(
            {s["mean"].get<double>(), s["stddev"].get<double>(), s["constant"].get<bool>()});
    model.meta_.iterations = j["training_meta"]["iterations"].get<int>();
    model.meta_.final_loss = j["training_meta"]["final_loss"].get<double>();
    model.meta_.seed = j["training_meta"]["seed"].get<std::uint64_t>();
    if (model.weights_.size() != model.schema_.size() ||
        model.scales_.size() != model.schema_.size())
        raise(Errc::io_error, "model file is internally inconsistent");
    return model;
}

EvalReport evaluate_classifier(const LinearClassifier& model, const LabeledDataset& data) {
    EvalReport report;
    for (const auto& [vec, label] : data.rows) {
        bool positive = model.predict(vec);
        bool truth = label == Label::malicious;
        if (positive && truth)
            ++report.tp;
        else if (positive && !truth)
            ++report.fp;
        else if (!positive && truth)
            ++report.fn;
        else
            ++report.tn;
    }
    return report;
}

namespace {

void accumulate(MetricSummary& summary, std::optional<double> value) {
    if (!value) return;
    if (summary.defined == 0) {
        summary.min = summary.max = *value;
    } else {
        summary.min = std::min(summary.min, *value);
        summary.max = std::max(summary.max, *value);
    }
    summary.mean += *value;
    ++summary.defined;
}

void finalize(MetricSummary& summary) {
    if (summary.defined > 0) summary.mean /= static_cast<double>(summary.defined);
}

}  // namespace

CrossValidationResult cross_validate(const LabeledDataset& data, int runs, double test_fraction,
                                     std::uint64_t seed, const TrainConfig& config) {
    if (runs < 1) raise(Errc::invalid_argument, "runs must be >= 1");
    if (!(test_fraction > 0.0 && test_fraction < 1.0))
        raise(Errc::invalid_argument, "test_fraction must be in (0, 1)");

    std::vector<std::size_t> malicious_rows, benign_rows;
    for (std::size_t i = 0; i < data.rows.size(); ++i)
        (data.rows[i].second == Label::malicious ? malicious_rows : benign_rows).push_back(i);

    auto test_count = [&](std::size_t class_size) {
        return static_cast<std::size_t>(
            std::llround(test_fraction * static_cast<double>(class_size)));
    };
    std::size_t test_mal = test_count(malicious_rows.size());
    std::size_t test_ben = test_count(benign_rows.size());
    if (test_mal < 1 || test_ben < 1 || test_mal >= malicious_rows.size() ||
        test_ben >= benign_rows.size())
        raise(Errc::insufficient_data,
              "stratified split cannot keep both classes in train and test");

    CrossValidationResult result;
    result.runs.reserve(static_cast<std::size_t>(runs));
    for (int run = 0; run < runs; ++run) {
        Rng rng(derive_seed(seed, "cross-validate", static_cast<std::uint64_t>(run)));
        auto mal = malicious_rows;
        auto ben = benign_rows;
        rng.shuffle(mal);
        rng.shuffle(ben);

        LabeledDataset train_set, test_set;
        train_set.schema = test_set.schema = data.schema;
        for (std::size_t i = 0; i < mal.size(); ++i)
            (i < test_mal ? test_set : train_set).rows.push_back(data.rows[mal[i]]);
        for (std::size_t i = 0; i < ben.size(); ++i)
            (i < test_ben ? test_set : train_set).rows.push_back(data.rows[ben[i]]);

        TrainConfig run_config = config;
        run_config.seed = derive_seed(seed, "cv-train", static_cast<std::uint64_t>(run));
        LinearClassifier model = train(train_set, run_config);
        result.runs.push_back(evaluate_classifier(model, test_set));
    }

    for (const auto& report : result.runs) {
        accumulate(result.precision, report.precision());
        accumulate(result.recall, report.recall());
        accumulate(result.f1, report.f1());
    }
    finalize(result.precision);
    finalize(result.recall);
    finalize(result.f1);
    return result;
}

}  // namespace zonecast::classify
