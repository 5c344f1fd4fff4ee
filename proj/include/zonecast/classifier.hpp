#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zonecast/features.hpp"
#include "zonecast/rng.hpp"

namespace zonecast::classify {

enum class Label { benign = 0, malicious = 1 };

struct LabeledDataset {
    std::vector<std::pair<features::FeatureVector, Label>> rows;
    std::vector<std::string> schema;

    void add(features::FeatureVector vector, Label label);
    std::size_t count(Label label) const;
};

/// Downsamples the majority class so that majority <= ratio * minority
/// (default 1:1). Selection is a seeded shuffle; row order is preserved
/// otherwise.
LabeledDataset balance_dataset(const LabeledDataset& data, double majority_ratio, Rng& rng);

struct TrainConfig {
    double l2 = 1e-4;
    int max_iters = 1000;
    double tolerance = 1e-9;
    std::uint64_t seed = 0;
};

struct FeatureScale {
    double mean = 0.0;
    double stddev = 1.0;
    bool constant = false;  // constant column: weight pinned to zero
};

struct TrainingMeta {
    int iterations = 0;
    double final_loss = 0.0;
    std::uint64_t seed = 0;
};

/// L2-regularized logistic regression fit by full-batch gradient descent on
/// standardized features. Deterministic given data and config.
class LinearClassifier {
public:
    LinearClassifier() = default;

    const std::vector<std::string>& schema() const { return schema_; }
    const std::vector<double>& weights() const { return weights_; }
    double bias() const { return bias_; }
    double threshold() const { return threshold_; }
    void set_threshold(double t) { threshold_ = t; }
    const std::vector<FeatureScale>& standardization() const { return scales_; }
    const TrainingMeta& training_meta() const { return meta_; }
    bool trained() const { return !schema_.empty(); }

    /// Probability of the malicious class. SchemaMismatch unless x.schema
    /// equals the training schema.
    double predict_proba(const features::FeatureVector& x) const;

    /// predict_proba >= threshold (ties count as positive).
    bool predict(const features::FeatureVector& x) const {
        return predict_proba(x) >= threshold_;
    }

    std::string to_json() const;
    static LinearClassifier from_json(const std::string& text);

    friend LinearClassifier train(const LabeledDataset& data, const TrainConfig& config);

private:
    std::vector<std::string> schema_;
    std::vector<double> weights_;
    double bias_ = 0.0;
    double threshold_ = 0.5;
    std::vector<FeatureScale> scales_;
    TrainingMeta meta_;
};

/// SingleClass unless both labels are present; NonFiniteFeature on NaN/inf
/// inputs.
LinearClassifier train(const LabeledDataset& data, const TrainConfig& config);

/// Confusion counts with derived metrics. Ratios are absent when their
/// denominator is zero.
struct EvalReport {
    long tp = 0, fp = 0, fn = 0, tn = 0;

    std::optional<double> precision() const {
        return tp + fp > 0 ? std::optional<double>(double(tp) / double(tp + fp)) : std::nullopt;
    }
    std::optional<double> recall() const {
        return tp + fn > 0 ? std::optional<double>(double(tp) / double(tp + fn)) : std::nullopt;
    }
    std::optional<double> f1() const {
        auto p = precision();
        auto r = recall();
        if (!p || !r || *p + *r <= 0.0) return std::nullopt;
        return 2.0 * *p * *r / (*p + *r);
    }
};

EvalReport evaluate_classifier(const LinearClassifier& model, const LabeledDataset& data);

struct MetricSummary {
    double min = 0.0, max = 0.0, mean = 0.0;
    long defined = 0;
};

struct CrossValidationResult {
    std::vector<EvalReport> runs;
    MetricSummary precision, recall, f1;
};

/// Repeated stratified hold-out evaluation: per run, test_fraction of each
/// class is held out, the model is retrained on the rest and scored on the
/// hold-out. Splits derive from (seed, run index), so runs are independent
/// of execution order. InsufficientData when a split cannot keep both
/// classes on both sides.
CrossValidationResult cross_validate(const LabeledDataset& data, int runs, double test_fraction,
                                     std::uint64_t seed, const TrainConfig& config);

}  // namespace zonecast::classify
