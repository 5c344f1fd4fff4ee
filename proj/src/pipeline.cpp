#include "zonecast/pipeline.hpp"

namespace zonecast::classify {

PipelineResult run_pipeline(const feed::ZoneDiff& diff, const LinearClassifier& step1,
                            const LinearClassifier& step2, WhoisSource& whois_source) {
    PipelineResult result;
    result.input_count = diff.added.size();

    for (const auto& domain : diff.added) {
        auto vec = features::encode(features::step1_features(domain), domain);
        double score = step1.predict_proba(vec);
        result.per_domain_scores[domain.raw].score1 = score;
        if (score >= step1.threshold()) result.step1_survivors.push_back(domain);
    }

    auto outcomes = whois_source.lookup(result.step1_survivors);
    for (const auto& outcome : outcomes) {
        if (!outcome.record) {
            result.whois_failed.push_back(outcome.domain);
            continue;
        }
        auto vec = features::encode(features::step1_features(outcome.domain),
                                    features::step2_features(*outcome.record), outcome.domain);
        double score = step2.predict_proba(vec);
        result.per_domain_scores[outcome.domain.raw].score2 = score;
        if (score >= step2.threshold()) result.step2_candidates.push_back(outcome.domain);
    }
    return result;
}

}  // namespace zonecast::classify
