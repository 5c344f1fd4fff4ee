#pragma once

#include <map>
#include <optional>
#include <vector>

#include "zonecast/classifier.hpp"
#include "zonecast/whois.hpp"
#include "zonecast/zone.hpp"

namespace zonecast::classify {

/// Scores for one domain as it moves through the two stages. score2 is
/// absent when the domain did not survive stage one or its WHOIS lookup
/// failed.
struct DomainScores {
    double score1 = 0.0;
    std::optional<double> score2;
};

struct PipelineResult {
    std::size_t input_count = 0;
    std::vector<feed::DomainName> step1_survivors;
    std::vector<feed::DomainName> step2_candidates;
    std::vector<feed::DomainName> whois_failed;  // survivors without a record
    std::map<std::string, DomainScores> per_domain_scores;
};

/// Pluggable WHOIS resolution used by the pipeline; the production
/// implementation wraps lookup_batch over a client, cache, and budget.
class WhoisSource {
public:
    virtual ~WhoisSource() = default;
    virtual std::vector<whois::LookupOutcome> lookup(
        const std::vector<feed::DomainName>& domains) = 0;
};

class BatchWhoisSource : public WhoisSource {
public:
    BatchWhoisSource(whois::LookupClient& client, whois::WhoisCache& cache,
                     whois::LookupBudget& budget)
        : client_(client), cache_(cache), budget_(budget) {}

    std::vector<whois::LookupOutcome> lookup(
        const std::vector<feed::DomainName>& domains) override {
        return whois::lookup_batch(domains, client_, cache_, budget_);
    }

private:
    whois::LookupClient& client_;
    whois::WhoisCache& cache_;
    whois::LookupBudget& budget_;
};

/// Scores every added domain with the stage-one model, resolves WHOIS only
/// for the survivors, and promotes survivors whose stage-two score clears
/// the threshold. Survivors without WHOIS stay survivors but are never
/// candidates. Guarantees step2_candidates ⊆ step1_survivors ⊆ diff.added.
PipelineResult run_pipeline(const feed::ZoneDiff& diff, const LinearClassifier& step1,
                            const LinearClassifier& step2, WhoisSource& whois_source);

}  // namespace zonecast::classify
