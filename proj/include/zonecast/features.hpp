#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zonecast/domain.hpp"
#include "zonecast/whois.hpp"

namespace zonecast::features {

/// Name-structure features, computed on the second-level label only (the
/// registered unit; deeper labels are attacker-chosen per hidden service).
struct Step1Features {
    std::size_t length = 0;
    bool has_letter = false;
    bool digits_only = false;
    std::size_t distinct_chars = 0;
    bool has_hyphen = false;
    bool starts_with_digit = false;
};

/// WHOIS-derived features. Absent inputs yield absent-flagged values, never
/// failures.
struct Step2Features {
    bool org_in_name = false;
    std::optional<long> registration_days;  // expires - created, whole days
    std::optional<int> weekday;             // Monday=0, from created date
    bool fax_equals_phone = false;
    bool contacts_all_equal = false;
};

Step1Features step1_features(const feed::DomainName& domain);
Step2Features step2_features(const whois::WhoisRecord& record);

/// Numeric encoding with a fixed schema. Booleans become 0/1, the weekday is
/// one-hot over 7 slots, absent numerics carry a paired presence flag.
/// Step-1-only vectors have 6 entries; full vectors have 19.
struct FeatureVector {
    std::vector<double> values;
    std::vector<std::string> schema;
    feed::DomainName domain;
};

FeatureVector encode(const Step1Features& step1, const feed::DomainName& domain);
FeatureVector encode(const Step1Features& step1, const Step2Features& step2,
                     const feed::DomainName& domain);

const std::vector<std::string>& step1_schema();
const std::vector<std::string>& full_schema();

/// One row per vector, header = schema, first column = domain.
void write_features_csv(std::ostream& out, const std::vector<FeatureVector>& vectors);

}  // namespace zonecast::features
