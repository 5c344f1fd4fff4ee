#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "zonecast/date.hpp"
#include "zonecast/domain.hpp"

namespace zonecast::whois {

inline constexpr int kFixtureSchemaVersion = 1;

struct WhoisContact {
    std::optional<std::string> name;
    std::optional<std::string> organization;
    std::optional<std::string> email;
    std::optional<std::string> telephone;
    std::optional<std::string> fax;

    bool known() const {
        return name || organization || email || telephone || fax;
    }
};

/// Trim + case-fold equality on name, organization and email.
bool contacts_equal(const WhoisContact& a, const WhoisContact& b);

enum class RecordSource { fixture, cache, live };

struct WhoisRecord {
    feed::DomainName domain;
    std::optional<Date> created;
    std::optional<Date> expires;
    std::optional<WhoisContact> registrant;
    std::optional<WhoisContact> admin;
    std::optional<WhoisContact> tech;
    std::int64_t fetched_at = 0;  // unix seconds; fixtures pin this
    RecordSource source = RecordSource::fixture;
};

/// Parses one fixture document (normalized vendor WHOIS as JSON). Recognized
/// fields are mapped, unknown fields ignored, empty strings treated as
/// absent. SchemaUnknown without a supported schema_version tag; InvalidDate
/// on unparseable dates or created > expires.
WhoisRecord parse_whois_fixture(const std::string& json_text);
std::string whois_record_to_json(const WhoisRecord& record);

/// Daily live-request allowance.
class LookupBudget {
public:
    explicit LookupBudget(long max_requests_per_day)
        : max_(max_requests_per_day), used_(0) {}

    /// Consumes one request if any remain.
    bool try_acquire() {
        std::lock_guard lock(mutex_);
        if (used_ >= max_) return false;
        ++used_;
        return true;
    }

    long used() const {
        std::lock_guard lock(mutex_);
        return used_;
    }
    long maximum() const { return max_; }

private:
    long max_;
    long used_;
    mutable std::mutex mutex_;
};

/// Abstract live lookup. Implementations may hit a vendor API; tests use the
/// fixture-backed client below.
class LookupClient {
public:
    virtual ~LookupClient() = default;
    virtual std::optional<WhoisRecord> fetch(const feed::DomainName& domain) = 0;
};

/// Serves records from an in-memory map or a directory of fixture files
/// (<registered-name>.json). Fetch count is tracked for tests.
class FixtureClient : public LookupClient {
public:
    FixtureClient() = default;
    explicit FixtureClient(std::filesystem::path fixture_dir)
        : dir_(std::move(fixture_dir)) {}

    void add(const WhoisRecord& record);
    std::optional<WhoisRecord> fetch(const feed::DomainName& domain) override;
    long fetch_count() const { return fetches_; }

private:
    std::optional<std::filesystem::path> dir_;
    std::map<std::string, WhoisRecord> records_;
    long fetches_ = 0;
};

/// Directory-backed record cache. One JSON document per domain, keyed by
/// (registered name, schema version); writes are serialized.
class WhoisCache {
public:
    explicit WhoisCache(std::filesystem::path dir);

    std::optional<WhoisRecord> get(const feed::DomainName& domain) const;
    void put(const WhoisRecord& record);

private:
    std::filesystem::path path_for(const feed::DomainName& domain) const;

    std::filesystem::path dir_;
    mutable std::mutex write_mutex_;
};

enum class LookupStatus { ok_cache, ok_live, budget_exhausted, not_found };

struct LookupOutcome {
    feed::DomainName domain;
    std::optional<WhoisRecord> record;
    LookupStatus status = LookupStatus::not_found;
};

/// Resolves domains cache-first; cache hits are free, live responses are
/// written back, and domains beyond the budget come back absent with
/// budget_exhausted. Output order matches input order.
std::vector<LookupOutcome> lookup_batch(const std::vector<feed::DomainName>& domains,
                                        LookupClient& client, WhoisCache& cache,
                                        LookupBudget& budget);

}  // namespace zonecast::whois
