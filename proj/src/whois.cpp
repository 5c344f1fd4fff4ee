#include "zonecast/whois.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "zonecast/csv.hpp"
#include "zonecast/error.hpp"

namespace zonecast::whois {

using nlohmann::json;

namespace {

std::optional<std::string> norm_field(const std::optional<std::string>& field) {
    if (!field) return std::nullopt;
    std::string t = trim(*field);
    if (t.empty()) return std::nullopt;
    return t;
}

bool field_equal(const std::optional<std::string>& a, const std::optional<std::string>& b) {
    auto na = norm_field(a);
    auto nb = norm_field(b);
    if (!na && !nb) return true;
    if (!na || !nb) return false;
    return to_lower(*na) == to_lower(*nb);
}

std::optional<std::string> read_string(const json& j, const char* key) {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    std::string value = j[key].get<std::string>();
    return norm_field(value);
}

std::optional<WhoisContact> read_contact(const json& j, const char* key) {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    const json& c = j[key];
    WhoisContact contact;
    contact.name = read_string(c, "name");
    contact.organization = read_string(c, "organization");
    contact.email = read_string(c, "email");
    contact.telephone = read_string(c, "telephone");
    contact.fax = read_string(c, "fax");
    if (!contact.known()) return std::nullopt;
    return contact;
}

std::optional<Date> read_date(const json& j, const char* key) {
    auto text = read_string(j, key);
    if (!text) return std::nullopt;
    auto date = Date::parse(*text);
    if (!date) raise(Errc::invalid_date, std::string(key) + " '" + *text + "'");
    return date;
}

json contact_to_json(const WhoisContact& contact) {
    json c = json::object();
    if (contact.name) c["name"] = *contact.name;
    if (contact.organization) c["organization"] = *contact.organization;
    if (contact.email) c["email"] = *contact.email;
    if (contact.telephone) c["telephone"] = *contact.telephone;
    if (contact.fax) c["fax"] = *contact.fax;
    return c;
}

}  // namespace

bool contacts_equal(const WhoisContact& a, const WhoisContact& b) {
    return field_equal(a.name, b.name) && field_equal(a.organization, b.organization) &&
           field_equal(a.email, b.email);
}

WhoisRecord parse_whois_fixture(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        raise(Errc::schema_unknown, std::string("not a JSON document: ") + e.what());
    }
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer())
        raise(Errc::schema_unknown, "missing schema_version tag");
    if (j["schema_version"].get<int>() != kFixtureSchemaVersion)
        raise(Errc::schema_unknown,
              "unsupported schema_version " + j["schema_version"].dump());
    auto name = read_string(j, "domain");
    if (!name) raise(Errc::schema_unknown, "missing domain field");
    auto domain = feed::DomainName::parse(*name);
    if (!domain) raise(Errc::schema_unknown, "invalid domain '" + *name + "'");

    WhoisRecord record;
    record.domain = *domain;
    record.created = read_date(j, "created");
    record.expires = read_date(j, "expires");
    if (record.created && record.expires && *record.expires < *record.created)
        raise(Errc::invalid_date, "created " + record.created->to_string() + " after expires " +
                                      record.expires->to_string());
    record.registrant = read_contact(j, "registrant");
    record.admin = read_contact(j, "admin");
    record.tech = read_contact(j, "tech");
    if (j.contains("fetched_at") && j["fetched_at"].is_number_integer())
        record.fetched_at = j["fetched_at"].get<std::int64_t>();
    record.source = RecordSource::fixture;
    return record;
}

std::string whois_record_to_json(const WhoisRecord& record) {
    json j;
    j["schema_version"] = kFixtureSchemaVersion;
    j["domain"] = record.domain.raw;
    if (record.created) j["created"] = record.created->to_string();
    if (record.expires) j["expires"] = record.expires->to_string();
    if (record.registrant) j["registrant"] = contact_to_json(*record.registrant);
    if (record.admin) j["admin"] = contact_to_json(*record.admin);
    if (record.tech) j["tech"] = contact_to_json(*record.tech);
    j["fetched_at"] = record.fetched_at;
    return j.dump(2);
}

void FixtureClient::add(const WhoisRecord& record) {
    records_[record.domain.registered_name()] = record;
}

std::optional<WhoisRecord> FixtureClient::fetch(const feed::DomainName& domain) {
    ++fetches_;
    if (auto it = records_.find(domain.registered_name()); it != records_.end()) {
        WhoisRecord r = it->second;
        r.source = RecordSource::live;
        return r;
    }
    if (dir_) {
        auto path = *dir_ / (domain.registered_name() + ".json");
        std::ifstream in(path);
        if (in) {
            std::stringstream buf;
            buf << in.rdbuf();
            WhoisRecord r = parse_whois_fixture(buf.str());
            r.source = RecordSource::live;
            return r;
        }
    }
    return std::nullopt;
}

WhoisCache::WhoisCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path WhoisCache::path_for(const feed::DomainName& domain) const {
    // registered names are LDH-only after DomainName validation, so the name
    // itself is filesystem-safe
    return dir_ / (domain.registered_name() + ".json");
}

std::optional<WhoisRecord> WhoisCache::get(const feed::DomainName& domain) const {
    std::ifstream in(path_for(domain));
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        WhoisRecord record = parse_whois_fixture(buf.str());
        record.source = RecordSource::cache;
        return record;
    } catch (const Error&) {
        return std::nullopt;  // stale or mismatched schema: treat as miss
    }
}

void WhoisCache::put(const WhoisRecord& record) {
    std::lock_guard lock(write_mutex_);
    std::ofstream out(path_for(record.domain));
    if (!out) raise(Errc::io_error, "cannot write cache file for " + record.domain.raw);
    out << whois_record_to_json(record) << '\n';
}

std::vector<LookupOutcome> lookup_batch(const std::vector<feed::DomainName>& domains,
                                        LookupClient& client, WhoisCache& cache,
                                        LookupBudget& budget) {
    std::vector<LookupOutcome> outcomes;
    outcomes.reserve(domains.size());
    for (const auto& domain : domains) {
        LookupOutcome outcome;
        outcome.domain = domain;
        if (auto cached = cache.get(domain)) {
            outcome.record = std::move(cached);
            outcome.status = LookupStatus::ok_cache;
        } else if (!budget.try_acquire()) {
            outcome.status = LookupStatus::budget_exhausted;
        } else if (auto live = client.fetch(domain)) {
            cache.put(*live);
            outcome.record = std::move(live);
            outcome.status = LookupStatus::ok_live;
        } else {
            outcome.status = LookupStatus::not_found;
        }
        outcomes.push_back(std::move(outcome));
    }
    return outcomes;
}

}  // namespace zonecast::whois
