#include "zonecast/features.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>

#include "zonecast/csv.hpp"
#include "zonecast/error.hpp"

namespace zonecast::features {

namespace {

std::string collapse_spaces(const std::string& s) {
    std::string out;
    bool prev_space = false;
    for (char c : trim(s)) {
        bool space = std::isspace(static_cast<unsigned char>(c));
        if (space && prev_space) continue;
        out += space ? ' ' : c;
        prev_space = space;
    }
    return out;
}

std::string digits_of(const std::string& s) {
    std::string out;
    for (char c : s)
        if (std::isdigit(static_cast<unsigned char>(c))) out += c;
    return out;
}

}  // namespace

Step1Features step1_features(const feed::DomainName& domain) {
    const std::string& label = domain.second_level;
    Step1Features f;
    f.length = label.size();
    f.distinct_chars = std::set<char>(label.begin(), label.end()).size();
    f.has_letter = std::any_of(label.begin(), label.end(), [](unsigned char c) {
        return std::isalpha(c);
    });
    f.digits_only = !label.empty() && std::all_of(label.begin(), label.end(), [](unsigned char c) {
        return std::isdigit(c);
    });
    f.has_hyphen = label.find('-') != std::string::npos;
    f.starts_with_digit = !label.empty() && std::isdigit(static_cast<unsigned char>(label[0]));
    return f;
}

Step2Features step2_features(const whois::WhoisRecord& record) {
    Step2Features f;

    if (record.registrant && record.registrant->name && record.registrant->organization) {
        std::string name = to_lower(collapse_spaces(*record.registrant->name));
        std::string org = to_lower(collapse_spaces(*record.registrant->organization));
        f.org_in_name = !org.empty() && name.find(org) != std::string::npos;
    }

    if (record.created && record.expires)
        f.registration_days = *record.expires - *record.created;
    if (record.created) f.weekday = record.created->weekday();

    if (record.registrant && record.registrant->telephone && record.registrant->fax) {
        std::string phone = digits_of(*record.registrant->telephone);
        std::string fax = digits_of(*record.registrant->fax);
        f.fax_equals_phone = !phone.empty() && phone == fax;
    }

    if (record.registrant && record.admin && record.tech) {
        f.contacts_all_equal = whois::contacts_equal(*record.registrant, *record.admin) &&
                               whois::contacts_equal(*record.registrant, *record.tech) &&
                               whois::contacts_equal(*record.admin, *record.tech);
    }
    return f;
}

const std::vector<std::string>& step1_schema() {
    static const std::vector<std::string> schema = {
        "sld_length",  "has_letter", "digits_only",
        "distinct_chars", "has_hyphen", "starts_with_digit",
    };
    return schema;
}

const std::vector<std::string>& full_schema() {
    static const std::vector<std::string> schema = [] {
        std::vector<std::string> s = step1_schema();
        s.push_back("org_in_name");
        s.push_back("registration_days");
        s.push_back("registration_days_present");
        for (const char* day : {"mon", "tue", "wed", "thu", "fri", "sat", "sun"})
            s.push_back(std::string("weekday_") + day);
        s.push_back("weekday_present");
        s.push_back("fax_equals_phone");
        s.push_back("contacts_all_equal");
        return s;
    }();
    return schema;
}

namespace {

void append_step1(std::vector<double>& values, const Step1Features& f) {
    values.push_back(static_cast<double>(f.length));
    values.push_back(f.has_letter ? 1.0 : 0.0);
    values.push_back(f.digits_only ? 1.0 : 0.0);
    values.push_back(static_cast<double>(f.distinct_chars));
    values.push_back(f.has_hyphen ? 1.0 : 0.0);
    values.push_back(f.starts_with_digit ? 1.0 : 0.0);
}

}  // namespace

FeatureVector encode(const Step1Features& step1, const feed::DomainName& domain) {
    FeatureVector v;
    v.schema = step1_schema();
    v.domain = domain;
    append_step1(v.values, step1);
    return v;
}

FeatureVector encode(const Step1Features& step1, const Step2Features& step2,
                     const feed::DomainName& domain) {
    FeatureVector v;
    v.schema = full_schema();
    v.domain = domain;
    append_step1(v.values, step1);
    v.values.push_back(step2.org_in_name ? 1.0 : 0.0);
    v.values.push_back(step2.registration_days ? static_cast<double>(*step2.registration_days)
                                               : 0.0);
    v.values.push_back(step2.registration_days ? 1.0 : 0.0);
    for (int day = 0; day < 7; ++day)
        v.values.push_back(step2.weekday && *step2.weekday == day ? 1.0 : 0.0);
    v.values.push_back(step2.weekday ? 1.0 : 0.0);
    v.values.push_back(step2.fax_equals_phone ? 1.0 : 0.0);
    v.values.push_back(step2.contacts_all_equal ? 1.0 : 0.0);
    return v;
}

void write_features_csv(std::ostream& out, const std::vector<FeatureVector>& vectors) {
    if (vectors.empty()) return;
    out << "domain";
    for (const auto& name : vectors.front().schema) out << ',' << name;
    out << '\n';
    for (const auto& v : vectors) {
        if (v.schema != vectors.front().schema)
            raise(Errc::schema_mismatch, "mixed schemas in feature CSV");
        out << v.domain.raw;
        for (double value : v.values) out << ',' << value;
        out << '\n';
    }
}

}  // namespace zonecast::features
