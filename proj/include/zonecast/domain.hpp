#pragma once

#include <optional>
#include <string>
#include <vector>

namespace zonecast::feed {

/// A registered domain name decomposed into labels. Normalized form: lower
/// case, no trailing dot. Labels are stored most-specific first, so
/// "p27dokhpz2n7nvgr.1cbcpy.top" has second_level "1cbcpy", top_level "top"
/// and third_level "p27dokhpz2n7nvgr".
struct DomainName {
    std::string raw;
    std::vector<std::string> labels;
    std::string second_level;
    std::string top_level;
    std::optional<std::string> third_level;

    /// Parses and normalizes a name. Requires at least a second-level and a
    /// top-level label; each label must match [a-z0-9-]+ and must not start
    /// or end with '-'. Returns nullopt otherwise.
    static std::optional<DomainName> parse(std::string_view name);

    /// second_level + "." + top_level — the registered unit.
    std::string registered_name() const { return second_level + "." + top_level; }

    bool operator==(const DomainName& other) const { return raw == other.raw; }
    bool operator<(const DomainName& other) const { return raw < other.raw; }
};

}  // namespace zonecast::feed
