#include "zonecast/zone.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "zonecast/csv.hpp"
#include "zonecast/error.hpp"

namespace zonecast::feed {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) tokens.push_back(tok);
    return tokens;
}

bool is_number(const std::string& s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool is_class(const std::string& s) {
    std::string l = to_lower(s);
    return l == "in" || l == "ch" || l == "hs" || l == "cs";
}

}  // namespace

ZoneSnapshot parse_zone_file(std::istream& input, const std::string& tld, Date date,
                             ZoneParseStats* stats) {
    ZoneSnapshot snapshot;
    snapshot.date = date;
    snapshot.tld = to_lower(trim(tld));
    ZoneParseStats local;
    ZoneParseStats& st = stats ? *stats : local;

    std::string origin;  // applied to relative owner names
    std::string line;
    long line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        // strip comments
        if (auto pos = line.find(';'); pos != std::string::npos) line.resize(pos);
        std::string stripped = trim(line);
        if (stripped.empty()) continue;
        if (stripped.find('(') != std::string::npos || stripped.find(')') != std::string::npos)
            raise(Errc::unsupported_syntax,
                  "parenthesized continuation at line " + std::to_string(line_no));

        auto tokens = split_ws(stripped);
        if (tokens[0] == "$ORIGIN" || tokens[0] == "$origin") {
            if (tokens.size() < 2) {
                ++st.skipped_invalid;
                continue;
            }
            origin = to_lower(tokens[1]);
            if (!origin.empty() && origin.back() == '.') origin.pop_back();
            continue;
        }
        if (tokens[0][0] == '$') continue;  // $TTL and friends

        // owner [ttl] [class] type rdata...
        std::string owner = to_lower(tokens[0]);
        std::size_t i = 1;
        while (i < tokens.size() && (is_number(tokens[i]) || is_class(tokens[i]))) ++i;
        if (i >= tokens.size()) {
            ++st.skipped_invalid;
            continue;
        }
        std::string type = to_lower(tokens[i]);
        if (type != "ns") {
            ++st.skipped_other_type;
            continue;
        }

        if (!owner.empty() && owner.back() == '.') {
            owner.pop_back();
        } else if (!origin.empty()) {
            owner = owner == "@" ? origin : owner + "." + origin;
        }
        if (owner == snapshot.tld) {
            ++st.skipped_other_type;  // zone apex, no registered domain
            continue;
        }
        auto parsed = DomainName::parse(owner);
        if (!parsed) {
            ++st.skipped_invalid;
            continue;
        }
        if (parsed->top_level != snapshot.tld)
            raise(Errc::tld_mismatch, "owner '" + owner + "' is not under ." + snapshot.tld +
                                          " (line " + std::to_string(line_no) + ")");
        auto registered = DomainName::parse(parsed->registered_name());
        snapshot.domains.insert(*registered);
        ++snapshot.record_count;
    }

    if (snapshot.record_count == 0) raise(Errc::empty_zone, "no NS records for ." + snapshot.tld);
    return snapshot;
}

ZoneDiff diff_zone_files(const ZoneSnapshot& older, const ZoneSnapshot& newer) {
    if (older.tld != newer.tld)
        raise(Errc::tld_mismatch, "'" + older.tld + "' vs '" + newer.tld + "'");
    if (!(older.date < newer.date))
        raise(Errc::date_order,
              older.date.to_string() + " is not before " + newer.date.to_string());

    ZoneDiff diff;
    diff.from_date = older.date;
    diff.to_date = newer.date;
    std::set_difference(newer.domains.begin(), newer.domains.end(), older.domains.begin(),
                        older.domains.end(), std::inserter(diff.added, diff.added.end()));
    std::set_difference(older.domains.begin(), older.domains.end(), newer.domains.begin(),
                        newer.domains.end(), std::inserter(diff.removed, diff.removed.end()));
    return diff;
}

void save_snapshot(std::ostream& out, const ZoneSnapshot& snapshot) {
    out << "# zone " << snapshot.tld << ' ' << snapshot.date.to_string() << ' '
        << snapshot.record_count << '\n';
    for (const auto& d : snapshot.domains) out << d.raw << '\n';
}

ZoneSnapshot load_snapshot(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) raise(Errc::io_error, "empty snapshot file");
    auto tokens = split_ws(header);
    if (tokens.size() != 5 || tokens[0] != "#" || tokens[1] != "zone")
        raise(Errc::io_error, "bad snapshot header '" + header + "'");
    ZoneSnapshot snapshot;
    snapshot.tld = tokens[2];
    auto date = Date::parse(tokens[3]);
    if (!date) raise(Errc::invalid_date, "bad snapshot date '" + tokens[3] + "'");
    snapshot.date = *date;
    snapshot.record_count = std::stol(tokens[4]);
    std::string line;
    while (std::getline(in, line)) {
        std::string name = trim(line);
        if (name.empty()) continue;
        auto parsed = DomainName::parse(name);
        if (!parsed) raise(Errc::io_error, "bad domain '" + name + "' in snapshot");
        snapshot.domains.insert(*parsed);
    }
    return snapshot;
}

void write_diff_domains(std::ostream& out, const ZoneDiff& diff) {
    for (const auto& d : diff.added) out << d.raw << '\n';
}

std::string diff_summary_json(const ZoneDiff& diff) {
    nlohmann::json j;
    j["from_date"] = diff.from_date.to_string();
    j["to_date"] = diff.to_date.to_string();
    j["added_count"] = diff.added.size();
    j["removed_count"] = diff.removed.size();
    return j.dump(2);
}

}  // namespace zonecast::feed
