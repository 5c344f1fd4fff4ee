#include "zonecast/blacklist.hpp"

#include <istream>
#include <set>

#include "zonecast/csv.hpp"
#include "zonecast/error.hpp"

namespace zonecast::feed {

std::vector<BlacklistEntry> parse_blacklist_feed(std::istream& input, const std::string& source,
                                                 const BlacklistColumns& columns,
                                                 BlacklistParseStats* stats) {
    CsvReader reader(input);
    auto date_col = reader.column(columns.date);
    auto malware_col = reader.column(columns.malware);
    auto host_col = reader.column(columns.host);
    if (!date_col || !malware_col || !host_col) {
        std::string missing;
        if (!date_col) missing += " " + columns.date;
        if (!malware_col) missing += " " + columns.malware;
        if (!host_col) missing += " " + columns.host;
        raise(Errc::missing_columns, "feed lacks column(s):" + missing);
    }

    BlacklistParseStats local;
    BlacklistParseStats& st = stats ? *stats : local;
    std::vector<BlacklistEntry> entries;
    std::set<std::pair<std::string, Date>> seen;
    std::vector<std::string> row;
    while (reader.next(row)) {
        ++st.rows;
        std::size_t needed = std::max({*date_col, *malware_col, *host_col});
        if (row.size() <= needed) {
            ++st.skipped;
            continue;
        }
        auto date = Date::parse(trim(row[*date_col]));
        auto domain = DomainName::parse(trim(row[*host_col]));
        std::string family = trim(row[*malware_col]);
        if (!date || !domain || family.empty()) {
            ++st.skipped;
            continue;
        }
        if (!seen.insert({domain->raw, *date}).second) {
            ++st.duplicates;
            continue;
        }
        entries.push_back({std::move(*domain), *date, std::move(family), source});
    }
    return entries;
}

TimeSeries detections_time_series(const std::vector<BlacklistEntry>& entries,
                                  const std::string& family, const DateRange& range) {
    if (range.empty()) raise(Errc::empty_range, "detection range is empty");

    TimeSeries series;
    series.start_date = range.from;
    series.name = family.empty() ? "detections" : to_lower(family);
    series.values.assign(static_cast<std::size_t>(range.length()), 0.0);

    std::string want = to_lower(family);
    // distinct registered domains per day: the same registered name reported
    // twice on one day (e.g. under different third-level labels) counts once
    std::set<std::pair<long, std::string>> counted;
    for (const auto& entry : entries) {
        if (!want.empty() && to_lower(entry.malware_family) != want) continue;
        if (entry.first_seen < range.from || entry.first_seen > range.to) continue;
        long offset = entry.first_seen - range.from;
        if (counted.insert({offset, entry.domain.registered_name()}).second)
            series.values[static_cast<std::size_t>(offset)] += 1.0;
    }
    return series;
}

}  // namespace zonecast::feed
