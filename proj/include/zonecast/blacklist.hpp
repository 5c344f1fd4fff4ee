#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zonecast/date.hpp"
#include "zonecast/domain.hpp"
#include "zonecast/timeseries.hpp"

namespace zonecast::feed {

/// One published indicator: a domain reported malicious by a feed.
struct BlacklistEntry {
    DomainName domain;
    Date first_seen;
    std::string malware_family;
    std::string source;
};

/// Column-name mapping for heterogeneous CSV feeds.
struct BlacklistColumns {
    std::string date = "date";
    std::string malware = "malware";
    std::string host = "host";
};

struct BlacklistParseStats {
    long rows = 0;
    long skipped = 0;     // unparseable date or host
    long duplicates = 0;  // repeated (domain, first_seen) pairs
};

/// Parses a CSV feed (header row, '#' comments skipped). One entry per valid
/// row; rows with bad dates or hosts are counted and skipped; duplicate
/// (domain, first_seen) pairs collapse to the first occurrence.
/// MissingColumns when a mapped column is absent.
std::vector<BlacklistEntry> parse_blacklist_feed(std::istream& input, const std::string& source,
                                                 const BlacklistColumns& columns = {},
                                                 BlacklistParseStats* stats = nullptr);

/// Daily counts of distinct registered domains first seen on each day of
/// `range` for the given family (case-insensitive match). Days without
/// entries are zero. EmptyRange when from > to.
TimeSeries detections_time_series(const std::vector<BlacklistEntry>& entries,
                                  const std::string& family, const DateRange& range);

}  // namespace zonecast::feed
