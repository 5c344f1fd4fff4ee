#pragma once

#include <iosfwd>
#include <set>
#include <string>

#include "zonecast/date.hpp"
#include "zonecast/domain.hpp"

namespace zonecast::feed {

/// Set of registered (second-level) domains delegated under one TLD on one
/// day. record_count is the number of NS records the set was extracted from.
struct ZoneSnapshot {
    Date date;
    std::string tld;
    std::set<DomainName> domains;
    long record_count = 0;
};

struct ZoneDiff {
    Date from_date;
    Date to_date;
    std::set<DomainName> added;
    std::set<DomainName> removed;
};

/// Per-parse diagnostics: lines that were tolerated but not used.
struct ZoneParseStats {
    long skipped_other_type = 0;  // valid records of non-NS types, zone apex
    long skipped_invalid = 0;     // lines that failed to parse
};

/// Extracts the registered second-level domains under `tld` from the NS
/// records of a master-file style listing. Owner name comes first on each
/// line; TTL and class fields are optional; '$ORIGIN' is honored; other
/// record types and unparseable lines are counted in `stats` and skipped.
/// Parenthesized multi-line records are not supported and raise
/// UnsupportedSyntax; EmptyZone when no NS record parses; TldMismatch when
/// an NS owner is not under `tld`.
ZoneSnapshot parse_zone_file(std::istream& input, const std::string& tld, Date date,
                             ZoneParseStats* stats = nullptr);

/// Exact set differences between two snapshots of the same TLD.
/// DateOrder unless older.date < newer.date; TldMismatch on different TLDs.
ZoneDiff diff_zone_files(const ZoneSnapshot& older, const ZoneSnapshot& newer);

/// Snapshot persistence: header line "# zone <tld> <date> <record_count>"
/// followed by one domain per line.
void save_snapshot(std::ostream& out, const ZoneSnapshot& snapshot);
ZoneSnapshot load_snapshot(std::istream& in);

/// Diff persistence: the added set one domain per line plus a JSON summary
/// {from_date, to_date, added_count, removed_count}.
void write_diff_domains(std::ostream& out, const ZoneDiff& diff);
std::string diff_summary_json(const ZoneDiff& diff);

}  // namespace zonecast::feed
