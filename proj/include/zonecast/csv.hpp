#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace zonecast {

/// Splits one CSV line into fields. Handles quoted fields with embedded
/// commas and doubled quotes; no multi-line fields.
std::vector<std::string> split_csv_line(const std::string& line);

/// Minimal CSV reader: header row plus data rows, '#'-prefixed comment lines
/// and blank lines skipped.
class CsvReader {
public:
    explicit CsvReader(std::istream& in);

    const std::vector<std::string>& header() const { return header_; }

    /// Case-insensitive header lookup; nullopt when the column is absent.
    std::optional<std::size_t> column(const std::string& name) const;

    /// Reads the next data row; false at end of stream.
    bool next(std::vector<std::string>& row);

private:
    std::istream& in_;
    std::vector<std::string> header_;
};

std::string trim(const std::string& s);
std::string to_lower(const std::string& s);

}  // namespace zonecast
