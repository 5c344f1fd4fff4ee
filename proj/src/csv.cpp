#include "zonecast/csv.hpp"

#include <algorithm>
#include <cctype>

namespace zonecast {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c == '\r') {
            // tolerate CRLF
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

CsvReader::CsvReader(std::istream& in) : in_(in) {
    std::string line;
    while (std::getline(in_, line)) {
        if (line.empty() || line[0] == '#') continue;
        header_ = split_csv_line(line);
        for (auto& h : header_) h = trim(h);
        break;
    }
}

std::optional<std::size_t> CsvReader::column(const std::string& name) const {
    std::string want = to_lower(trim(name));
    for (std::size_t i = 0; i < header_.size(); ++i)
        if (to_lower(header_[i]) == want) return i;
    return std::nullopt;
}

bool CsvReader::next(std::vector<std::string>& row) {
    std::string line;
    while (std::getline(in_, line)) {
        if (line.empty() || line[0] == '#') continue;
        row = split_csv_line(line);
        return true;
    }
    return false;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string to_lower(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace zonecast
