#include "zonecast/domain.hpp"

#include <algorithm>
#include <cctype>

namespace zonecast::feed {

namespace {

bool valid_label(const std::string& label) {
    if (label.empty()) return false;
    if (label.front() == '-' || label.back() == '-') return false;
    return std::all_of(label.begin(), label.end(), [](unsigned char c) {
        return std::islower(c) || std::isdigit(c) || c == '-';
    });
}

}  // namespace

std::optional<DomainName> DomainName::parse(std::string_view name) {
    std::string normalized;
    normalized.reserve(name.size());
    for (char c : name) normalized += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (!normalized.empty() && normalized.back() == '.') normalized.pop_back();
    if (normalized.empty()) return std::nullopt;

    std::vector<std::string> labels;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= normalized.size(); ++i) {
        if (i == normalized.size() || normalized[i] == '.') {
            labels.push_back(normalized.substr(start, i - start));
            start = i + 1;
        }
    }
    if (labels.size() < 2) return std::nullopt;
    for (const auto& label : labels)
        if (!valid_label(label)) return std::nullopt;

    DomainName d;
    d.raw = normalized;
    d.top_level = labels.back();
    d.second_level = labels[labels.size() - 2];
    if (labels.size() >= 3) d.third_level = labels[labels.size() - 3];
    d.labels = std::move(labels);
    return d;
}

}  // namespace zonecast::feed
