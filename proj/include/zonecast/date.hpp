#pragma once

#include <chrono>
#include <compare>
#include <optional>
#include <string>

namespace zonecast {

/// Calendar date with day resolution. Thin wrapper over a days-since-epoch
/// count so that arithmetic and ordering stay trivial.
class Date {
public:
    Date() = default;
    explicit Date(std::chrono::sys_days d) : days_(d) {}
    Date(int year, unsigned month, unsigned day);

    /// Parses "YYYY-MM-DD" or "YYYY-MM-DDThh:mm:ssZ" (time-of-day discarded).
    /// Returns nullopt on malformed input or out-of-range calendar values.
    static std::optional<Date> parse(std::string_view text);

    std::string to_string() const;  // ISO "YYYY-MM-DD"

    /// Monday=0 .. Sunday=6.
    int weekday() const;

    std::chrono::sys_days sys() const { return days_; }

    Date operator+(int days) const { return Date(days_ + std::chrono::days(days)); }
    Date operator-(int days) const { return Date(days_ - std::chrono::days(days)); }
    /// Whole-day difference, positive when *this is later.
    long operator-(const Date& other) const {
        return (days_ - other.days_).count();
    }

    auto operator<=>(const Date&) const = default;

private:
    std::chrono::sys_days days_{};
};

/// Inclusive calendar interval.
struct DateRange {
    Date from;
    Date to;

    bool empty() const { return from > to; }
    long length() const { return empty() ? 0 : (to - from) + 1; }
};

}  // namespace zonecast
