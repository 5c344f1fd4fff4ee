#include "zonecast/date.hpp"

#include <cctype>
#include <charconv>

namespace zonecast {

namespace {

bool parse_int(std::string_view s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Date::Date(int year, unsigned month, unsigned day) {
    using namespace std::chrono;
    days_ = sys_days(year_month_day(std::chrono::year(year), std::chrono::month(month),
                                    std::chrono::day(day)));
}

std::optional<Date> Date::parse(std::string_view text) {
    // Accept a trailing time-of-day part introduced by 'T'.
    if (auto t = text.find('T'); t != std::string_view::npos) {
        std::string_view rest = text.substr(t + 1);
        // require hh:mm:ss with optional trailing 'Z'
        if (!rest.empty() && rest.back() == 'Z') rest.remove_suffix(1);
        if (rest.size() != 8 || rest[2] != ':' || rest[5] != ':') return std::nullopt;
        for (size_t i : {0u, 1u, 3u, 4u, 6u, 7u})
            if (!std::isdigit(static_cast<unsigned char>(rest[i]))) return std::nullopt;
        text = text.substr(0, t);
    }
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    int y = 0, m = 0, d = 0;
    if (!parse_int(text.substr(0, 4), y) || !parse_int(text.substr(5, 2), m) ||
        !parse_int(text.substr(8, 2), d))
        return std::nullopt;
    using namespace std::chrono;
    year_month_day ymd{std::chrono::year(y), std::chrono::month(static_cast<unsigned>(m)),
                       std::chrono::day(static_cast<unsigned>(d))};
    if (!ymd.ok()) return std::nullopt;
    return Date(sys_days(ymd));
}

std::string Date::to_string() const {
    using namespace std::chrono;
    year_month_day ymd{days_};
    char buf[11];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

int Date::weekday() const {
    std::chrono::weekday wd{days_};
    return static_cast<int>(wd.iso_encoding()) - 1;
}

}  // namespace zonecast
