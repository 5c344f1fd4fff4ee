#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zonecast/date.hpp"

namespace zonecast {

/// Evenly spaced daily counts. values[i] belongs to start_date + i days.
struct TimeSeries {
    Date start_date;
    std::vector<double> values;
    std::string name;

    std::size_t size() const { return values.size(); }
    Date date_at(std::size_t i) const { return start_date + static_cast<int>(i); }
    Date end_date() const {
        return start_date + static_cast<int>(values.empty() ? 0 : values.size() - 1);
    }
};

/// CSV with header "date,value", one row per consecutive day. Raises
/// InvalidDate on malformed dates and SeriesTooShort on an empty file;
/// non-consecutive dates raise InvalidArgument.
TimeSeries read_timeseries_csv(std::istream& in, const std::string& name);
void write_timeseries_csv(std::ostream& out, const TimeSeries& series);

}  // namespace zonecast
