#include "zonecast/timeseries.hpp"

#include <charconv>
#include <istream>
#include <ostream>

#include "zonecast/csv.hpp"
#include "zonecast/error.hpp"

namespace zonecast {

TimeSeries read_timeseries_csv(std::istream& in, const std::string& name) {
    CsvReader reader(in);
    auto date_col = reader.column("date");
    auto value_col = reader.column("value");
    if (!date_col || !value_col)
        raise(Errc::missing_columns, "time-series CSV needs 'date' and 'value' columns");

    TimeSeries series;
    series.name = name;
    std::vector<std::string> row;
    bool first = true;
    Date expected;
    while (reader.next(row)) {
        if (row.size() <= std::max(*date_col, *value_col)) continue;
        auto d = Date::parse(trim(row[*date_col]));
        if (!d) raise(Errc::invalid_date, "bad date '" + row[*date_col] + "'");
        std::string vs = trim(row[*value_col]);
        double v = 0.0;
        auto [p, ec] = std::from_chars(vs.data(), vs.data() + vs.size(), v);
        if (ec != std::errc() || p != vs.data() + vs.size())
            raise(Errc::invalid_argument, "bad value '" + vs + "'");
        if (first) {
            series.start_date = *d;
            expected = *d;
            first = false;
        } else if (*d != expected) {
            raise(Errc::invalid_argument,
                  "dates must be consecutive days; expected " + expected.to_string() + " got " +
                      d->to_string());
        }
        series.values.push_back(v);
        expected = expected + 1;
    }
    if (series.values.empty()) raise(Errc::series_too_short, "empty time-series file");
    return series;
}

void write_timeseries_csv(std::ostream& out, const TimeSeries& series) {
    out << "date,value\n";
    for (std::size_t i = 0; i < series.values.size(); ++i) {
        double v = series.values[i];
        out << series.date_at(i).to_string() << ',';
        if (v == static_cast<long long>(v))
            out << static_cast<long long>(v);
        else
            out << v;
        out << '\n';
    }
}

}  // namespace zonecast
