#include "mqed/csv.hpp"

#include <charconv>

namespace mqed {

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const TimeSeries& ts,
               const std::string& time_label) {
    out << time_label;
    for (const auto& c : ts.columns) {
        out << ',' << c.name;
    }
    for (const auto& l : ts.labels) {
        out << ',' << l.name;
    }
    out << '\n';
    for (std::size_t i = 0; i < ts.times.size(); ++i) {
        out << format_double(ts.times[i]);
        for (const auto& c : ts.columns) {
            out << ',' << format_double(c.values[i]);
        }
        for (const auto& l : ts.labels) {
            out << ',' << l.values[i];
        }
        out << '\n';
    }
}

void write_report(std::ostream& out,
                  const std::vector<std::pair<std::string, double>>& rows) {
    for (const auto& [key, value] : rows) {
        out << key << '=' << format_double(value) << '\n';
    }
}

}  // namespace mqed
