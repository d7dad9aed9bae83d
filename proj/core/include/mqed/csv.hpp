#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mqed/timeseries.hpp"

namespace mqed {

// 17 significant digits, '.' decimal point, locale-independent; identical
// input bits always produce identical text.
std::string format_double(double v);

// Header line `<time_label>,<columns...>[,<labels...>]` then one row per
// sample, LF line endings.
void write_csv(std::ostream& out, const TimeSeries& ts,
               const std::string& time_label);

// `key=value` report lines, values via format_double.
void write_report(std::ostream& out,
                  const std::vector<std::pair<std::string, double>>& rows);

}  // namespace mqed
