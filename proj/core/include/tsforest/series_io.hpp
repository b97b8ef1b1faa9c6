#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "tsforest/series.hpp"

namespace tsforest {

// Text format: one observation per line, plain decimal. read_series also
// accepts comma-separated files with a header row, taking the named column
// (or the only column when the name is empty).

TimeSeries read_series(std::istream& in, const std::string& column = "");
TimeSeries read_series_file(const std::filesystem::path& path,
                            const std::string& column = "");

void write_series(std::ostream& out, const TimeSeries& s);
void write_series_file(const std::filesystem::path& path, const TimeSeries& s);

/// Shortest decimal string that round-trips the exact double value.
std::string format_double(double v);

}  // namespace tsforest
