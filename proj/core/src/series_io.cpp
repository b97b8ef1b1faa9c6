#include "tsforest/series_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tsforest {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == ',') {
    fields.emplace_back();
  }
  return fields;
}

std::string strip(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

bool parse_double(const std::string& text, double& out) {
  const std::string t = strip(text);
  if (t.empty()) {
    return false;
  }
  const char* first = t.data();
  const char* last = t.data() + t.size();
  const auto res = std::from_chars(first, last, out);
  return res.ec == std::errc{} && res.ptr == last;
}

}  // namespace

TimeSeries read_series(std::istream& in, const std::string& column) {
  std::vector<double> values;
  std::string line;
  bool first_line = true;
  std::size_t column_index = 0;
  bool csv_mode = false;

  while (std::getline(in, line)) {
    const std::string trimmed = strip(line);
    if (trimmed.empty()) {
      continue;
    }
    if (first_line) {
      first_line = false;
      double v = 0.0;
      if (parse_double(trimmed, v)) {
        values.push_back(v);
        continue;
      }
      // Non-numeric first line: treat as a CSV header and locate the column.
      csv_mode = true;
      const auto header = split_csv(trimmed);
      if (column.empty()) {
        if (header.size() != 1) {
          throw std::invalid_argument(
              "read_series: multi-column input needs an explicit column name");
        }
        column_index = 0;
      } else {
        bool found = false;
        for (std::size_t i = 0; i < header.size(); ++i) {
          if (strip(header[i]) == column) {
            column_index = i;
            found = true;
            break;
          }
        }
        if (!found) {
          throw std::invalid_argument("read_series: column '" + column +
                                      "' not found in header");
        }
      }
      continue;
    }
    double v = 0.0;
    if (csv_mode) {
      const auto fields = split_csv(trimmed);
      if (column_index >= fields.size() ||
          !parse_double(fields[column_index], v)) {
        throw std::invalid_argument("read_series: bad CSV row: " + trimmed);
      }
    } else if (!parse_double(trimmed, v)) {
      throw std::invalid_argument("read_series: bad value: " + trimmed);
    }
    values.push_back(v);
  }
  return TimeSeries(std::move(values));
}

TimeSeries read_series_file(const std::filesystem::path& path,
                            const std::string& column) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("read_series_file: cannot open " + path.string());
  }
  return read_series(in, column);
}

void write_series(std::ostream& out, const TimeSeries& s) {
  for (const double v : s.values()) {
    out << format_double(v) << '\n';
  }
}

void write_series_file(const std::filesystem::path& path, const TimeSeries& s) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("write_series_file: cannot open " + path.string());
  }
  write_series(out, s);
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace tsforest
