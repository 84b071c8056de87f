#include "curvcmp/cli/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string_view>
#include <system_error>
#include <vector>

#include "curvcmp/error.hpp"

namespace curvcmp::cli {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, res.ptr};
}

std::string format_csv_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return {buf, res.ptr};
}

void write_csv(std::ostream& out, const SampledFunction& f) {
  std::string text = "t,g\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    text += format_csv_double(f.t(i));
    text += ',';
    text += format_csv_double(f.g(i));
    text += '\n';
  }
  out << text;
}

namespace {

double parse_field(std::string_view field, std::size_t line) {
  // from_chars rejects a leading '+', which some writers emit.
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw Error(ErrorKind::argument,
                "line " + std::to_string(line) + ": bad number '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

SampledFunction read_csv(std::istream& in) {
  std::string line;
  std::size_t number = 0;
  std::vector<double> ts;
  std::vector<double> gs;
  bool header = false;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header) {
      if (line != "t,g") {
        throw Error(ErrorKind::argument, "expected header 't,g', got '" + line + "'");
      }
      header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw Error(ErrorKind::argument, "line " + std::to_string(number) + ": expected two fields");
    }
    const std::string_view view(line);
    ts.push_back(parse_field(view.substr(0, comma), number));
    gs.push_back(parse_field(view.substr(comma + 1), number));
  }
  if (!header) throw Error(ErrorKind::argument, "empty input: missing 't,g' header");
  return {std::move(ts), std::move(gs)};
}

}  // namespace curvcmp::cli
