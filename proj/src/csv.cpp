#include <charconv>
#include <fstream>

#include "fme/bench.hpp"
#include "fme/errors.hpp"

namespace fme {

namespace {

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

template <class T>
T parse_number(std::string_view field, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError("csv line " + std::to_string(line) + ": bad field '" + std::string(field) +
                     "'");
  }
  return value;
}

}  // namespace

std::string format_csv(const std::vector<BenchPoint>& points) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& pt : points) {
    out += to_decimal(pt.p);
    out += ',' + std::to_string(pt.e);
    out += ',' + std::to_string(pt.t);
    out += ',' + format_double(pt.log10_m);
    out += ',' + std::to_string(pt.steps_fast);
    out += ',' + std::to_string(pt.steps_baseline);
    out += ',' + std::to_string(pt.time_fast_ns);
    out += ',' + std::to_string(pt.time_baseline_ns);
    out += ',' + format_double(pt.ratio);
    out += '\n';
  }
  return out;
}

std::vector<BenchPoint> parse_csv(std::string_view text) {
  std::vector<BenchPoint> points;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == text.npos ? text.npos : eol - pos);
    pos = eol == text.npos ? text.size() : eol + 1;
    ++line_no;
    if (line_no == 1) {
      if (line != kCsvHeader) throw ParseError("unexpected csv header '" + std::string(line) + "'");
      continue;
    }
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    std::size_t fpos = 0;
    while (true) {
      std::size_t comma = line.find(',', fpos);
      fields.push_back(line.substr(fpos, comma == line.npos ? line.npos : comma - fpos));
      if (comma == line.npos) break;
      fpos = comma + 1;
    }
    if (fields.size() != 9) {
      throw ParseError("csv line " + std::to_string(line_no) + ": expected 9 fields");
    }
    BenchPoint pt;
    pt.p = parse_natural(fields[0]);
    pt.e = parse_number<std::uint32_t>(fields[1], line_no);
    pt.t = parse_number<std::uint32_t>(fields[2], line_no);
    pt.log10_m = parse_number<double>(fields[3], line_no);
    pt.steps_fast = parse_number<std::uint64_t>(fields[4], line_no);
    pt.steps_baseline = parse_number<std::uint64_t>(fields[5], line_no);
    pt.time_fast_ns = parse_number<std::uint64_t>(fields[6], line_no);
    pt.time_baseline_ns = parse_number<std::uint64_t>(fields[7], line_no);
    pt.ratio = parse_number<double>(fields[8], line_no);
    points.push_back(std::move(pt));
  }
  if (line_no == 0) throw ParseError("empty csv");
  return points;
}

void write_csv(const std::vector<BenchPoint>& points, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  const std::string text = format_csv(points);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace fme
