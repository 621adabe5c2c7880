#include "lrn/golden.hpp"

#include <zlib.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <cctype>
#include <stdexcept>

namespace lrn {
namespace detail {
extern const std::string_view kEmbeddedGoldenCsv;
extern const std::uint32_t kEmbeddedGoldenCrc32;
}  // namespace detail

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open golden table: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    parts.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::uint32_t crc32_of(std::string_view bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size()));
  return static_cast<std::uint32_t>(crc);
}

std::vector<GoldenRow> parse_golden_csv(std::string_view text) {
  std::vector<GoldenRow> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool header_seen = false;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    const std::string where = "golden table line " + std::to_string(line_no);
    if (!line.empty() && line.back() == '\r') throw std::runtime_error(where + ": CRLF line ending");
    if (!header_seen) {
      if (line != "C1,C2,x,y,n") throw std::runtime_error(where + ": expected header C1,C2,x,y,n");
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 5) throw std::runtime_error(where + ": expected 5 fields");
    GoldenRow row;
    try {
      row.c1 = parse_int(std::string(fields[0]));
      row.c2 = parse_int(std::string(fields[1]));
      row.x = parse_int(std::string(fields[2]));
      row.y = parse_int(std::string(fields[3]));
      const Int n = parse_int(std::string(fields[4]));
      if (n < 3 || n > 1000) throw std::invalid_argument("exponent out of range");
      row.n = static_cast<unsigned>(n.get_ui());
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(where + ": " + e.what());
    }
    if (!satisfies_equation(row.c1, row.c2, row.x, row.y, row.n)) {
      throw std::runtime_error(where + ": row does not satisfy C1 x^2 + C2 = y^n with the gcd condition");
    }
    rows.push_back(std::move(row));
  }
  if (!header_seen) throw std::runtime_error("golden table is empty");
  return rows;
}

const std::vector<GoldenRow>& embedded_golden() {
  static const std::vector<GoldenRow> rows = [] {
    if (crc32_of(detail::kEmbeddedGoldenCsv) != detail::kEmbeddedGoldenCrc32) {
      throw std::runtime_error("embedded golden table fails its checksum");
    }
    auto parsed = parse_golden_csv(detail::kEmbeddedGoldenCsv);
    if (parsed.size() != kGoldenRowCount) {
      throw std::runtime_error("embedded golden table has " + std::to_string(parsed.size()) + " rows, expected " +
                               std::to_string(kGoldenRowCount));
    }
    return parsed;
  }();
  return rows;
}

std::vector<GoldenRow> load_golden(const std::string& path) {
  const std::string text = read_file(path);
  const std::string sidecar = path + ".crc32";
  if (std::filesystem::exists(sidecar)) {
    std::string hex = read_file(sidecar);
    while (!hex.empty() && std::isspace(static_cast<unsigned char>(hex.back()))) hex.pop_back();
    std::uint32_t expected = 0;
    try {
      expected = static_cast<std::uint32_t>(std::stoul(hex, nullptr, 16));
    } catch (const std::exception&) {
      throw std::runtime_error("unreadable checksum file: " + sidecar);
    }
    if (crc32_of(text) != expected) throw std::runtime_error("golden table fails its checksum: " + path);
  }
  return parse_golden_csv(text);
}

std::string to_golden_csv(const std::vector<GoldenRow>& rows) {
  std::string out = "C1,C2,x,y,n\n";
  for (const GoldenRow& r : rows) {
    out += r.c1.get_str() + "," + r.c2.get_str() + "," + r.x.get_str() + "," + r.y.get_str() + "," +
           std::to_string(r.n) + "\n";
  }
  return out;
}

}  // namespace lrn
