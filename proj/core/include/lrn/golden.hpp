#pragma once

// The published solution table as a CSV asset (header C1,C2,x,y,n, LF line
// endings). A copy is compiled into the library; a file on disk can replace
// it. Every row is re-verified against the equation when loaded.

#include "lrn/oracle.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lrn {

/// Number of rows in the embedded table.
inline constexpr std::size_t kGoldenRowCount = 72;

std::uint32_t crc32_of(std::string_view bytes);

/// Parses and verifies CSV text. Throws std::runtime_error naming the line
/// on a bad header, a malformed field, or a row that fails the equation or
/// the gcd condition.
std::vector<GoldenRow> parse_golden_csv(std::string_view text);

/// The embedded table, checked against its pinned CRC-32 and row count.
const std::vector<GoldenRow>& embedded_golden();

/// Loads a table from disk. When `<path>.crc32` exists its hex value must
/// match the file's CRC-32.
std::vector<GoldenRow> load_golden(const std::string& path);

/// CSV text in the table's own format.
std::string to_golden_csv(const std::vector<GoldenRow>& rows);

}  // namespace lrn
