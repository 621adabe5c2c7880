#include "lrn/golden.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace lrn;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("lrn_test_" + name)).string();
}

void write(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("embedded table") {
  const auto& rows = embedded_golden();
  CHECK(rows.size() == 72);
  for (const auto& r : rows) {
    CHECK(r.c1 * r.x * r.x + r.c2 == ipow(r.y, r.n));
    CHECK(r.c1 >= 2);
    CHECK(r.c1 <= 10);
    CHECK(r.c2 >= 1);
    CHECK(r.c2 <= 80);
  }
  const GoldenRow big{2, 19, 1429, 21, 5};
  CHECK(std::find(rows.begin(), rows.end(), big) != rows.end());
  CHECK(2 * Int(1429) * 1429 + 19 == ipow(21, 5));
  // Text round trip reproduces the asset byte for byte, so its CRC is stable.
  CHECK(parse_golden_csv(to_golden_csv(rows)) == rows);
}

TEST_CASE("parser rejects bad input") {
  CHECK_THROWS_AS(parse_golden_csv(""), std::runtime_error);
  CHECK_THROWS_AS(parse_golden_csv("C1,C2,x,y\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_golden_csv("C1,C2,x,y,n\n2,1,11,3\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_golden_csv("C1,C2,x,y,n\n2,1,11,3,4\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_golden_csv("C1,C2,x,y,n\r\n2,1,11,3,5\r\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_golden_csv("C1,C2,x,y,n\n2,1,eleven,3,5\n"), std::runtime_error);
  // Satisfies the equation but not the gcd condition.
  CHECK_THROWS_AS(parse_golden_csv("C1,C2,x,y,n\n3,54,3,3,4\n"), std::runtime_error);
  CHECK(parse_golden_csv("C1,C2,x,y,n\n2,1,11,3,5\n").size() == 1);
}

TEST_CASE("loading from disk with and without a checksum") {
  const std::string path = temp_path("golden.csv");
  const std::string text = "C1,C2,x,y,n\n2,1,11,3,5\n5,1,4,3,4\n";
  write(path, text);
  std::filesystem::remove(path + ".crc32");
  CHECK(load_golden(path).size() == 2);

  char hex[16];
  std::snprintf(hex, sizeof hex, "%08x\n", crc32_of(text));
  write(path + ".crc32", hex);
  CHECK(load_golden(path).size() == 2);

  write(path + ".crc32", "deadbeef\n");
  CHECK_THROWS_AS(load_golden(path), std::runtime_error);

  std::filesystem::remove(path);
  std::filesystem::remove(path + ".crc32");
  CHECK_THROWS_AS(load_golden(path), std::runtime_error);
}

TEST_CASE("crc32") {
  CHECK(crc32_of("") == 0u);
  CHECK(crc32_of("123456789") == 0xCBF43926u);
}
