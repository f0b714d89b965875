#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "sgb/fixture_suite.hpp"

using namespace sgb;

TEST_CASE("checksums") {
  const auto path = std::filesystem::temp_directory_path() / "sgb_checksum_probe.txt";
  {
    std::ofstream out(path, std::ios::binary);
    out << "a";
  }
  CHECK(file_checksum(path.string()) == 0xaf63dc4c8601ec8cULL);
  {
    std::ofstream out(path, std::ios::binary);
  }
  CHECK(file_checksum(path.string()) == 0xcbf29ce484222325ULL);
  std::filesystem::remove(path);
  CHECK_THROWS_AS((void)file_checksum("/nonexistent/file"), Error);
}

TEST_CASE("random test codes") {
  const auto codes = random_test_codes(123, 10);
  REQUIRE(codes.size() == 10);
  for (const auto& c : codes) {
    CHECK(c.length() <= 10);
    CHECK(c.dimension() >= 3);
    CHECK(c.dimension() <= 5);
    CHECK(min_distance_bruteforce(c) >= 3);
    std::set<std::vector<std::uint32_t>> cols;
    for (std::size_t j = 0; j < c.length(); ++j) cols.insert(c.generator().column(j));
    CHECK(cols.size() == c.length());
  }
  const auto again = random_test_codes(123, 10);
  for (std::size_t i = 0; i < codes.size(); ++i) CHECK(codes[i].generator() == again[i].generator());
}

TEST_CASE("suite groups and filtering") {
  CHECK(suite_groups().front() == "fixtures");
  SuiteOptions options;
  options.fixture_dir = SGB_FIXTURE_DIR;
  options.only = "decode";
  const auto report = run_fixture_suite(options);
  CHECK(report.checks.size() == 4);
  for (const auto& c : report.checks) CHECK(c.group == "decode");
  CHECK(report.all_passed());

  options.only = "nonsense";
  CHECK_THROWS_AS((void)run_fixture_suite(options), Error);

  options.only.reset();
  options.fixture_dir = "/nonexistent";
  try {
    (void)run_fixture_suite(options);
    FAIL("expected missing fixtures");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::missing_file);
  }
}

TEST_CASE("manifest detects a changed fixture") {
  const auto dir = std::filesystem::temp_directory_path() / "sgb_manifest_probe";
  std::filesystem::remove_all(dir);
  std::filesystem::copy(SGB_FIXTURE_DIR, dir);
  {
    std::ofstream out(dir / "decode_1_4.txt", std::ios::app);
    out << "\n";
  }
  SuiteOptions options;
  options.fixture_dir = dir.string();
  options.only = "fixtures";
  const auto report = run_fixture_suite(options);
  REQUIRE(report.checks.size() == 1);
  CHECK_FALSE(report.checks[0].passed);
  CHECK(report.checks[0].detail.find("decode_1_4.txt") != std::string::npos);
  std::filesystem::remove_all(dir);
}
