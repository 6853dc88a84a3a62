// Versioned reference data under <data>/golden/*.json.
//
// The data directory is, in order of precedence: set_data_dir(), the
// LP_DATA_DIR environment variable, the directory configured at build time.

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lp/diophantine.hpp"
#include "lp/seqcore.hpp"

namespace lp::cli {

void set_data_dir(std::filesystem::path dir);
std::filesystem::path data_dir();

/// Parsed file; throws std::runtime_error when missing, malformed, or of an
/// unknown version.
nlohmann::json load_golden(std::string_view name);

struct DiophGolden {
  int m = 0;
  int target = 0;
  std::vector<std::array<int, 5>> solutions;
  std::vector<std::array<int, 5>> ruled_out;
};
std::vector<DiophGolden> golden_dioph();

struct Table1Row {
  int m = 0;
  int ell = 0;
  std::set<std::int64_t> x;
};
std::vector<Table1Row> golden_table1();

/// A selection code for one side: (ones rank, twos rank).
using CodePair = std::pair<BigInt, BigInt>;

struct Ell85Golden {
  int ell = 0;
  std::vector<int> generators;
  int ones = 0;
  int twos = 0;
  int ones_orbit_count = 0;
  int twos_orbit_count = 0;
  BigInt ones_space;
  BigInt twos_space;
  BigInt search_space;
  std::vector<std::pair<CodePair, CodePair>> code_pairs;
  std::vector<int> a_ones, b_ones, a_twos, b_twos;
  std::vector<int> a_block, b_block;
  std::vector<int> a_compressed, b_compressed;
  std::int64_t x = 0;
  double psd_a = 0;
  double psd_b = 0;
};
Ell85Golden golden_ell85();

struct Ell87Golden {
  int ell = 0;
  int factor = 0;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
  std::vector<int> a_compressed, b_compressed;
  std::map<int, int> abs_value_counts;
};
Ell87Golden golden_ell87();

}  // namespace lp::cli
