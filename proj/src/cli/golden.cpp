#include "lp/cli/golden.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <stdexcept>

#ifndef LP_DEFAULT_DATA_DIR
#define LP_DEFAULT_DATA_DIR "data"
#endif

namespace lp::cli {

namespace {

std::optional<std::filesystem::path>& override_dir() {
  static std::optional<std::filesystem::path> dir;
  return dir;
}

constexpr int kGoldenVersion = 1;

std::array<int, 5> five(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 5) throw std::runtime_error("expected a list of five integers");
  std::array<int, 5> out{};
  for (std::size_t i = 0; i < 5; ++i) out[i] = j[i].get<int>();
  return out;
}

// Ranks are stored as strings; they outgrow 32 bits.
BigInt big(const nlohmann::json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::int64_t>());
}

CodePair code(const nlohmann::json& j) { return {big(j.at(0)), big(j.at(1))}; }

}  // namespace

void set_data_dir(std::filesystem::path dir) { override_dir() = std::move(dir); }

std::filesystem::path data_dir() {
  if (override_dir()) return *override_dir();
  if (const char* env = std::getenv("LP_DATA_DIR"); env && *env) return env;
  return LP_DEFAULT_DATA_DIR;
}

nlohmann::json load_golden(std::string_view name) {
  const auto path = data_dir() / "golden" / std::string(name);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
  if (j.value("version", 0) != kGoldenVersion) {
    throw std::runtime_error(path.string() + ": unsupported version");
  }
  return j;
}

std::vector<DiophGolden> golden_dioph() {
  const auto j = load_golden("dioph.json");
  std::vector<DiophGolden> out;
  for (const auto& row : j.at("lists")) {
    DiophGolden g;
    g.m = row.at("m").get<int>();
    g.target = row.at("target").get<int>();
    for (const auto& s : row.at("solutions")) g.solutions.push_back(five(s));
    for (const auto& s : row.at("ruled_out")) g.ruled_out.push_back(five(s));
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Table1Row> golden_table1() {
  const auto j = load_golden("table1.json");
  std::vector<Table1Row> out;
  for (const auto& row : j.at("rows")) {
    Table1Row r;
    r.m = row.at("m").get<int>();
    r.ell = row.at("ell").get<int>();
    for (const auto& x : row.at("x")) r.x.insert(x.get<std::int64_t>());
    out.push_back(std::move(r));
  }
  return out;
}

Ell85Golden golden_ell85() {
  const auto j = load_golden("ell85.json");
  Ell85Golden g;
  g.ell = j.at("ell").get<int>();
  g.generators = j.at("generators").get<std::vector<int>>();
  g.ones = j.at("ones").get<int>();
  g.twos = j.at("twos").get<int>();
  g.ones_orbit_count = j.at("ones_orbit_count").get<int>();
  g.twos_orbit_count = j.at("twos_orbit_count").get<int>();
  g.ones_space = big(j.at("ones_space"));
  g.twos_space = big(j.at("twos_space"));
  g.search_space = big(j.at("search_space"));
  for (const auto& p : j.at("code_pairs")) g.code_pairs.emplace_back(code(p.at(0)), code(p.at(1)));
  const auto& f = j.at("first_pair");
  g.a_ones = f.at("a_ones").get<std::vector<int>>();
  g.b_ones = f.at("b_ones").get<std::vector<int>>();
  g.a_twos = f.at("a_twos").get<std::vector<int>>();
  g.b_twos = f.at("b_twos").get<std::vector<int>>();
  g.a_block = f.at("a_block").get<std::vector<int>>();
  g.b_block = f.at("b_block").get<std::vector<int>>();
  g.a_compressed = f.at("a_compressed").get<std::vector<int>>();
  g.b_compressed = f.at("b_compressed").get<std::vector<int>>();
  g.x = f.at("x").get<std::int64_t>();
  g.psd_a = f.at("psd_a").get<double>();
  g.psd_b = f.at("psd_b").get<double>();
  return g;
}

Ell87Golden golden_ell87() {
  const auto j = load_golden("ell87.json");
  Ell87Golden g;
  g.ell = j.at("ell").get<int>();
  g.factor = j.at("factor").get<int>();
  for (const auto& p : j.at("pairs")) {
    g.pairs.emplace_back(p.at("a").get<std::vector<int>>(), p.at("b").get<std::vector<int>>());
  }
  g.a_compressed = j.at("a_compressed").get<std::vector<int>>();
  g.b_compressed = j.at("b_compressed").get<std::vector<int>>();
  for (const auto& [mag, count] : j.at("abs_value_counts").items()) {
    g.abs_value_counts[std::stoi(mag)] = count.get<int>();
  }
  return g;
}

}  // namespace lp::cli
