// Comparisons of computed values against the golden files.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace lp::cli {

struct Check {
  std::string name;
  bool ok = false;
  std::string expected;
  std::string actual;
};

struct ReproduceReport {
  std::string section;
  std::vector<Check> checks;
  /// Context that is not compared (e.g. oracle results).
  std::vector<std::string> notes;

  bool identical() const;
  void print(std::ostream& out) const;
  nlohmann::json to_json() const;
};

const std::vector<std::string>& reproduce_sections();

/// Throws std::invalid_argument for an unknown section.
ReproduceReport reproduce(std::string_view section);

ReproduceReport reproduce_dioph_all();
ReproduceReport reproduce_ell85_decode();
ReproduceReport reproduce_ell87_verify();
ReproduceReport reproduce_table1_small();

}  // namespace lp::cli
