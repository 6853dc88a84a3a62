// Run manifests: enough to re-run a command and compare output digests.

#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace lp::cli {

std::string sha256_hex(std::string_view data);
/// Throws std::runtime_error when the file cannot be read.
std::string file_sha256(const std::filesystem::path& path);

struct RunManifest {
  std::vector<std::string> command_line;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> versions;
  std::map<std::string, std::string> input_digests;
  double wall_seconds = 0;
  std::map<std::string, std::string> result_digests;

  nlohmann::json to_json() const;
  static RunManifest from_json(const nlohmann::json& j);
};

/// Starts the wall clock and fills in versions.
class ManifestRecorder {
 public:
  ManifestRecorder(std::vector<std::string> command_line, std::uint64_t seed);

  void add_input(const std::string& label, const std::filesystem::path& path);
  void add_input_text(const std::string& label, std::string_view text);
  void add_result(const std::string& label, std::string_view text);
  RunManifest finish();

 private:
  RunManifest manifest_;
  std::chrono::steady_clock::time_point start_;
};

/// Command line set by main(), recorded in manifests.
void set_command_line(std::vector<std::string> args);
const std::vector<std::string>& command_line();

}  // namespace lp::cli
