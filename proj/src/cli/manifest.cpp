#include "lp/cli/manifest.hpp"

#include <openssl/evp.h>

#include <boost/version.hpp>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace lp::cli {

namespace {

std::vector<std::string>& stored_command_line() {
  static std::vector<std::string> args;
  return args;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::ostringstream hex;
  hex << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) hex << std::setw(2) << static_cast<int>(md[i]);
  return hex.str();
}

std::string file_sha256(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return sha256_hex(buf.str());
}

nlohmann::json RunManifest::to_json() const {
  return {{"command_line", command_line},     {"seed", seed},
          {"versions", versions},             {"input_digests", input_digests},
          {"wall_seconds", wall_seconds},     {"result_digests", result_digests}};
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
  RunManifest m;
  m.command_line = j.at("command_line").get<std::vector<std::string>>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.versions = j.at("versions").get<std::map<std::string, std::string>>();
  m.input_digests = j.at("input_digests").get<std::map<std::string, std::string>>();
  m.wall_seconds = j.at("wall_seconds").get<double>();
  m.result_digests = j.at("result_digests").get<std::map<std::string, std::string>>();
  return m;
}

ManifestRecorder::ManifestRecorder(std::vector<std::string> command_line, std::uint64_t seed)
    : start_(std::chrono::steady_clock::now()) {
  manifest_.command_line = std::move(command_line);
  manifest_.seed = seed;
  manifest_.versions = {
      {"lp", "1.0.0"},
      {"boost", BOOST_LIB_VERSION},
      {"compiler", __VERSION__},
      {"json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." + std::to_string(NLOHMANN_JSON_VERSION_MINOR) +
                   "." + std::to_string(NLOHMANN_JSON_VERSION_PATCH)},
  };
}

void ManifestRecorder::add_input(const std::string& label, const std::filesystem::path& path) {
  manifest_.input_digests[label] = file_sha256(path);
}

void ManifestRecorder::add_input_text(const std::string& label, std::string_view text) {
  manifest_.input_digests[label] = sha256_hex(text);
}

void ManifestRecorder::add_result(const std::string& label, std::string_view text) {
  manifest_.result_digests[label] = sha256_hex(text);
}

RunManifest ManifestRecorder::finish() {
  manifest_.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  return manifest_;
}

void set_command_line(std::vector<std::string> args) { stored_command_line() = std::move(args); }

const std::vector<std::string>& command_line() { return stored_command_line(); }

}  // namespace lp::cli
