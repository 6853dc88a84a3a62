// Subcommand bodies. Each writes to `out`, returns an exit code, and throws
// UsageError (or ParseError / ValidationError) for bad input; the dispatcher
// maps those to exit 2.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lp::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VerifyOptions {
  std::string file_a;
  std::string file_b;  // empty: file_a holds both sequences
  bool json = false;
};
int cmd_verify(const VerifyOptions& opts, std::ostream& out);

int cmd_compress(const std::string& file, int factor, bool json, std::ostream& out);
int cmd_psd(const std::string& file, std::optional<int> k, bool json, std::ostream& out);
int cmd_dioph(int m, bool json, std::ostream& out);

struct CandidatesOptions {
  int ell = 0;
  int factor = 0;
  bool balanced = false;
  std::map<int, int> counts;  // empty: derived when unique
  std::optional<std::set<std::int64_t>> x;
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 0;
  std::string out;  // empty: stdout
};
int cmd_candidates(const CandidatesOptions& opts, std::ostream& out);

struct DecompressOptions {
  int ell = 0;
  std::string candidates;
  std::uint64_t budget = 1'000'000;  // per candidate
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::uint64_t max_solutions = 0;
  std::string out;
};
int cmd_decompress(const DecompressOptions& opts, std::ostream& out);

struct SearchOrbitOptions {
  int ell = 0;
  std::vector<int> generators;
  int ones = 0;
  int twos = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 100'000;
  unsigned jobs = 1;
  bool include_golden = false;
  bool balanced_prefilter = true;
  std::string out;
};
int cmd_search_orbit(const SearchOrbitOptions& opts, std::ostream& out);

int cmd_orbits(int ell, const std::vector<int>& generators, bool json, std::ostream& out);
int cmd_rank(int universe, const std::vector<int>& subset, std::ostream& out);
int cmd_unrank(int universe, int subset_size, const std::string& rank, std::ostream& out);
int cmd_decode_pair(int ell, const std::vector<int>& generators, const std::string& codes_json, std::ostream& out);
int cmd_reproduce(const std::string& section, bool json, std::ostream& out);

struct PipelineCliOptions {
  int ell = 0;
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::uint64_t max_pairs = 0;
  std::optional<std::set<std::int64_t>> x;
  std::string profile;  // JSON file
  std::optional<double> time_limit;
  std::string out;
};
int cmd_pipeline(const PipelineCliOptions& opts, std::ostream& out, std::ostream& err);

/// Parses "1,2,3" (whitespace tolerated). Throws UsageError.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace lp::cli
