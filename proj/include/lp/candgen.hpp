// Candidate compressed pairs (A, B).
//
// Two generators:
//   * candidates_d5 — l = 5m, both sides drawn from signed orderings of the
//     all-odd five-square representations of 4m+1 (balanced PSD-at-m split).
//   * CandidateStream — general length d = l/m under a magnitude-count
//     profile, by seeded depth-first search over interleaved positions.
//
// Candidates are reported in canonical form: the lexicographically least
// member of the orbit generated by independent cyclic shifts and reversals
// of each side, and by swapping the sides (which negates x).

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lp/seqcore.hpp"

namespace lp {

struct CandidatePair {
  CompressedSequence a;
  CompressedSequence b;
  int ell = 0;
  int factor = 1;
  /// PAF_a(1) - PAF_a(2); recorded for d = 5 only.
  std::optional<std::int64_t> x;

  std::size_t length() const { return a.size(); }
  bool operator==(const CandidatePair&) const = default;
};

struct GenerationProfile {
  int ell = 0;
  int factor = 1;
  int length = 0;
  /// magnitude -> number of entries of that magnitude across both sides.
  std::map<int, int> abs_value_counts;
  /// Require each side to carry exactly half of every magnitude count.
  bool balanced = false;
  /// Compared against |x| (d = 5 only).
  std::optional<std::set<std::int64_t>> x_filter;
  /// DFS node limit; unset means run to exhaustion.
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 0;

  /// Throws ValidationError naming every violated identity.
  void validate() const;
  /// Human-readable list of violated identities (empty when consistent).
  std::vector<std::string> violations() const;
};

/// Builds the profile implied by l, m and the count of each magnitude.
GenerationProfile make_profile(int ell, int factor, std::map<int, int> abs_value_counts, bool balanced);

/// Violations of the pair invariants (sums, PAF sums, d=5 extras). Empty when valid.
std::vector<std::string> candidate_violations(const CandidatePair& pair);

/// True when pair satisfies every constraint expressed by profile.
bool satisfies_profile(const CandidatePair& pair, const GenerationProfile& profile);

CandidatePair canonicalize(const CandidatePair& pair);

std::vector<CandidatePair> candidates_d5(int m, const std::optional<std::set<std::int64_t>>& x_filter = std::nullopt);

/// Deterministic stream of canonical candidates for a general profile. Each
/// call to next() resumes the search; nullopt means the budget ran out or the
/// tree was exhausted.
class CandidateStream {
 public:
  explicit CandidateStream(GenerationProfile profile);
  ~CandidateStream();
  CandidateStream(CandidateStream&&) noexcept;
  CandidateStream& operator=(CandidateStream&&) noexcept;

  std::optional<CandidatePair> next();

  std::uint64_t nodes_visited() const;
  bool exhausted() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Convenience: drains a stream into a vector.
std::vector<CandidatePair> candidates_general(const GenerationProfile& profile);

}  // namespace lp
