// dioph -> candidates -> decompress, end to end.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "lp/candgen.hpp"
#include "lp/decompress.hpp"

namespace lp::cli {

struct PipelineOptions {
  int ell = 0;
  /// Node budget per candidate; SearchConfig::unlimited runs every candidate to exhaustion.
  std::uint64_t budget_per_candidate = SearchConfig::unlimited;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  /// Stop after this many pairs; 0 means no limit.
  std::uint64_t max_pairs = 0;
  /// Restrict d = 5 candidates to these |x| values.
  std::optional<std::set<std::int64_t>> x_filter;
  /// General profile instead of the d = 5 conjecture pipeline.
  std::optional<GenerationProfile> profile;
  /// Stop starting new candidates after this many seconds.
  std::optional<double> time_limit_seconds;
};

struct PipelinePair {
  FoundPair pair;
  std::size_t candidate = 0;
  std::optional<std::int64_t> x;  // signed, from the found pair
  std::optional<std::pair<std::int64_t, std::int64_t>> n1_n2;
};

struct PipelineResult {
  std::size_t dioph_solutions = 0;  // d = 5 only
  std::vector<CandidatePair> candidates;
  std::vector<PipelinePair> pairs;
  std::uint64_t nodes_visited = 0;
  std::size_t candidates_searched = 0;
  /// Every candidate was searched to exhaustion.
  bool exhausted = false;

  std::set<std::int64_t> abs_x_set() const;
  /// n1 = n2 = l + 1 for every found pair.
  bool all_balanced() const;
};

using PairSink = std::function<void(const PipelinePair&)>;

/// Throws ValidationError when l is not 5m and no profile is given.
PipelineResult run_pipeline(const PipelineOptions& opts, const PairSink& sink = {});

}  // namespace lp::cli
