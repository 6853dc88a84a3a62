// Second search stage: full +-1 pairs from candidate compressions, and the
// orbit-restricted search over unions of multiplier orbits.
//
// uncompress_search enumerates each side separately. A depth-first search
// walks the residue classes mod d (fewest admissible patterns first), places
// exactly (m - c_j)/2 minus ones in class j, and prunes with a running DFT
// bound: once |partial_k| - (largest possible remaining contribution) exceeds
// sqrt(2l + 2), PSD_A(k) <= 2l + 2 cannot hold. Surviving sequences are joined
// through their autocorrelation: PAF_B(s) = -2 - PAF_A(s).
//
// Work is sharded by the choice made in the first class; each shard owns a
// fixed slice of the node budget, so results do not depend on thread count.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lp/candgen.hpp"
#include "lp/grouptools.hpp"
#include "lp/seqcore.hpp"

namespace lp {

enum class SearchStrategy { backtrack, orbit_restricted };

struct SearchConfig {
  std::uint64_t budget_nodes = 1'000'000;
  /// Stop after this many pairs; 0 means no limit.
  std::uint64_t max_solutions = 0;
  std::uint64_t seed = 0;
  SearchStrategy strategy = SearchStrategy::backtrack;
  bool psd_prune = true;
  unsigned jobs = 1;

  // orbit_restricted only
  std::vector<int> subgroup_generators;
  std::optional<int> ones_orbits;
  std::optional<int> twos_orbits;
  /// Require p2 of the (l/5)-compression to be 4(l/5)+1 before pairing (5 | l).
  bool balanced_prefilter = true;
  /// Selections (ones rank, twos rank) evaluated before any sampled ones.
  std::vector<std::pair<BigInt, BigInt>> include_selections;

  static constexpr std::uint64_t unlimited = ~std::uint64_t{0};

  void validate() const;
};

/// Orbit selection codes of one side, keyed by orbit size.
using SelectionCodes = std::map<int, LexRankCode>;

struct FoundPair {
  PmOneSequence a;
  PmOneSequence b;
  /// Present for orbit_restricted results.
  std::optional<std::pair<SelectionCodes, SelectionCodes>> codes;
};

struct SearchResult {
  std::vector<FoundPair> pairs;
  std::uint64_t nodes_visited = 0;
  bool exhausted = false;
};

/// Throws ValidationError when the candidate does not match l, when a class
/// sum has the wrong parity, or when cfg is not a backtrack config.
SearchResult uncompress_search(int ell, const CandidatePair& cand, const SearchConfig& cfg);

/// Throws ValidationError when the orbit counts do not add up to (l-1)/2.
SearchResult orbit_search(int ell, const SearchConfig& cfg);

/// Worker count honouring the LP_THREADS cap.
unsigned effective_jobs(unsigned requested);

}  // namespace lp
