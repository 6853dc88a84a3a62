// Multiplier-subgroup orbits on Z_l \ {0}, lexicographic subset ranking, and
// the block <-> sequence conversion used by orbit-restricted constructions.
//
// A Block lists the residues r in {1, ..., l-1} that carry -1. Sequences are
// written a_1, a_2, ..., a_l with a_l standing for residue 0, so residue r
// lands at 0-based list index (r - 1) mod l. Under this layout the stride-d
// compression of the sequence lists the residue classes 1, 2, ..., d-1, 0.

#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "lp/seqcore.hpp"

namespace lp {

using Orbit = std::vector<int>;  // ascending residues

struct OrbitTable {
  int ell = 0;
  std::vector<int> generators;
  /// size -> orbits of that size, ordered by their least element.
  std::map<int, std::vector<Orbit>> orbits_by_size;

  const std::vector<Orbit>& orbits_of_size(int size) const;
  std::size_t orbit_count() const;
  /// Order of the generated subgroup of Z_l^*.
  int subgroup_order() const;
};

/// 0-based rank of an ascending k-subset of {1..N} in lexicographic order.
struct LexRankCode {
  int universe = 0;  // N
  int subset_size = 0;  // k
  BigInt rank;

  bool operator==(const LexRankCode&) const = default;
};

struct Block {
  int ell = 0;
  std::vector<int> positions;  // ascending residues; orbit blocks never contain 0

  bool operator==(const Block&) const = default;
};

BigInt binomial(int n, int k);

/// Throws std::domain_error when a generator is not a unit mod l.
OrbitTable orbits(int ell, const std::vector<int>& generators);

/// Throws std::out_of_range when rank >= C(N, k).
std::vector<int> lex_unrank(int universe, int subset_size, const BigInt& rank);
/// Throws std::domain_error for elements outside {1..N} or a non-ascending subset.
BigInt lex_rank(int universe, const std::vector<int>& subset);

/// Union of the selected orbits. codes maps orbit size -> selection code; the
/// code's universe must equal the number of orbits of that size.
Block block_from_codes(const OrbitTable& table, const std::map<int, LexRankCode>& codes);

/// Inverse of block_from_codes. Throws ValidationError if the block is not a
/// union of whole orbits.
std::map<int, LexRankCode> codes_from_block(const OrbitTable& table, const Block& block);

std::size_t index_of_residue(int ell, int residue);
int residue_of_index(int ell, std::size_t index);

PmOneSequence sequence_from_block(const Block& block);
/// Residues carrying -1 (residue 0 is reported too when it is negative).
Block block_from_sequence(const PmOneSequence& seq);

}  // namespace lp
