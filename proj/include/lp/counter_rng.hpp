// Counter-based randomness: every draw is a pure function of
// (seed, stream, counter), so shards can be evaluated in any order.

#pragma once

#include <cstdint>
#include <vector>

namespace lp {

std::uint64_t splitmix64(std::uint64_t x);

/// Hash of (seed, stream, counter) with full avalanche.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

/// A keyed bijection on [0, size). Used to sample without replacement:
/// the first n images of 0, 1, 2, ... are n distinct elements.
class IndexPermutation {
 public:
  IndexPermutation(std::uint64_t size, std::uint64_t seed);

  std::uint64_t operator()(std::uint64_t index) const;
  std::uint64_t size() const { return size_; }

 private:
  std::uint64_t feistel(std::uint64_t x) const;

  std::uint64_t size_;
  std::uint64_t seed_;
  unsigned half_bits_;
  std::uint64_t half_mask_;
};

/// Fisher-Yates shuffle of 0..n-1 driven by counter_hash(seed, stream, i).
std::vector<int> seeded_order(int n, std::uint64_t seed, std::uint64_t stream);

}  // namespace lp
