#include "lp/counter_rng.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace lp {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ counter);
}

IndexPermutation::IndexPermutation(std::uint64_t size, std::uint64_t seed) : size_(size), seed_(seed) {
  if (size == 0) throw std::invalid_argument("permutation domain must be non-empty");
  if (size > (std::uint64_t{1} << 62)) throw std::invalid_argument("permutation domain too large");
  // Smallest even bit width covering the domain; cycle-walking handles the rest.
  const unsigned bits = std::max(2u, static_cast<unsigned>(std::bit_width(size - 1)));
  half_bits_ = (bits + 1) / 2;
  half_mask_ = (std::uint64_t{1} << half_bits_) - 1;
}

std::uint64_t IndexPermutation::feistel(std::uint64_t x) const {
  std::uint64_t left = x >> half_bits_;
  std::uint64_t right = x & half_mask_;
  for (std::uint64_t round = 0; round < 4; ++round) {
    const std::uint64_t f = counter_hash(seed_, round, right) & half_mask_;
    left = std::exchange(right, left ^ f);
  }
  return (left << half_bits_) | right;
}

std::uint64_t IndexPermutation::operator()(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("permutation index out of range");
  std::uint64_t x = index;
  do {
    x = feistel(x);
  } while (x >= size_);
  return x;
}

std::vector<int> seeded_order(int n, std::uint64_t seed, std::uint64_t stream) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(counter_hash(seed, stream, static_cast<std::uint64_t>(i)) %
                                    static_cast<std::uint64_t>(i + 1));
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  return order;
}

}  // namespace lp
