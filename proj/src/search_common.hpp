// Helpers shared by the decompression and orbit searches.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lp::detail {

/// PAF values at shifts 1..(l-1)/2; the rest follow by symmetry.
using PafKey = std::vector<std::int16_t>;

struct PafKeyHash {
  std::size_t operator()(const PafKey& key) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : key) {
      h ^= static_cast<std::uint16_t>(v);
      h *= 1099511628211ULL;
    }
    return h;
  }
};

PafKey paf_key(std::span<const int> seq);

/// Key a partner must carry: PAF_B(s) = -2 - PAF_A(s).
PafKey partner_key(const PafKey& key);

/// w^e for w = exp(2 pi i / n), looked up from a table of the n roots.
class RootTable {
 public:
  explicit RootTable(int n);
  const std::complex<double>& operator()(long long e) const {
    const long long r = e % n_;
    return roots_[static_cast<std::size_t>(r < 0 ? r + n_ : r)];
  }
  int size() const { return n_; }

 private:
  int n_;
  std::vector<std::complex<double>> roots_;
};

/// The PSD ceiling 2l + 2 plus the floating-point guard.
double psd_ceiling(int ell);

/// True when PSD(k) <= ceiling for every k in 1..(l-1)/2.
bool psd_within(std::span<const int> seq, const RootTable& roots, double ceiling);

}  // namespace lp::detail
