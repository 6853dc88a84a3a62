#include "search_common.hpp"

#include <numbers>

#include "lp/seqcore.hpp"

namespace lp::detail {

PafKey paf_key(std::span<const int> seq) {
  const std::size_t half = (seq.size() - 1) / 2;
  PafKey key(half);
  for (std::size_t s = 1; s <= half; ++s) key[s - 1] = static_cast<std::int16_t>(paf(seq, s));
  return key;
}

PafKey partner_key(const PafKey& key) {
  PafKey out(key.size());
  for (std::size_t i = 0; i < key.size(); ++i) out[i] = static_cast<std::int16_t>(-2 - key[i]);
  return out;
}

RootTable::RootTable(int n) : n_(n), roots_(static_cast<std::size_t>(n)) {
  for (int e = 0; e < n; ++e) {
    roots_[static_cast<std::size_t>(e)] = std::polar(1.0, 2.0 * std::numbers::pi * e / n);
  }
}

double psd_ceiling(int ell) { return 2.0 * ell + 2.0 + 1e-6; }

bool psd_within(std::span<const int> seq, const RootTable& roots, double ceiling) {
  const long long n = static_cast<long long>(seq.size());
  for (long long k = 1; k <= (n - 1) / 2; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (long long j = 0; j < n; ++j) acc += static_cast<double>(seq[static_cast<std::size_t>(j)]) * roots(j * k);
    if (std::norm(acc) > ceiling) return false;
  }
  return true;
}

}  // namespace lp::detail
