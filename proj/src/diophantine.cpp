#include "lp/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lp {

namespace {

int isqrt(int n) {
  int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

int largest_odd_at_most(int n) { return n % 2 == 0 ? n - 1 : n; }

// Fills values[slot], values[slot-1], ..., values[0] with non-increasing odd
// numbers, largest first, so each completed vector is already ascending.
void descend(std::array<int, 5>& values, int slot, int remaining, int cap, int target,
             std::vector<DiophSolution>& out) {
  if (slot < 0) {
    if (remaining == 0) out.push_back({values, target});
    return;
  }
  // Every remaining slot holds at least 1.
  const int slots_left = slot + 1;
  if (remaining < slots_left) return;
  const int hi = std::min(cap, largest_odd_at_most(isqrt(remaining - slot)));
  for (int v = hi; v >= 1; v -= 2) {
    // The slot+1 values still to place are all <= v.
    if (slots_left * v * v < remaining) break;
    values[slot] = v;
    descend(values, slot - 1, remaining - v * v, v, target, out);
  }
}

}  // namespace

std::vector<DiophSolution> odd_five_squares(int m) {
  if (m < 1 || m % 2 == 0) {
    throw std::domain_error("odd_five_squares needs odd m >= 1, got " + std::to_string(m));
  }
  const int target = 4 * m + 1;
  std::vector<DiophSolution> out;
  std::array<int, 5> values{};
  descend(values, 4, target, largest_odd_at_most(isqrt(target)), target, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool admits_unit_sum(const DiophSolution& sol) {
  for (unsigned mask = 0; mask < 32; ++mask) {
    int s = 0;
    for (int i = 0; i < 5; ++i) s += (mask >> i & 1u) ? -sol.values[i] : sol.values[i];
    if (s == 1) return true;
  }
  return false;
}

std::vector<SignedTuple> signed_orderings(const DiophSolution& sol) {
  std::vector<SignedTuple> out;
  auto perm = sol.values;
  std::sort(perm.begin(), perm.end());
  do {
    for (unsigned mask = 0; mask < 32; ++mask) {
      SignedTuple t;
      int s = 0;
      for (int i = 0; i < 5; ++i) {
        t.values[i] = (mask >> i & 1u) ? -perm[i] : perm[i];
        s += t.values[i];
      }
      if (s == 1) out.push_back(t);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace lp
