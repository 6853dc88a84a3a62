// Brute-force reference implementations used only by the tests. Each one
// follows the textbook definition and shares no code with the library.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Seq = std::vector<int>;

inline long long paf(const Seq& a, std::size_t s) {
  const std::size_t n = a.size();
  long long t = 0;
  for (std::size_t i = 0; i < n; ++i) t += static_cast<long long>(a[i]) * a[(i + s) % n];
  return t;
}

inline long double psd(const Seq& a, std::size_t k) {
  const long double pi = std::acos(-1.0L);
  long double re = 0, im = 0;
  const auto n = static_cast<long double>(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    const long double t = 2 * pi * static_cast<long double>(j * k % a.size()) / n;
    re += a[j] * std::cos(t);
    im += a[j] * std::sin(t);
  }
  return re * re + im * im;
}

// entry j = sum of a_i over i = j (mod d)
inline Seq compress(const Seq& a, int m) {
  const std::size_t d = a.size() / static_cast<std::size_t>(m);
  Seq c(d, 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i % d] += a[i];
  return c;
}

inline Seq random_pm(std::size_t n, std::mt19937_64& rng) {
  Seq s(n);
  for (auto& v : s) v = (rng() & 1) ? 1 : -1;
  return s;
}

inline Seq random_unit_sum(std::size_t n, std::mt19937_64& rng) {
  Seq s(n, 1);
  for (std::size_t i = 0; i < (n - 1) / 2; ++i) s[i] = -1;
  std::shuffle(s.begin(), s.end(), rng);
  return s;
}

inline bool is_legendre_pair(const Seq& a, const Seq& b) {
  for (std::size_t s = 1; s < a.size(); ++s) {
    if (paf(a, s) + paf(b, s) != -2) return false;
  }
  return true;
}

// Every +-1 sequence of length n with exactly `minus` entries equal to -1.
inline std::vector<Seq> sequences_with_minus(int n, int minus) {
  std::vector<Seq> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != minus) continue;
    Seq s(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) s[static_cast<std::size_t>(i)] = -1;
    }
    out.push_back(std::move(s));
  }
  return out;
}

// All ordered Legendre pairs (a, b) of length n with both sums +1.
inline std::vector<std::pair<Seq, Seq>> all_legendre_pairs(int n) {
  const auto seqs = sequences_with_minus(n, (n - 1) / 2);
  std::map<std::vector<long long>, std::vector<std::size_t>> by_paf;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    std::vector<long long> key;
    for (int s = 1; s < n; ++s) key.push_back(paf(seqs[i], static_cast<std::size_t>(s)));
    by_paf[key].push_back(i);
  }
  std::vector<std::pair<Seq, Seq>> out;
  for (const auto& [key, idx] : by_paf) {
    std::vector<long long> want = key;
    for (auto& v : want) v = -2 - v;
    const auto it = by_paf.find(want);
    if (it == by_paf.end()) continue;
    for (std::size_t i : idx) {
      for (std::size_t j : it->second) out.emplace_back(seqs[i], seqs[j]);
    }
  }
  return out;
}

// x = PAF(1) - PAF(2) of a length-5 sequence.
inline long long x_of(const Seq& c5) { return paf(c5, 1) - paf(c5, 2); }

// Sorted 5-tuples of odd positive integers with squares summing to 4m+1.
inline std::vector<std::array<int, 5>> odd_five_squares(int m) {
  const int target = 4 * m + 1;
  std::vector<std::array<int, 5>> out;
  for (int a = 1; a * a <= target; a += 2)
    for (int b = a; b * b <= target; b += 2)
      for (int c = b; c * c <= target; c += 2)
        for (int d = c; d * d <= target; d += 2)
          for (int e = d; e * e <= target; e += 2)
            if (a * a + b * b + c * c + d * d + e * e == target) out.push_back({a, b, c, d, e});
  return out;
}

inline bool admits_unit_sum(const std::array<int, 5>& v) {
  for (int signs = 0; signs < 32; ++signs) {
    int s = 0;
    for (int i = 0; i < 5; ++i) s += (signs >> i & 1) ? -v[static_cast<std::size_t>(i)] : v[static_cast<std::size_t>(i)];
    if (s == 1) return true;
  }
  return false;
}

// All k-subsets of {1..n} in lexicographic order.
inline std::vector<std::vector<int>> lex_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n - (k - static_cast<int>(cur.size())) + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

inline unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
  return r;
}

// Orbits of <gens> acting by multiplication on {1..n-1}.
inline std::set<std::set<int>> orbits(int n, const std::vector<int>& gens) {
  std::set<std::set<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int r = 1; r < n; ++r) {
    if (seen[static_cast<std::size_t>(r)]) continue;
    std::set<int> orb{r};
    std::vector<int> stack{r};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int g : gens) {
        const int w = static_cast<int>(static_cast<long long>(v) * g % n);
        if (orb.insert(w).second) stack.push_back(w);
      }
    }
    for (int v : orb) seen[static_cast<std::size_t>(v)] = true;
    out.insert(orb);
  }
  return out;
}

// Every image of s under cyclic shifts and reversal.
inline std::set<Seq> dihedral_images(const Seq& s) {
  std::set<Seq> out;
  Seq r(s.rbegin(), s.rend());
  for (std::size_t k = 0; k < s.size(); ++k) {
    Seq a(s.size()), b(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      a[i] = s[(i + k) % s.size()];
      b[i] = r[(i + k) % s.size()];
    }
    out.insert(a);
    out.insert(b);
  }
  return out;
}

// Canonical representative under independent dihedral moves and side swap.
inline std::pair<Seq, Seq> canonical(const Seq& a, const Seq& b) {
  const Seq ma = *dihedral_images(a).begin();
  const Seq mb = *dihedral_images(b).begin();
  return std::min(std::make_pair(ma, mb), std::make_pair(mb, ma));
}

// Compressed pairs of length 5 over odd entries in [-m, m] with sums 1,
// p2 = 4m+1 on each side and PAF sums -2m at shifts 1 and 2, up to
// equivalence.
inline std::set<std::pair<Seq, Seq>> candidates_d5(int m) {
  std::vector<Seq> sides;
  Seq cur(5);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == 5) {
      int sum = 0, p2 = 0;
      for (int v : cur) {
        sum += v;
        p2 += v * v;
      }
      if (sum == 1 && p2 == 4 * m + 1) sides.push_back(cur);
      return;
    }
    for (int v = -m; v <= m; v += 2) {
      cur[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::set<std::pair<Seq, Seq>> out;
  for (const auto& a : sides) {
    for (const auto& b : sides) {
      if (paf(a, 1) + paf(b, 1) == -2 * m && paf(a, 2) + paf(b, 2) == -2 * m) out.insert(canonical(a, b));
    }
  }
  return out;
}

}  // namespace oracle
