#include "lp/candgen.hpp"

#include <algorithm>
#include <cstdlib>
#include <array>
#include <numeric>
#include <tuple>
#include <sstream>

#include "lp/counter_rng.hpp"
#include "lp/diophantine.hpp"

namespace lp {

namespace {

std::vector<int> dihedral_min(std::span<const int> seq) {
  const std::size_t n = seq.size();
  std::vector<int> best(seq.begin(), seq.end());
  std::vector<int> cand(n);
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t shift = 0; shift < n; ++shift) {
      for (std::size_t i = 0; i < n; ++i) {
        // dir 0: rotation; dir 1: reversal followed by rotation.
        const std::size_t src = dir == 0 ? (i + shift) % n : (shift + n - i) % n;
        cand[i] = seq[src];
      }
      if (cand < best) best = cand;
    }
  }
  return best;
}

std::int64_t x_of(std::span<const int> a) { return paf(a, 1) - paf(a, 2); }

std::map<int, int> magnitude_counts(std::span<const int> seq) {
  std::map<int, int> out;
  for (int v : seq) ++out[std::abs(v)];
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Profiles

std::vector<std::string> GenerationProfile::violations() const {
  std::vector<std::string> out;
  if (factor < 1) out.push_back("compression factor must be >= 1");
  if (length < 1) out.push_back("compressed length must be >= 1");
  if (ell % 2 == 0) out.push_back("l = " + std::to_string(ell) + " must be odd");
  if (static_cast<long long>(length) * factor != ell) {
    out.push_back("d * m = " + std::to_string(length) + " * " + std::to_string(factor) + " != l = " +
                  std::to_string(ell));
  }
  long long total = 0;
  long long squares = 0;
  for (const auto& [mag, count] : abs_value_counts) {
    if (mag < 0 || mag > factor || (mag - factor) % 2 != 0) {
      out.push_back("magnitude " + std::to_string(mag) + " is not in the alphabet of factor " +
                    std::to_string(factor));
    }
    if (count < 0) out.push_back("negative count for magnitude " + std::to_string(mag));
    if (balanced && count % 2 != 0) {
      out.push_back("balanced profile needs an even count for magnitude " + std::to_string(mag) + ", got " +
                    std::to_string(count));
    }
    total += count;
    squares += static_cast<long long>(count) * mag * mag;
  }
  if (total != 2LL * length) {
    out.push_back("sum of counts " + std::to_string(total) + " != 2d = " + std::to_string(2LL * length));
  }
  // PAF_A(0) + PAF_B(0) + (d-1)(-2m) = (sum A)^2 + (sum B)^2 = 2.
  const long long want = 2LL * ell + 2 - 2LL * factor;
  if (squares != want) {
    out.push_back("sum of count * magnitude^2 = " + std::to_string(squares) + " != 2l + 2 - 2m = " +
                  std::to_string(want));
  }
  if (x_filter && length != 5) out.push_back("x filter applies to d = 5 only");
  if (budget && *budget == 0) out.push_back("budget must be positive");
  return out;
}

void GenerationProfile::validate() const {
  const auto v = violations();
  if (!v.empty()) throw ValidationError("inconsistent generation profile: " + join(v));
}

GenerationProfile make_profile(int ell, int factor, std::map<int, int> abs_value_counts, bool balanced) {
  GenerationProfile p;
  p.ell = ell;
  p.factor = factor;
  p.length = factor > 0 ? ell / factor : 0;
  p.abs_value_counts = std::move(abs_value_counts);
  p.balanced = balanced;
  return p;
}

// ---------------------------------------------------------------------------
// Invariants and canonical form

std::vector<std::string> candidate_violations(const CandidatePair& pair) {
  std::vector<std::string> out;
  const std::size_t d = pair.a.size();
  const int m = pair.factor;
  if (pair.b.size() != d) out.push_back("sides have different lengths");
  if (pair.a.factor() != m || pair.b.factor() != m) out.push_back("side factor differs from pair factor");
  if (static_cast<long long>(d) * m != pair.ell) out.push_back("d * m != l");
  if (!out.empty()) return out;
  if (pair.a.sum() != 1) out.push_back("sum(a) = " + std::to_string(pair.a.sum()) + " != 1");
  if (pair.b.sum() != 1) out.push_back("sum(b) = " + std::to_string(pair.b.sum()) + " != 1");
  for (std::size_t s = 1; s < d; ++s) {
    const auto total = paf(pair.a.entries(), s) + paf(pair.b.entries(), s);
    if (total != -2LL * m) {
      out.push_back("PAF_a(" + std::to_string(s) + ") + PAF_b(" + std::to_string(s) + ") = " + std::to_string(total) +
                    " != " + std::to_string(-2 * m));
    }
  }
  if (pair.x) {
    if (d != 5) {
      out.push_back("x recorded for d != 5");
    } else {
      const std::int64_t target = 4LL * m + 1;
      if (paf(pair.a.entries(), 0) != target || paf(pair.b.entries(), 0) != target) {
        out.push_back("PAF(0) of a side differs from 4m+1 = " + std::to_string(target));
      }
      if (x_of(pair.a.entries()) != *pair.x) out.push_back("x does not match PAF_a(1) - PAF_a(2)");
      if (x_of(pair.b.entries()) != -*pair.x) out.push_back("x does not match -(PAF_b(1) - PAF_b(2))");
    }
  }
  return out;
}

bool satisfies_profile(const CandidatePair& pair, const GenerationProfile& profile) {
  if (pair.ell != profile.ell || pair.factor != profile.factor ||
      pair.a.size() != static_cast<std::size_t>(profile.length) || pair.b.size() != pair.a.size()) {
    return false;
  }
  CandidatePair unmarked = pair;
  unmarked.x.reset();
  if (!candidate_violations(unmarked).empty()) return false;

  const auto ca = magnitude_counts(pair.a.entries());
  const auto cb = magnitude_counts(pair.b.entries());
  std::map<int, int> joint = ca;
  for (const auto& [mag, c] : cb) joint[mag] += c;
  std::map<int, int> want;
  for (const auto& [mag, c] : profile.abs_value_counts) {
    if (c) want[mag] = c;
  }
  if (joint != want) return false;
  if (profile.balanced) {
    for (const auto& [mag, c] : want) {
      const auto it_a = ca.find(mag);
      if (it_a == ca.end() || it_a->second * 2 != c) return false;
    }
  }
  if (profile.x_filter) {
    if (pair.a.size() != 5) return false;
    const auto x = std::abs(x_of(pair.a.entries()));
    bool hit = false;
    for (auto f : *profile.x_filter) hit = hit || std::abs(f) == x;
    if (!hit) return false;
  }
  return true;
}

CandidatePair canonicalize(const CandidatePair& pair) {
  auto a = dihedral_min(pair.a.entries());
  auto b = dihedral_min(pair.b.entries());
  if (b < a) std::swap(a, b);
  CandidatePair out;
  out.a = CompressedSequence(std::move(a), pair.factor);
  out.b = CompressedSequence(std::move(b), pair.factor);
  out.ell = pair.ell;
  out.factor = pair.factor;
  if (pair.x) out.x = x_of(out.a.entries());
  return out;
}

// ---------------------------------------------------------------------------
// d = 5 generator

std::vector<CandidatePair> candidates_d5(int m, const std::optional<std::set<std::int64_t>>& x_filter) {
  std::vector<SignedTuple> tuples;
  for (const auto& sol : odd_five_squares(m)) {
    if (!admits_unit_sum(sol)) continue;
    const auto t = signed_orderings(sol);
    tuples.insert(tuples.end(), t.begin(), t.end());
  }

  struct Autocorr {
    std::int64_t p1, p2;
  };
  std::vector<Autocorr> ac;
  ac.reserve(tuples.size());
  for (const auto& t : tuples) ac.push_back({paf(t.values, 1), paf(t.values, 2)});

  std::set<std::int64_t> wanted;
  if (x_filter) {
    for (auto v : *x_filter) wanted.insert(std::abs(v));
  }

  // For d = 5, PAF(3) = PAF(2) and PAF(4) = PAF(1), so shifts 1 and 2 suffice.
  const std::int64_t target = -2LL * m;
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::vector<CandidatePair> out;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    for (std::size_t j = 0; j < tuples.size(); ++j) {
      if (ac[i].p1 + ac[j].p1 != target || ac[i].p2 + ac[j].p2 != target) continue;
      const std::int64_t x = ac[i].p1 - ac[i].p2;
      if (x_filter && !wanted.contains(std::abs(x))) continue;
      CandidatePair p;
      p.a = CompressedSequence({tuples[i].values.begin(), tuples[i].values.end()}, m);
      p.b = CompressedSequence({tuples[j].values.begin(), tuples[j].values.end()}, m);
      p.ell = 5 * m;
      p.factor = m;
      p.x = x;
      auto c = canonicalize(p);
      std::vector<int> ka(c.a.entries().begin(), c.a.entries().end());
      std::vector<int> kb(c.b.entries().begin(), c.b.entries().end());
      if (seen.emplace(std::move(ka), std::move(kb)).second) out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), [](const CandidatePair& l, const CandidatePair& r) {
    return std::tie(l.a, l.b) < std::tie(r.a, r.b);
  });
  return out;
}

// ---------------------------------------------------------------------------
// General generator

namespace {

constexpr std::uint64_t kRestartNodes = std::uint64_t{1} << 18;

}  // namespace

struct CandidateStream::Impl {
  GenerationProfile profile;
  int d = 0;
  int half = 0;  // shifts 1..half determine the PAF
  std::vector<int> magnitudes;  // ascending
  std::vector<int> values;      // signed alphabet in base order

  // Remaining magnitude budget: pool[side][k] (balanced) or pool[0][k] shared.
  std::array<std::vector<int>, 2> pool;
  std::array<std::vector<int>, 2> seq;  // 0 = unassigned
  std::array<int, 2> partial_sum{0, 0};
  std::vector<std::int64_t> paf_known;  // index s = 1..half
  std::vector<int> known_pairs;         // pairs with both ends assigned, per s

  struct Frame {
    std::vector<int> order;  // indices into values
    std::size_t next = 0;
    int assigned = 0;  // 0 = none
  };
  std::vector<Frame> stack;

  std::uint64_t nodes = 0;
  std::uint64_t restart = 0;
  std::uint64_t restart_nodes = 0;
  bool done = false;
  bool tree_exhausted = false;
  std::set<std::pair<std::vector<int>, std::vector<int>>> emitted;

  explicit Impl(GenerationProfile p) : profile(std::move(p)) {
    profile.validate();
    d = profile.length;
    half = (d - 1) / 2;
    for (const auto& [mag, count] : profile.abs_value_counts) {
      if (count > 0) magnitudes.push_back(mag);
    }
    for (int mag : magnitudes) {
      values.push_back(mag);
      if (mag != 0) values.push_back(-mag);
    }
    reset_state();
  }

  int& pool_count(int side, std::size_t k) { return pool[profile.balanced ? side : 0][k]; }

  std::size_t mag_index(int v) const {
    return static_cast<std::size_t>(std::lower_bound(magnitudes.begin(), magnitudes.end(), std::abs(v)) -
                                    magnitudes.begin());
  }

  void reset_state() {
    for (int side = 0; side < 2; ++side) {
      pool[side].assign(magnitudes.size(), 0);
      seq[side].assign(static_cast<std::size_t>(d), 0);
    }
    for (std::size_t k = 0; k < magnitudes.size(); ++k) {
      const int c = profile.abs_value_counts.at(magnitudes[k]);
      if (profile.balanced) {
        pool[0][k] = pool[1][k] = c / 2;
      } else {
        pool[0][k] = c;
      }
    }
    partial_sum = {0, 0};
    paf_known.assign(static_cast<std::size_t>(half) + 1, 0);
    known_pairs.assign(static_cast<std::size_t>(half) + 1, 0);
    stack.clear();
    stack.push_back(make_frame(0));
    restart_nodes = 0;
  }

  Frame make_frame(int depth) const {
    Frame f;
    const auto perm = seeded_order(static_cast<int>(values.size()), profile.seed,
                                   (restart << 16) ^ static_cast<std::uint64_t>(depth));
    f.order = perm;
    return f;
  }

  static int pos_of(int depth) { return depth / 2; }
  static int side_of(int depth) { return depth % 2; }

  int cyclic_distance(int i, int j) const {
    const int delta = std::abs(i - j);
    return std::min(delta, d - delta);
  }

  // Adds (sign=+1) or removes (sign=-1) the products formed when position t is
  // completed on both sides.
  void update_pairs(int t, int sign) {
    for (int i = 0; i < t; ++i) {
      const int s = cyclic_distance(i, t);
      paf_known[static_cast<std::size_t>(s)] +=
          sign * (static_cast<std::int64_t>(seq[0][i]) * seq[0][t] + static_cast<std::int64_t>(seq[1][i]) * seq[1][t]);
      known_pairs[static_cast<std::size_t>(s)] += sign;
    }
  }

  void assign(int depth, int v) {
    const int side = side_of(depth);
    const int t = pos_of(depth);
    seq[side][t] = v;
    partial_sum[side] += v;
    --pool_count(side, mag_index(v));
    if (side == 1) update_pairs(t, +1);
  }

  void unassign(int depth) {
    const int side = side_of(depth);
    const int t = pos_of(depth);
    const int v = seq[side][t];
    if (side == 1) update_pairs(t, -1);
    seq[side][t] = 0;
    partial_sum[side] -= v;
    ++pool_count(side, mag_index(v));
  }

  int max_remaining_magnitude(int side) {
    const auto& p = pool[profile.balanced ? side : 0];
    for (std::size_t k = p.size(); k-- > 0;) {
      if (p[k] > 0) return magnitudes[k];
    }
    return 0;
  }

  bool sum_feasible(int side, int filled) {
    const int remaining_slots = d - filled;
    const int need = 1 - partial_sum[side];
    // Largest total the remaining slots can reach with the available magnitudes.
    const auto& p = pool[profile.balanced ? side : 0];
    int slots = remaining_slots;
    int reach = 0;
    int parity = 0;
    for (std::size_t k = p.size(); k-- > 0 && slots > 0;) {
      const int take = std::min(slots, p[k]);
      reach += take * magnitudes[k];
      slots -= take;
    }
    if (slots > 0) return false;
    if (profile.balanced) {
      for (std::size_t k = 0; k < p.size(); ++k) parity += p[k] * magnitudes[k];
      if ((need - parity) % 2 != 0) return false;
    }
    return std::abs(need) <= reach;
  }

  bool paf_feasible(int t) {
    const int max_a = max_remaining_magnitude(0);
    const int max_b = max_remaining_magnitude(1);
    const std::int64_t target = -2LL * profile.factor;
    for (int s = 1; s <= half; ++s) {
      std::int64_t slack = 0;
      for (int i = 0; i < d; ++i) {
        const int j = (i + s) % d;
        if (i <= t && j <= t) continue;
        const int ai = i <= t ? std::abs(seq[0][i]) : max_a;
        const int aj = j <= t ? std::abs(seq[0][j]) : max_a;
        const int bi = i <= t ? std::abs(seq[1][i]) : max_b;
        const int bj = j <= t ? std::abs(seq[1][j]) : max_b;
        slack += static_cast<std::int64_t>(ai) * aj + static_cast<std::int64_t>(bi) * bj;
      }
      if (std::abs(target - paf_known[static_cast<std::size_t>(s)]) > slack) return false;
    }
    return true;
  }

  bool feasible(int depth) {
    const int side = side_of(depth);
    const int t = pos_of(depth);
    if (!sum_feasible(side, t + 1)) return false;
    if (side == 1 && !paf_feasible(t)) return false;
    return true;
  }

  std::optional<CandidatePair> complete() {
    CandidatePair p;
    p.a = CompressedSequence(seq[0], profile.factor);
    p.b = CompressedSequence(seq[1], profile.factor);
    p.ell = profile.ell;
    p.factor = profile.factor;
    if (!satisfies_profile(p, profile)) return std::nullopt;
    auto c = canonicalize(p);
    if (d == 5) {
      const std::int64_t target = 4LL * profile.factor + 1;
      if (paf(c.a.entries(), 0) == target && paf(c.b.entries(), 0) == target) c.x = x_of(c.a.entries());
    }
    std::vector<int> ka(c.a.entries().begin(), c.a.entries().end());
    std::vector<int> kb(c.b.entries().begin(), c.b.entries().end());
    if (!emitted.emplace(std::move(ka), std::move(kb)).second) return std::nullopt;
    return c;
  }

  bool out_of_budget() const { return profile.budget && nodes >= *profile.budget; }

  void begin_restart() {
    ++restart;
    reset_state();
  }

  std::optional<CandidatePair> next() {
    const int depth_total = 2 * d;
    while (!done) {
      if (out_of_budget()) {
        done = true;
        break;
      }
      if (profile.budget && restart_nodes >= kRestartNodes) {
        begin_restart();
        continue;
      }
      if (stack.empty()) {
        tree_exhausted = true;
        done = true;
        break;
      }
      const int depth = static_cast<int>(stack.size()) - 1;
      Frame& f = stack.back();
      if (f.assigned) {
        unassign(depth);
        f.assigned = 0;
      }
      if (f.next == f.order.size()) {
        stack.pop_back();
        continue;
      }
      const int v = values[static_cast<std::size_t>(f.order[f.next++])];
      if (pool_count(side_of(depth), mag_index(v)) == 0) continue;
      assign(depth, v);
      f.assigned = v;
      ++nodes;
      ++restart_nodes;
      if (!feasible(depth)) continue;
      if (depth + 1 == depth_total) {
        if (auto c = complete()) return c;
        continue;
      }
      stack.push_back(make_frame(depth + 1));
    }
    return std::nullopt;
  }
};

CandidateStream::CandidateStream(GenerationProfile profile) : impl_(std::make_unique<Impl>(std::move(profile))) {}
CandidateStream::~CandidateStream() = default;
CandidateStream::CandidateStream(CandidateStream&&) noexcept = default;
CandidateStream& CandidateStream::operator=(CandidateStream&&) noexcept = default;

std::optional<CandidatePair> CandidateStream::next() { return impl_->next(); }
std::uint64_t CandidateStream::nodes_visited() const { return impl_->nodes; }
bool CandidateStream::exhausted() const { return impl_->tree_exhausted; }

std::vector<CandidatePair> candidates_general(const GenerationProfile& profile) {
  CandidateStream stream(profile);
  std::vector<CandidatePair> out;
  while (auto c = stream.next()) out.push_back(std::move(*c));
  return out;
}

}  // namespace lp
