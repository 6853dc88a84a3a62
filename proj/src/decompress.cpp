#include "lp/decompress.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <iterator>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>
#include <thread>
#include <unordered_map>

#include "lp/counter_rng.hpp"
#include "search_common.hpp"

namespace lp {

namespace {

using detail::PafKey;
using detail::PafKeyHash;
using detail::RootTable;

// Shards target at least this many prefixes so the budget spreads over
// several corners of the tree.
constexpr std::uint64_t kMinShards = 64;
// Upper bound on stored class contributions (patterns x frequencies).
constexpr std::size_t kMaxContributionTable = std::size_t{1} << 26;

struct Leaf {
  std::vector<int> entries;
  PafKey key;
};

struct ShardOutcome {
  std::vector<Leaf> leaves;
  std::uint64_t nodes = 0;
  bool complete = false;
};

std::vector<std::uint32_t> patterns_with_minus_count(int m, int minus) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    if (std::popcount(mask) == minus) out.push_back(mask);
  }
  return out;
}

// Enumerates the +-1 sequences of length l whose m-compression is `target`
// and whose PSD stays under the ceiling.
class SideEnumerator {
 public:
  SideEnumerator(int ell, const CompressedSequence& target, std::uint64_t seed, bool psd_prune)
      : ell_(ell), d_(static_cast<int>(target.size())), m_(target.factor()), psd_prune_(psd_prune),
        roots_(ell), ceiling_(std::sqrt(detail::psd_ceiling(ell))) {
    for (int k = 1; k <= (ell - 1) / 2; ++k) {
      if (k % m_ != 0) freqs_.push_back(k);
    }
    const auto f = freqs_.size();
    patterns_.resize(static_cast<std::size_t>(d_));
    for (int j = 0; j < d_; ++j) {
      const int minus = (m_ - target[static_cast<std::size_t>(j)]) / 2;
      auto pats = patterns_with_minus_count(m_, minus);
      const auto order = seeded_order(static_cast<int>(pats.size()), seed, static_cast<std::uint64_t>(j));
      auto& dst = patterns_[static_cast<std::size_t>(j)];
      for (int idx : order) dst.push_back(pats[static_cast<std::size_t>(idx)]);
    }
    // Fewest patterns first; ties by class index.
    order_.resize(static_cast<std::size_t>(d_));
    for (int j = 0; j < d_; ++j) order_[static_cast<std::size_t>(j)] = j;
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
      return patterns_[static_cast<std::size_t>(x)].size() < patterns_[static_cast<std::size_t>(y)].size();
    });

    std::size_t table = 0;
    for (const auto& p : patterns_) table += p.size() * f;
    if (table > kMaxContributionTable) {
      throw ValidationError("decompression tables too large for l = " + std::to_string(ell) +
                            ", m = " + std::to_string(m_));
    }
    contrib_.resize(static_cast<std::size_t>(d_));
    max_abs_.assign(static_cast<std::size_t>(d_), std::vector<double>(f, 0.0));
    for (int j = 0; j < d_; ++j) {
      const auto& pats = patterns_[static_cast<std::size_t>(j)];
      auto& c = contrib_[static_cast<std::size_t>(j)];
      c.resize(pats.size() * f);
      for (std::size_t p = 0; p < pats.size(); ++p) {
        for (std::size_t fi = 0; fi < f; ++fi) {
          std::complex<double> acc{0.0, 0.0};
          for (int i = 0; i < m_; ++i) {
            const double sign = (pats[p] >> i & 1u) ? -1.0 : 1.0;
            acc += sign * roots_(static_cast<long long>(j + i * d_) * freqs_[fi]);
          }
          c[p * f + fi] = acc;
          max_abs_[static_cast<std::size_t>(j)][fi] = std::max(max_abs_[static_cast<std::size_t>(j)][fi], std::abs(acc));
        }
      }
    }
    // suffix_[t][fi]: the most that classes order_[t..] can add at frequency fi.
    suffix_.assign(static_cast<std::size_t>(d_) + 1, std::vector<double>(f, 0.0));
    for (int t = d_ - 1; t >= 0; --t) {
      for (std::size_t fi = 0; fi < f; ++fi) {
        suffix_[static_cast<std::size_t>(t)][fi] =
            suffix_[static_cast<std::size_t>(t) + 1][fi] + max_abs_[static_cast<std::size_t>(order_[static_cast<std::size_t>(t)])][fi];
      }
    }

    // Shard prefix: the shortest run of classes with at least kMinShards combinations.
    shard_depth_ = 0;
    shard_count_ = 1;
    while (shard_depth_ < d_ && shard_count_ < kMinShards) {
      shard_count_ *= patterns_[static_cast<std::size_t>(order_[static_cast<std::size_t>(shard_depth_)])].size();
      ++shard_depth_;
    }
  }

  std::uint64_t shard_count() const { return shard_count_; }

  ShardOutcome run_shard(std::uint64_t shard, std::uint64_t budget) const {
    ShardOutcome out;
    const auto f = freqs_.size();
    // partial[t]: DFT over the classes order_[0..t).
    std::vector<std::vector<std::complex<double>>> partial(static_cast<std::size_t>(d_) + 1,
                                                          std::vector<std::complex<double>>(f));
    std::vector<std::uint32_t> chosen(static_cast<std::size_t>(d_), 0);

    // Decode the prefix (mixed radix, first class most significant).
    std::vector<std::size_t> prefix(static_cast<std::size_t>(shard_depth_));
    std::uint64_t rest = shard;
    for (int t = shard_depth_ - 1; t >= 0; --t) {
      const auto radix = patterns_[static_cast<std::size_t>(order_[static_cast<std::size_t>(t)])].size();
      prefix[static_cast<std::size_t>(t)] = static_cast<std::size_t>(rest % radix);
      rest /= radix;
    }
    for (int t = 0; t < shard_depth_; ++t) {
      if (out.nodes >= budget) return out;
      ++out.nodes;
      apply(t, prefix[static_cast<std::size_t>(t)], partial, chosen);
      if (!within_bound(t + 1, partial[static_cast<std::size_t>(t) + 1])) {
        out.complete = true;
        return out;
      }
    }
    if (shard_depth_ == d_) {
      emit(chosen, out.leaves);
      out.complete = true;
      return out;
    }

    // Iterative DFS over the remaining classes.
    std::vector<std::size_t> next(static_cast<std::size_t>(d_), 0);
    int t = shard_depth_;
    while (t >= shard_depth_) {
      const auto ut = static_cast<std::size_t>(t);
      const auto cls = static_cast<std::size_t>(order_[ut]);
      if (next[ut] == patterns_[cls].size()) {
        next[ut] = 0;
        --t;
        continue;
      }
      if (out.nodes >= budget) return out;
      ++out.nodes;
      apply(t, next[ut]++, partial, chosen);
      if (!within_bound(t + 1, partial[ut + 1])) continue;
      if (t + 1 == d_) {
        emit(chosen, out.leaves);
        continue;
      }
      ++t;
    }
    out.complete = true;
    return out;
  }

 private:
  void apply(int t, std::size_t pattern_index, std::vector<std::vector<std::complex<double>>>& partial,
             std::vector<std::uint32_t>& chosen) const {
    const auto ut = static_cast<std::size_t>(t);
    const auto cls = static_cast<std::size_t>(order_[ut]);
    const auto f = freqs_.size();
    const auto* c = contrib_[cls].data() + pattern_index * f;
    for (std::size_t fi = 0; fi < f; ++fi) partial[ut + 1][fi] = partial[ut][fi] + c[fi];
    chosen[cls] = patterns_[cls][pattern_index];
  }

  bool within_bound(int assigned, const std::vector<std::complex<double>>& partial) const {
    if (!psd_prune_) return true;
    const auto& rem = suffix_[static_cast<std::size_t>(assigned)];
    for (std::size_t fi = 0; fi < partial.size(); ++fi) {
      if (std::abs(partial[fi]) - rem[fi] > ceiling_) return false;
    }
    return true;
  }

  void emit(const std::vector<std::uint32_t>& chosen, std::vector<Leaf>& leaves) const {
    Leaf leaf;
    leaf.entries.assign(static_cast<std::size_t>(ell_), 1);
    for (int j = 0; j < d_; ++j) {
      for (int i = 0; i < m_; ++i) {
        if (chosen[static_cast<std::size_t>(j)] >> i & 1u) leaf.entries[static_cast<std::size_t>(j + i * d_)] = -1;
      }
    }
    leaf.key = detail::paf_key(leaf.entries);
    leaves.push_back(std::move(leaf));
  }

  int ell_, d_, m_;
  bool psd_prune_;
  RootTable roots_;
  double ceiling_;
  std::vector<int> freqs_;
  std::vector<std::vector<std::uint32_t>> patterns_;
  std::vector<int> order_;
  std::vector<std::vector<std::complex<double>>> contrib_;
  std::vector<std::vector<double>> max_abs_;
  std::vector<std::vector<double>> suffix_;
  int shard_depth_ = 0;
  std::uint64_t shard_count_ = 1;
};

struct SideOutcome {
  std::vector<Leaf> leaves;
  std::uint64_t nodes = 0;
  bool complete = true;
};

SideOutcome enumerate_side(const SideEnumerator& en, std::uint64_t budget, unsigned jobs) {
  const std::uint64_t shards = en.shard_count();
  std::vector<ShardOutcome> results(shards);
  const auto share = [&](std::uint64_t s) {
    if (budget == SearchConfig::unlimited) return budget;
    return budget / shards + (s < budget % shards ? 1 : 0);
  };
  std::atomic<std::uint64_t> cursor{0};
  const auto worker = [&] {
    for (std::uint64_t s = cursor++; s < shards; s = cursor++) results[s] = en.run_shard(s, share(s));
  };
  {
    std::vector<std::jthread> pool;
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::uint64_t>(shards, 1024))));
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
  }
  SideOutcome out;
  for (auto& r : results) {
    out.nodes += r.nodes;
    out.complete = out.complete && r.complete;
    std::move(r.leaves.begin(), r.leaves.end(), std::back_inserter(out.leaves));
  }
  return out;
}

void check_candidate(int ell, const CandidatePair& cand) {
  const int m = cand.factor;
  const auto d = cand.a.size();
  if (cand.b.size() != d || cand.a.factor() != m || cand.b.factor() != m) {
    throw ValidationError("candidate sides disagree on length or factor");
  }
  if (static_cast<long long>(d) * m != ell) {
    throw ValidationError("candidate d * m = " + std::to_string(d * static_cast<std::size_t>(m)) + " != l = " +
                          std::to_string(ell));
  }
  if (m > 24) throw ValidationError("compression factor above 24 is not supported");
  for (const auto* side : {&cand.a, &cand.b}) {
    for (std::size_t j = 0; j < d; ++j) {
      const int c = (*side)[j];
      if ((m - c) % 2 != 0 || c > m || c < -m) {
        throw ValidationError("class " + std::to_string(j) + " sum " + std::to_string(c) +
                              " cannot be split into +-1 entries (m = " + std::to_string(m) + ")");
      }
    }
  }
}

}  // namespace

void SearchConfig::validate() const {
  if (budget_nodes == 0) throw ValidationError("budget_nodes must be positive");
  if (strategy == SearchStrategy::backtrack) {
    if (!subgroup_generators.empty() || ones_orbits || twos_orbits || !include_selections.empty()) {
      throw ValidationError("orbit fields are only valid with the orbit_restricted strategy");
    }
  } else {
    if (subgroup_generators.empty() || !ones_orbits || !twos_orbits) {
      throw ValidationError("orbit_restricted needs subgroup generators and ones/twos orbit counts");
    }
  }
}

unsigned effective_jobs(unsigned requested) {
  unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  if (const char* cap = std::getenv("LP_THREADS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v > 0) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return std::max(1u, n);
}

SearchResult uncompress_search(int ell, const CandidatePair& cand, const SearchConfig& cfg) {
  cfg.validate();
  if (cfg.strategy != SearchStrategy::backtrack) throw ValidationError("uncompress_search needs the backtrack strategy");
  check_candidate(ell, cand);
  const unsigned jobs = effective_jobs(cfg.jobs);

  SearchResult result;
  const bool same_sides = cand.a == cand.b;
  const std::uint64_t budget_a =
      same_sides || cfg.budget_nodes == SearchConfig::unlimited ? cfg.budget_nodes : cfg.budget_nodes - cfg.budget_nodes / 2;
  const std::uint64_t budget_b =
      cfg.budget_nodes == SearchConfig::unlimited ? cfg.budget_nodes : cfg.budget_nodes / 2;

  const SideEnumerator enum_a(ell, cand.a, cfg.seed, cfg.psd_prune);
  SideOutcome side_a = enumerate_side(enum_a, budget_a, jobs);
  SideOutcome side_b_storage;
  const SideOutcome* side_b = &side_a;
  if (!same_sides) {
    const SideEnumerator enum_b(ell, cand.b, cfg.seed ^ 0x5bd1e995ULL, cfg.psd_prune);
    side_b_storage = enumerate_side(enum_b, budget_b, jobs);
    side_b = &side_b_storage;
  }
  result.nodes_visited = side_a.nodes + (same_sides ? 0 : side_b->nodes);
  result.exhausted = side_a.complete && side_b->complete;

  std::unordered_map<PafKey, std::vector<std::size_t>, PafKeyHash> index;
  for (std::size_t i = 0; i < side_b->leaves.size(); ++i) index[side_b->leaves[i].key].push_back(i);
  for (const auto& leaf : side_a.leaves) {
    const auto it = index.find(detail::partner_key(leaf.key));
    if (it == index.end()) continue;
    for (std::size_t bi : it->second) {
      result.pairs.push_back({PmOneSequence(leaf.entries), PmOneSequence(side_b->leaves[bi].entries), std::nullopt});
      if (cfg.max_solutions && result.pairs.size() >= cfg.max_solutions) return result;
    }
  }
  return result;
}

}  // namespace lp
