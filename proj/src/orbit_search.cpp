#include <algorithm>
#include <atomic>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "lp/counter_rng.hpp"
#include "lp/decompress.hpp"
#include "search_common.hpp"

namespace lp {

namespace {

using detail::PafKey;
using detail::PafKeyHash;

struct Selection {
  BigInt ones_rank;
  BigInt twos_rank;
  bool operator<(const Selection& o) const {
    return std::tie(ones_rank, twos_rank) < std::tie(o.ones_rank, o.twos_rank);
  }
};

struct Survivor {
  Selection selection;
  std::vector<int> entries;
  PafKey key;
};

struct OrbitSpace {
  OrbitTable table;
  int ones = 0;
  int twos = 0;
  BigInt ones_space;
  BigInt twos_space;
  BigInt total;
};

OrbitSpace make_space(int ell, const SearchConfig& cfg) {
  OrbitSpace space;
  space.table = orbits(ell, cfg.subgroup_generators);
  for (const auto& [size, list] : space.table.orbits_by_size) {
    if (size != 1 && size != 2) {
      throw ValidationError("orbit search handles orbits of size 1 and 2 only; the subgroup has orbits of size " +
                            std::to_string(size));
    }
  }
  space.ones = *cfg.ones_orbits;
  space.twos = *cfg.twos_orbits;
  const int n1 = static_cast<int>(space.table.orbits_of_size(1).size());
  const int n2 = static_cast<int>(space.table.orbits_of_size(2).size());
  if (space.ones < 0 || space.ones > n1 || space.twos < 0 || space.twos > n2) {
    throw ValidationError("orbit counts (" + std::to_string(space.ones) + ", " + std::to_string(space.twos) +
                          ") exceed the available orbits (" + std::to_string(n1) + ", " + std::to_string(n2) + ")");
  }
  if (space.ones + 2 * space.twos != (ell - 1) / 2) {
    throw ValidationError("block size " + std::to_string(space.ones) + " + 2*" + std::to_string(space.twos) + " = " +
                          std::to_string(space.ones + 2 * space.twos) + " != (l-1)/2 = " + std::to_string((ell - 1) / 2));
  }
  space.ones_space = binomial(n1, space.ones);
  space.twos_space = binomial(n2, space.twos);
  space.total = space.ones_space * space.twos_space;
  return space;
}

SelectionCodes codes_of(const OrbitSpace& space, const Selection& sel) {
  return {
      {1, LexRankCode{static_cast<int>(space.table.orbits_of_size(1).size()), space.ones, sel.ones_rank}},
      {2, LexRankCode{static_cast<int>(space.table.orbits_of_size(2).size()), space.twos, sel.twos_rank}},
  };
}

bool balanced_compression(const std::vector<int>& entries) {
  const int ell = static_cast<int>(entries.size());
  if (ell % 5 != 0) return true;
  const int m = ell / 5;
  const auto c = compress(PmOneSequence(entries), m);
  return power_sum_2(c.entries()) == 4LL * m + 1;
}

// Selections to evaluate, in evaluation order.
std::vector<Selection> plan(const OrbitSpace& space, const SearchConfig& cfg, bool& exhaustive) {
  std::vector<Selection> out;
  std::set<Selection> seen;
  const auto push = [&](Selection s) {
    if (seen.insert(s).second) out.push_back(std::move(s));
  };
  const BigInt budget = cfg.budget_nodes;

  if (space.total <= budget) {
    exhaustive = true;
    for (BigInt r1 = 0; r1 < space.ones_space; ++r1) {
      for (BigInt r2 = 0; r2 < space.twos_space; ++r2) push({r1, r2});
    }
    return out;
  }
  exhaustive = false;
  for (const auto& [r1, r2] : cfg.include_selections) {
    if (r1 < 0 || r1 >= space.ones_space || r2 < 0 || r2 >= space.twos_space) {
      throw ValidationError("included selection (" + r1.str() + ", " + r2.str() + ") is outside the search space");
    }
    if (out.size() >= cfg.budget_nodes) break;
    push({r1, r2});
  }
  const std::uint64_t want = cfg.budget_nodes - out.size();
  if (space.total <= BigInt(std::uint64_t{1} << 62)) {
    const auto total = static_cast<std::uint64_t>(space.total);
    const auto twos_space = static_cast<std::uint64_t>(space.twos_space);
    const IndexPermutation perm(total, cfg.seed);
    for (std::uint64_t i = 0; i < want; ++i) {
      const std::uint64_t idx = perm(i);
      push({BigInt(idx / twos_space), BigInt(idx % twos_space)});
    }
  } else {
    // Too large for the bijection: independent draws per side.
    const auto draw = [&](const BigInt& space_size, std::uint64_t stream, std::uint64_t i) {
      BigInt r = 0;
      for (std::uint64_t w = 0; w < 4; ++w) r = (r << 64) + counter_hash(cfg.seed, stream * 4 + w, i);
      return BigInt(r % space_size);
    };
    for (std::uint64_t i = 0; i < want; ++i) push({draw(space.ones_space, 1, i), draw(space.twos_space, 2, i)});
  }
  return out;
}

}  // namespace

SearchResult orbit_search(int ell, const SearchConfig& cfg) {
  cfg.validate();
  if (cfg.strategy != SearchStrategy::orbit_restricted) {
    throw ValidationError("orbit_search needs the orbit_restricted strategy");
  }
  if (ell < 3 || ell % 2 == 0) throw ValidationError("orbit search needs odd l >= 3");
  const OrbitSpace space = make_space(ell, cfg);

  bool exhaustive = false;
  const std::vector<Selection> selections = plan(space, cfg, exhaustive);
  const detail::RootTable roots(ell);
  const double ceiling = detail::psd_ceiling(ell);
  const bool check_balance = cfg.balanced_prefilter && ell % 5 == 0;

  const unsigned jobs = std::max<unsigned>(1, std::min<std::size_t>(effective_jobs(cfg.jobs), selections.size()));
  const std::size_t chunk = (selections.size() + jobs - 1) / std::max<unsigned>(jobs, 1);
  std::vector<std::vector<Survivor>> per_chunk(jobs);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(selections.size(), lo + chunk);
        for (std::size_t i = lo; i < hi; ++i) {
          const auto& sel = selections[i];
          const Block block = block_from_codes(space.table, codes_of(space, sel));
          const PmOneSequence seq = sequence_from_block(block);
          std::vector<int> entries(seq.entries().begin(), seq.entries().end());
          if (check_balance && !balanced_compression(entries)) continue;
          if (cfg.psd_prune && !detail::psd_within(entries, roots, ceiling)) continue;
          auto key = detail::paf_key(entries);
          per_chunk[w].push_back({sel, std::move(entries), std::move(key)});
        }
      });
    }
  }
  std::vector<Survivor> survivors;
  for (auto& c : per_chunk) std::move(c.begin(), c.end(), std::back_inserter(survivors));

  SearchResult result;
  result.nodes_visited = selections.size();
  result.exhausted = exhaustive;

  std::unordered_map<PafKey, std::vector<std::size_t>, PafKeyHash> index;
  for (std::size_t i = 0; i < survivors.size(); ++i) index[survivors[i].key].push_back(i);
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    const auto it = index.find(detail::partner_key(survivors[i].key));
    if (it == index.end()) continue;
    for (std::size_t j : it->second) {
      if (j < i) continue;
      PmOneSequence a(survivors[i].entries);
      PmOneSequence b(survivors[j].entries);
      if (ell % 5 == 0 && psd_at_m_exact(compress(a, ell / 5)).x() < 0) std::swap(a, b);
      FoundPair found{a, b, std::nullopt};
      found.codes = std::make_pair(codes_from_block(space.table, block_from_sequence(a)),
                                   codes_from_block(space.table, block_from_sequence(b)));
      result.pairs.push_back(std::move(found));
      if (cfg.max_solutions && result.pairs.size() >= cfg.max_solutions) return result;
    }
  }
  return result;
}

}  // namespace lp
