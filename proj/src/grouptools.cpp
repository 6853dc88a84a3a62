#include "lp/grouptools.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace lp {

const std::vector<Orbit>& OrbitTable::orbits_of_size(int size) const {
  static const std::vector<Orbit> empty;
  const auto it = orbits_by_size.find(size);
  return it == orbits_by_size.end() ? empty : it->second;
}

std::size_t OrbitTable::orbit_count() const {
  std::size_t n = 0;
  for (const auto& [size, list] : orbits_by_size) n += list.size();
  return n;
}

int OrbitTable::subgroup_order() const {
  // The orbit of 1 is the subgroup itself.
  for (const auto& [size, list] : orbits_by_size) {
    for (const auto& o : list) {
      if (o.front() == 1) return size;
    }
  }
  return 1;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

OrbitTable orbits(int ell, const std::vector<int>& generators) {
  if (ell < 2) throw std::domain_error("orbit table needs l >= 2");
  OrbitTable table;
  table.ell = ell;
  for (int g : generators) {
    const int r = ((g % ell) + ell) % ell;
    if (std::gcd(r, ell) != 1) {
      throw std::domain_error("generator " + std::to_string(g) + " is not a unit modulo " + std::to_string(ell));
    }
    table.generators.push_back(r);
  }

  std::vector<bool> seen(static_cast<std::size_t>(ell), false);
  std::vector<Orbit> all;
  for (int start = 1; start < ell; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    Orbit orbit{start};
    seen[static_cast<std::size_t>(start)] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (int g : table.generators) {
        const int next = static_cast<int>(static_cast<long long>(orbit[i]) * g % ell);
        if (!seen[static_cast<std::size_t>(next)]) {
          seen[static_cast<std::size_t>(next)] = true;
          orbit.push_back(next);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    all.push_back(std::move(orbit));
  }
  // Starts are visited in increasing order, so each size class is already
  // ordered by least element.
  for (auto& o : all) {
    const int size = static_cast<int>(o.size());
    table.orbits_by_size[size].push_back(std::move(o));
  }
  return table;
}

std::vector<int> lex_unrank(int universe, int subset_size, const BigInt& rank) {
  if (subset_size < 0 || subset_size > universe) throw std::out_of_range("subset size outside [0, N]");
  if (rank < 0 || rank >= binomial(universe, subset_size)) {
    throw std::out_of_range("rank " + rank.str() + " outside [0, C(" + std::to_string(universe) + "," +
                            std::to_string(subset_size) + "))");
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(subset_size));
  BigInt r = rank;
  int candidate = 1;
  for (int slot = 0; slot < subset_size; ++slot) {
    // Subsets whose next element is `candidate` number C(N - candidate, k - slot - 1).
    while (true) {
      const BigInt block = binomial(universe - candidate, subset_size - slot - 1);
      if (r < block) break;
      r -= block;
      ++candidate;
    }
    out.push_back(candidate);
    ++candidate;
  }
  return out;
}

BigInt lex_rank(int universe, const std::vector<int>& subset) {
  const int k = static_cast<int>(subset.size());
  BigInt rank = 0;
  int previous = 0;
  for (int slot = 0; slot < k; ++slot) {
    const int v = subset[static_cast<std::size_t>(slot)];
    if (v < 1 || v > universe) {
      throw std::domain_error("element " + std::to_string(v) + " outside {1.." + std::to_string(universe) + "}");
    }
    if (v <= previous) throw std::domain_error("subset must be strictly ascending");
    for (int skipped = previous + 1; skipped < v; ++skipped) rank += binomial(universe - skipped, k - slot - 1);
    previous = v;
  }
  return rank;
}

Block block_from_codes(const OrbitTable& table, const std::map<int, LexRankCode>& codes) {
  Block block;
  block.ell = table.ell;
  for (const auto& [size, code] : codes) {
    const auto& list = table.orbits_of_size(size);
    if (code.universe != static_cast<int>(list.size())) {
      throw ValidationError("code for orbit size " + std::to_string(size) + " has universe " +
                            std::to_string(code.universe) + " but the table has " + std::to_string(list.size()) +
                            " such orbits");
    }
    for (int index : lex_unrank(code.universe, code.subset_size, code.rank)) {
      const auto& orbit = list[static_cast<std::size_t>(index - 1)];
      block.positions.insert(block.positions.end(), orbit.begin(), orbit.end());
    }
  }
  std::sort(block.positions.begin(), block.positions.end());
  return block;
}

std::map<int, LexRankCode> codes_from_block(const OrbitTable& table, const Block& block) {
  const std::set<int> members(block.positions.begin(), block.positions.end());
  std::map<int, LexRankCode> out;
  std::size_t covered = 0;
  for (const auto& [size, list] : table.orbits_by_size) {
    std::vector<int> chosen;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto hits = std::count_if(list[i].begin(), list[i].end(), [&](int r) { return members.contains(r); });
      if (hits == 0) continue;
      if (hits != static_cast<long>(list[i].size())) {
        throw ValidationError("block splits the orbit starting at " + std::to_string(list[i].front()));
      }
      chosen.push_back(static_cast<int>(i) + 1);
      covered += list[i].size();
    }
    const int universe = static_cast<int>(list.size());
    out[size] = LexRankCode{universe, static_cast<int>(chosen.size()), lex_rank(universe, chosen)};
  }
  if (covered != members.size()) throw ValidationError("block contains residues outside the orbit table");
  return out;
}

std::size_t index_of_residue(int ell, int residue) {
  return static_cast<std::size_t>(((residue - 1) % ell + ell) % ell);
}

int residue_of_index(int ell, std::size_t index) { return static_cast<int>((index + 1) % static_cast<std::size_t>(ell)); }

PmOneSequence sequence_from_block(const Block& block) {
  if (block.ell < 1) throw std::invalid_argument("block length must be >= 1");
  std::vector<int> entries(static_cast<std::size_t>(block.ell), 1);
  for (int r : block.positions) {
    if (r < 0 || r >= block.ell) throw std::out_of_range("block residue " + std::to_string(r) + " out of range");
    entries[index_of_residue(block.ell, r)] = -1;
  }
  return PmOneSequence(std::move(entries));
}

Block block_from_sequence(const PmOneSequence& seq) {
  Block block;
  block.ell = static_cast<int>(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] == -1) block.positions.push_back(residue_of_index(block.ell, i));
  }
  std::sort(block.positions.begin(), block.positions.end());
  return block;
}

}  // namespace lp
