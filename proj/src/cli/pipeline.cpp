#include "lp/cli/pipeline.hpp"

#include <chrono>
#include <cstdlib>
#include <stdexcept>

#include "lp/counter_rng.hpp"
#include "lp/diophantine.hpp"

namespace lp::cli {

std::set<std::int64_t> PipelineResult::abs_x_set() const {
  std::set<std::int64_t> out;
  for (const auto& p : pairs) {
    if (p.x) out.insert(std::llabs(*p.x));
  }
  return out;
}

bool PipelineResult::all_balanced() const {
  for (const auto& p : pairs) {
    if (!p.n1_n2) return false;
    const auto ell = static_cast<std::int64_t>(p.pair.a.size());
    if (p.n1_n2->first != ell + 1 || p.n1_n2->second != ell + 1) return false;
  }
  return true;
}

PipelineResult run_pipeline(const PipelineOptions& opts, const PairSink& sink) {
  const auto start = std::chrono::steady_clock::now();
  PipelineResult result;
  const int ell = opts.ell;

  if (opts.profile) {
    if (opts.profile->ell != ell) throw ValidationError("profile length does not match l");
    result.candidates = candidates_general(*opts.profile);
  } else {
    if (ell < 5 || ell % 5 != 0 || (ell / 5) % 2 == 0) {
      throw ValidationError("the conjecture pipeline needs l = 5m with m odd; pass a profile otherwise");
    }
    const int m = ell / 5;
    for (const auto& sol : odd_five_squares(m)) {
      if (admits_unit_sum(sol)) ++result.dioph_solutions;
    }
    result.candidates = candidates_d5(m, opts.x_filter);
  }

  const bool budgeted = opts.budget_per_candidate != SearchConfig::unlimited;
  std::vector<int> order(result.candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  if (budgeted) order = seeded_order(static_cast<int>(order.size()), opts.seed, 0x70697065ULL);

  result.exhausted = true;
  for (int ci : order) {
    if (opts.time_limit_seconds) {
      const double spent = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (spent >= *opts.time_limit_seconds) {
        result.exhausted = false;
        break;
      }
    }
    const auto& cand = result.candidates[static_cast<std::size_t>(ci)];
    SearchConfig cfg;
    cfg.budget_nodes = opts.budget_per_candidate;
    cfg.seed = counter_hash(opts.seed, 0x63616e64ULL, static_cast<std::uint64_t>(ci));
    cfg.jobs = opts.jobs;
    if (opts.max_pairs) cfg.max_solutions = opts.max_pairs - result.pairs.size();
    const SearchResult found = uncompress_search(ell, cand, cfg);
    ++result.candidates_searched;
    result.nodes_visited += found.nodes_visited;
    if (!found.exhausted) result.exhausted = false;

    for (const auto& fp : found.pairs) {
      PipelinePair pp{fp, static_cast<std::size_t>(ci), std::nullopt, std::nullopt};
      const VerificationReport report = verify_legendre_pair(fp.a, fp.b);
      if (!report.is_legendre_pair) {
        throw std::logic_error("decompression emitted a pair that fails verification");
      }
      if (ell % 5 == 0) {
        pp.x = report.x_value;
        pp.n1_n2 = report.n1_n2;
      }
      if (sink) sink(pp);
      result.pairs.push_back(std::move(pp));
    }
    if (opts.max_pairs && result.pairs.size() >= opts.max_pairs) {
      if (result.candidates_searched < result.candidates.size()) result.exhausted = false;
      break;
    }
  }
  return result;
}

}  // namespace lp::cli
