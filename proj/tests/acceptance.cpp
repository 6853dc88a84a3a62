// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
//
//   acceptance                 run all criteria
//   acceptance --criterion N   run one
//   acceptance --long          give the budgeted l = 25, 35, 45 runs an hour each

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lp/candgen.hpp"
#include "lp/cli/golden.hpp"
#include "lp/cli/pipeline.hpp"
#include "lp/cli/reproduce.hpp"
#include "lp/decompress.hpp"
#include "lp/grouptools.hpp"
#include "lp/seqcore.hpp"
#include "oracles.hpp"

using namespace lp;
using namespace lp::cli;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    details.push_back(std::string(ok ? "ok    " : "FAIL  ") + what);
    pass = pass && ok;
  }
  void note(const std::string& what) { details.push_back("note  " + what); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string set_str(const std::set<std::int64_t>& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ",") + std::to_string(*it);
  return out + "}";
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed << s << " s";
  return o.str();
}

void absorb(Outcome& out, const ReproduceReport& r) {
  for (const auto& c : r.checks) {
    out.require(c.ok, c.ok ? c.name : c.name + ": expected " + c.expected + ", got " + c.actual);
  }
  for (const auto& n : r.notes) out.note(n);
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  absorb(o, reproduce_ell87_verify());
  // independent recheck
  const auto g = golden_ell87();
  for (const auto& [a, b] : g.pairs) {
    o.require(oracle::is_legendre_pair(a, b), "oracle PAF check");
    o.require(oracle::compress(a, 3) == g.a_compressed && oracle::compress(b, 3) == g.b_compressed,
              "oracle 3-compressions");
  }
  const double t = seconds_since(t0);
  o.require(t < 1.0, "runtime " + fmt_seconds(t) + " < 1 s");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  absorb(o, reproduce_ell85_decode());
  const double t = seconds_since(t0);
  o.require(t < 1.0, "runtime " + fmt_seconds(t) + " < 1 s");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = reproduce_dioph_all();
  absorb(o, r);
  std::set<std::array<int, 5>> ruled;
  for (const auto& g : golden_dioph()) {
    for (const auto& s : oracle::odd_five_squares(g.m)) {
      if (!oracle::admits_unit_sum(s)) ruled.insert(s);
    }
  }
  const std::set<std::array<int, 5>> stated{{3, 3, 3, 3, 3}, {1, 1, 1, 1, 7}, {1, 1, 5, 5, 5}, {1, 1, 1, 3, 9}};
  o.require(ruled == stated, "ruled-out solutions are exactly [3,3,3,3,3], [1,1,1,1,7], [1,1,5,5,5], [1,1,1,3,9]");
  const double t = seconds_since(t0);
  o.require(t < 1.0, "runtime " + fmt_seconds(t) + " < 1 s");
  return o;
}

Outcome criterion4(bool long_runs, double budget_seconds) {
  Outcome o;
  const auto rows = golden_table1();
  const auto row = [&](int ell) {
    for (const auto& r : rows) {
      if (r.ell == ell) return r;
    }
    throw std::runtime_error("no Table 1 row for l = " + std::to_string(ell));
  };

  for (int ell : {5, 15}) {
    const auto t0 = std::chrono::steady_clock::now();
    PipelineOptions p;
    p.ell = ell;
    p.jobs = 0;
    const PipelineResult res = run_pipeline(p);
    const double t = seconds_since(t0);
    const auto want = row(ell).x;
    const auto got = res.abs_x_set();
    const std::string tag = "l=" + std::to_string(ell) + " ";
    o.require(res.exhausted, tag + "exhaustive pipeline run (" + std::to_string(res.candidates.size()) +
                                 " candidates, " + std::to_string(res.pairs.size()) + " pairs, " + fmt_seconds(t) + ")");
    o.require(got == want, tag + "x-set: expected " + set_str(want) + ", got " + set_str(got));
    o.require(res.all_balanced(), tag + "every found pair has n1 = n2 = l + 1");
    if (ell == 15) o.require(t < 600, tag + "runtime under 10 minutes");

    // all pairs with unit sums, no compression filter
    std::set<std::int64_t> xs;
    std::size_t unbalanced = 0;
    const auto all = oracle::all_legendre_pairs(ell);
    for (const auto& [a, b] : all) {
      const auto ca = oracle::compress(a, ell / 5);
      xs.insert(std::llabs(oracle::x_of(ca)));
      if (oracle::paf(ca, 0) != 4 * (ell / 5) + 1) ++unbalanced;
    }
    o.note(tag + "brute force over all " + std::to_string(all.size()) + " ordered pairs: |x| in " + set_str(xs) +
           ", " + std::to_string(unbalanced) + " with n1 != n2");
  }

  // Budgeted runs: a match or INCONCLUSIVE, never a failure.
  const double limit = long_runs ? 3600.0 : budget_seconds;
  for (int ell : {25, 35, 45}) {
    const auto want = row(ell).x;
    const std::string tag = "l=" + std::to_string(ell) + " ";
    const auto t0 = std::chrono::steady_clock::now();
    PipelineOptions p;
    p.ell = ell;
    p.x_filter = want;
    p.budget_per_candidate = ell <= 25 ? SearchConfig::unlimited : 2'000'000;
    p.seed = 2024;
    p.jobs = 0;
    p.max_pairs = 1;
    p.time_limit_seconds = limit;
    const PipelineResult res = run_pipeline(p);
    const double t = seconds_since(t0);
    const std::string stats = std::to_string(res.candidates.size()) + " candidates with |x| in " + set_str(want) +
                              ", " + std::to_string(res.candidates_searched) + " searched, " + fmt_seconds(t);
    if (!res.pairs.empty()) {
      o.note(tag + "MATCH: found a pair with x = " + std::to_string(*res.pairs.front().x) + " (" + stats + ")");
    } else if (res.candidates.empty()) {
      o.note(tag + "INCONCLUSIVE: no candidate compression has |x| in " + set_str(want) +
             "; for l = 5m, x = 2 PAF(1) + 2m is a multiple of 4");
    } else {
      o.note(tag + "INCONCLUSIVE: no pair within " + fmt_seconds(limit) + " (" + stats + ")");
    }
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937_64 rng(0x5eed);
  const double pi = std::acos(-1.0);

  // (a)
  double worst_wk = 0, worst_comp = 0;
  bool paf_ok = true, sym_ok = true;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng() % 64;
    const auto s = oracle::random_pm(n, rng);
    const auto pv = paf_vector(s).values;
    for (std::size_t j = 1; j < n; ++j) sym_ok = sym_ok && pv[j] == pv[n - j] && pv[j] == oracle::paf(s, j);
    for (std::size_t k = 0; k < n; ++k) {
      double wk = 0;
      for (std::size_t j = 0; j < n; ++j) {
        wk += static_cast<double>(pv[j]) * std::cos(2 * pi * static_cast<double>(j * k % n) / static_cast<double>(n));
      }
      worst_wk = std::max(worst_wk, std::abs(psd(s, k) - wk));
    }
    for (std::size_t m = 1; m <= n; ++m) {
      if (n % m) continue;
      const auto c = compress(PmOneSequence(s), static_cast<int>(m));
      const std::size_t d = n / m;
      for (std::size_t k = 0; k < d; ++k) worst_comp = std::max(worst_comp, std::abs(psd(c.entries(), k) - psd(s, k * m)));
      for (std::size_t sft = 0; sft < d; ++sft) {
        std::int64_t grouped = 0;
        for (std::size_t j = sft; j < n; j += d) grouped += pv[j];
        paf_ok = paf_ok && paf(c.entries(), sft) == grouped;
      }
    }
  }
  o.require(sym_ok, "(a) PAF symmetry on 1000 random sequences");
  o.require(worst_wk <= 1e-8, "(a) Wiener-Khinchin, worst error " + std::to_string(worst_wk));
  o.require(worst_comp <= 1e-8, "(a) compression/PSD identity, worst error " + std::to_string(worst_comp));
  o.require(paf_ok, "(a) compression/PAF identity");

  // (b)
  double worst_rel = 0;
  for (int t = 0; t < 1000; ++t) {
    const int m = 1 + static_cast<int>(rng() % 17);
    const auto s = oracle::random_pm(static_cast<std::size_t>(5 * m), rng);
    const double exact = psd_at_m_exact(compress(PmOneSequence(s), m)).to_double();
    const double dft = psd(s, static_cast<std::size_t>(m));
    worst_rel = std::max(worst_rel, std::abs(exact - dft) / std::max(1.0, std::abs(dft)));
  }
  o.require(worst_rel <= 1e-6, "(b) exact PSD-at-m vs DFT on 1000 sequences, worst relative error " +
                                   std::to_string(worst_rel));

  // (c)
  bool full_ok = true;
  for (auto [n, k] : std::vector<std::pair<int, int>>{{6, 3}, {16, 12}}) {
    const auto all = oracle::lex_subsets(n, k);
    full_ok = full_ok && BigInt(all.size()) == binomial(n, k);
    for (std::size_t r = 0; r < all.size(); ++r) {
      full_ok = full_ok && lex_unrank(n, k, r) == all[r] && lex_rank(n, all[r]) == r;
    }
  }
  o.require(full_ok, "(c) LexRank round trip on all of (6,3) and (16,12)");
  bool sampled_ok = true;
  const BigInt total = binomial(34, 15);
  for (int t = 0; t < 100'000; ++t) {
    const BigInt r = BigInt(rng()) % total;
    sampled_ok = sampled_ok && lex_rank(34, lex_unrank(34, 15, r)) == r;
  }
  o.require(sampled_ok, "(c) LexRank round trip on 100000 sampled (34,15) ranks");

  // (d)
  std::size_t emitted = 0;
  bool sound = true;
  SearchConfig cfg;
  cfg.budget_nodes = SearchConfig::unlimited;
  for (const auto& c : candidates_d5(3)) {
    for (const auto& p : uncompress_search(15, c, cfg).pairs) {
      ++emitted;
      const std::vector<int> a(p.a.entries().begin(), p.a.entries().end());
      const std::vector<int> b(p.b.entries().begin(), p.b.entries().end());
      sound = sound && oracle::is_legendre_pair(a, b) && verify_legendre_pair(p.a, p.b).is_legendre_pair &&
              compress(p.a, 3) == c.a && compress(p.b, 3) == c.b;
    }
  }
  o.require(sound && emitted > 0, "(d) all " + std::to_string(emitted) +
                                      " decompressed l=15 pairs re-verify and re-compress to their candidate");
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto g = golden_ell85();
  const OrbitTable t = orbits(85, {69});
  const BigInt n1 = binomial(static_cast<int>(t.orbits_of_size(1).size()), 12);
  const BigInt n2 = binomial(static_cast<int>(t.orbits_of_size(2).size()), 15);
  o.require(n1 == 1820, "C(16,12) = " + n1.str());
  o.require(n2 == BigInt("1855967520"), "C(34,15) = " + n2.str());
  o.require(BigInt(n1 * n2) == g.search_space && g.search_space == BigInt("3377860886400"),
            "search space " + BigInt(n1 * n2).str());
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  bool long_runs = false;
  double budget_seconds = 20;
  app.add_option("--criterion", only, "Run a single criterion (1-6)")->check(CLI::Range(1, 6));
  app.add_flag("--long", long_runs, "One hour per budgeted run");
  app.add_option("--budget-seconds", budget_seconds, "Time per budgeted run without --long");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"l=87 witness verification", criterion1},
      {"l=85 decode chain", criterion2},
      {"Diophantine reference lists", criterion3},
      {"Table 1 at desk scale", [&] { return criterion4(long_runs, budget_seconds); }},
      {"property suites", criterion5},
      {"l=85 search-space count", criterion6},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<std::size_t>(only) != i + 1) continue;
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (out.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << " ("
              << fmt_seconds(seconds_since(t0)) << ")\n";
    for (const auto& d : out.details) std::cout << "        " << d << '\n';
    all = all && out.pass;
  }
  return all ? 0 : 1;
}
