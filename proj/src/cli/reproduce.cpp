#include "lp/cli/reproduce.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "lp/cli/golden.hpp"
#include "lp/cli/pipeline.hpp"
#include "lp/diophantine.hpp"
#include "lp/grouptools.hpp"
#include "lp/seqcore.hpp"

namespace lp::cli {

namespace {

template <typename Range>
std::string list(const Range& r) {
  std::ostringstream s;
  s << '[';
  bool first = true;
  for (const auto& v : r) {
    if (!first) s << ',';
    first = false;
    s << v;
  }
  s << ']';
  return s.str();
}

template <typename Outer>
std::string lists(const Outer& outer) {
  std::string s = "[";
  for (std::size_t i = 0; i < outer.size(); ++i) s += (i ? "," : "") + list(outer[i]);
  return s + "]";
}

std::string set_str(const std::set<std::int64_t>& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ",") + std::to_string(*it);
  return out + "}";
}

template <typename T>
void expect(ReproduceReport& r, std::string name, const T& expected, const T& actual, std::string e, std::string a) {
  r.checks.push_back({std::move(name), expected == actual, std::move(e), std::move(a)});
}

void expect_str(ReproduceReport& r, std::string name, const std::string& expected, const std::string& actual) {
  r.checks.push_back({std::move(name), expected == actual, expected, actual});
}

void expect_true(ReproduceReport& r, std::string name, bool ok, std::string actual = {}) {
  r.checks.push_back({std::move(name), ok, "true", ok ? "true" : (actual.empty() ? "false" : actual)});
}

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s.precision(digits);
  s << std::fixed << v;
  return s.str();
}

SelectionCodes selection(const OrbitTable& table, const Ell85Golden& g, const CodePair& c) {
  return {
      {1, LexRankCode{static_cast<int>(table.orbits_of_size(1).size()), g.ones, c.first}},
      {2, LexRankCode{static_cast<int>(table.orbits_of_size(2).size()), g.twos, c.second}},
  };
}

// Every Legendre pair of length l with both sums +1, found by joining all
// such sequences on their PAF values. Keys: |x| -> (pairs, unbalanced pairs).
std::map<std::int64_t, std::pair<std::size_t, std::size_t>> all_pairs_by_x(int ell) {
  std::vector<std::vector<int>> seqs;
  for (std::uint32_t mask = 0; mask < (1u << ell); ++mask) {
    if (std::popcount(mask) != (ell - 1) / 2) continue;
    std::vector<int> s(static_cast<std::size_t>(ell), 1);
    for (int i = 0; i < ell; ++i) {
      if (mask >> i & 1u) s[static_cast<std::size_t>(i)] = -1;
    }
    seqs.push_back(std::move(s));
  }
  std::map<std::vector<std::int64_t>, std::vector<std::size_t>> by_key;
  std::vector<std::vector<std::int64_t>> keys;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    std::vector<std::int64_t> key;
    for (int sft = 1; sft <= (ell - 1) / 2; ++sft) key.push_back(paf(seqs[i], static_cast<std::size_t>(sft)));
    by_key[key].push_back(i);
    keys.push_back(std::move(key));
  }
  std::map<std::int64_t, std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    std::vector<std::int64_t> want = keys[i];
    for (auto& v : want) v = -2 - v;
    const auto it = by_key.find(want);
    if (it == by_key.end()) continue;
    for (std::size_t j : it->second) {
      const auto report = verify_legendre_pair(PmOneSequence(seqs[i]), PmOneSequence(seqs[j]));
      auto& slot = out[std::llabs(*report.x_value)];
      ++slot.first;
      if (report.n1_n2->first != ell + 1 || report.n1_n2->second != ell + 1) ++slot.second;
    }
  }
  return out;
}

}  // namespace

bool ReproduceReport::identical() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

void ReproduceReport::print(std::ostream& out) const {
  out << "section " << section << '\n';
  for (const auto& c : checks) {
    if (c.ok) {
      out << "  ok    " << c.name << '\n';
    } else {
      out << "  DIFF  " << c.name << "\n    - " << c.expected << "\n    + " << c.actual << '\n';
    }
  }
  for (const auto& n : notes) out << "  note  " << n << '\n';
  out << (identical() ? "identical\n" : "mismatch\n");
}

nlohmann::json ReproduceReport::to_json() const {
  nlohmann::json j{{"section", section}, {"identical", identical()}, {"notes", notes}};
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"expected", c.expected}, {"actual", c.actual}});
  }
  return j;
}

const std::vector<std::string>& reproduce_sections() {
  static const std::vector<std::string> s{"dioph-all", "ell85-decode", "ell87-verify", "table1-small"};
  return s;
}

ReproduceReport reproduce(std::string_view section) {
  if (section == "dioph-all") return reproduce_dioph_all();
  if (section == "ell85-decode") return reproduce_ell85_decode();
  if (section == "ell87-verify") return reproduce_ell87_verify();
  if (section == "table1-small") return reproduce_table1_small();
  throw std::invalid_argument("unknown section '" + std::string(section) + "'");
}

ReproduceReport reproduce_dioph_all() {
  ReproduceReport r{"dioph-all", {}, {}};
  for (const auto& g : golden_dioph()) {
    const auto sols = odd_five_squares(g.m);
    std::vector<std::array<int, 5>> got;
    std::vector<std::array<int, 5>> ruled;
    for (const auto& s : sols) {
      got.push_back(s.values);
      if (!admits_unit_sum(s)) ruled.push_back(s.values);
      if (s.target != g.target) expect_str(r, "m=" + std::to_string(g.m) + " target", std::to_string(g.target), std::to_string(s.target));
    }
    const std::string tag = "m=" + std::to_string(g.m);
    expect(r, tag + " solutions", g.solutions, got, lists(g.solutions), lists(got));
    expect(r, tag + " ruled out", g.ruled_out, ruled, lists(g.ruled_out), lists(ruled));
  }
  return r;
}

ReproduceReport reproduce_ell85_decode() {
  ReproduceReport r{"ell85-decode", {}, {}};
  const Ell85Golden g = golden_ell85();
  const OrbitTable table = orbits(g.ell, g.generators);
  const int n1 = static_cast<int>(table.orbits_of_size(1).size());
  const int n2 = static_cast<int>(table.orbits_of_size(2).size());
  expect(r, "size-1 orbits", g.ones_orbit_count, n1, std::to_string(g.ones_orbit_count), std::to_string(n1));
  expect(r, "size-2 orbits", g.twos_orbit_count, n2, std::to_string(g.twos_orbit_count), std::to_string(n2));

  const BigInt s1 = binomial(n1, g.ones);
  const BigInt s2 = binomial(n2, g.twos);
  expect(r, "C(16,12)", g.ones_space, s1, g.ones_space.str(), s1.str());
  expect(r, "C(34,15)", g.twos_space, s2, g.twos_space.str(), s2.str());
  expect(r, "search space", g.search_space, BigInt(s1 * s2), g.search_space.str(), BigInt(s1 * s2).str());

  for (std::size_t i = 0; i < g.code_pairs.size(); ++i) {
    const auto& [ca, cb] = g.code_pairs[i];
    const std::string tag = "pair " + std::to_string(i + 1);
    const Block block_a = block_from_codes(table, selection(table, g, ca));
    const Block block_b = block_from_codes(table, selection(table, g, cb));
    const PmOneSequence a = sequence_from_block(block_a);
    const PmOneSequence b = sequence_from_block(block_b);
    const auto report = verify_legendre_pair(a, b);
    expect_true(r, tag + " is a Legendre pair", report.is_legendre_pair,
                report.failing_shift ? "fails at shift " + std::to_string(*report.failing_shift) : "");
    r.notes.push_back(tag + ": x = " + std::to_string(*report.x_value) + ", n1/n2 = " +
                      std::to_string(report.n1_n2->first) + "/" + std::to_string(report.n1_n2->second));
    if (i != 0) continue;

    expect(r, "first pair A ones subset", g.a_ones, lex_unrank(n1, g.ones, ca.first), list(g.a_ones),
           list(lex_unrank(n1, g.ones, ca.first)));
    expect(r, "first pair B ones subset", g.b_ones, lex_unrank(n1, g.ones, cb.first), list(g.b_ones),
           list(lex_unrank(n1, g.ones, cb.first)));
    expect(r, "first pair A twos subset", g.a_twos, lex_unrank(n2, g.twos, ca.second), list(g.a_twos),
           list(lex_unrank(n2, g.twos, ca.second)));
    expect(r, "first pair B twos subset", g.b_twos, lex_unrank(n2, g.twos, cb.second), list(g.b_twos),
           list(lex_unrank(n2, g.twos, cb.second)));

    auto sorted_a = g.a_block;
    auto sorted_b = g.b_block;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    expect(r, "A-block", sorted_a, block_a.positions, list(sorted_a), list(block_a.positions));
    expect(r, "B-block", sorted_b, block_b.positions, list(sorted_b), list(block_b.positions));

    const int m = g.ell / 5;
    const auto comp_a = compress(a, m);
    const auto comp_b = compress(b, m);
    const std::vector<int> got_a(comp_a.entries().begin(), comp_a.entries().end());
    const std::vector<int> got_b(comp_b.entries().begin(), comp_b.entries().end());
    expect(r, "A 17-compression", g.a_compressed, got_a, list(g.a_compressed), list(got_a));
    expect(r, "B 17-compression", g.b_compressed, got_b, list(g.b_compressed), list(got_b));
    expect(r, "x", g.x, *report.x_value, std::to_string(g.x), std::to_string(*report.x_value));

    const double pa = psd(a.entries(), static_cast<std::size_t>(m));
    const double pb = psd(b.entries(), static_cast<std::size_t>(m));
    r.checks.push_back({"PSD_A(17) within 1e-6", std::abs(pa - g.psd_a) <= 1e-6, fixed(g.psd_a, 7), fixed(pa, 10)});
    r.checks.push_back({"PSD_B(17) within 1e-6", std::abs(pb - g.psd_b) <= 1e-6, fixed(g.psd_b, 8), fixed(pb, 10)});
  }
  return r;
}

ReproduceReport reproduce_ell87_verify() {
  ReproduceReport r{"ell87-verify", {}, {}};
  const Ell87Golden g = golden_ell87();
  for (std::size_t i = 0; i < g.pairs.size(); ++i) {
    const std::string tag = "pair " + std::to_string(i + 1);
    const PmOneSequence a(g.pairs[i].first);
    const PmOneSequence b(g.pairs[i].second);
    expect(r, tag + " length", g.ell, static_cast<int>(a.size()), std::to_string(g.ell), std::to_string(a.size()));
    const auto report = verify_legendre_pair(a, b);
    expect_true(r, tag + " is a Legendre pair", report.is_legendre_pair,
                report.failing_shift ? "fails at shift " + std::to_string(*report.failing_shift) : "");
    const auto ca = compress(a, g.factor);
    const auto cb = compress(b, g.factor);
    const std::vector<int> got_a(ca.entries().begin(), ca.entries().end());
    const std::vector<int> got_b(cb.entries().begin(), cb.entries().end());
    expect(r, tag + " A 3-compression", g.a_compressed, got_a, list(g.a_compressed), list(got_a));
    expect(r, tag + " B 3-compression", g.b_compressed, got_b, list(g.b_compressed), list(got_b));

    std::map<int, int> counts;
    for (int v : got_a) ++counts[std::abs(v)];
    for (int v : got_b) ++counts[std::abs(v)];
    std::string e, a_str;
    for (const auto& [k, v] : g.abs_value_counts) e += std::to_string(k) + ":" + std::to_string(v) + " ";
    for (const auto& [k, v] : counts) a_str += std::to_string(k) + ":" + std::to_string(v) + " ";
    expect(r, tag + " magnitude counts", g.abs_value_counts, counts, e, a_str);
  }
  return r;
}

ReproduceReport reproduce_table1_small() {
  ReproduceReport r{"table1-small", {}, {}};
  for (const auto& row : golden_table1()) {
    if (row.ell > 15) continue;
    PipelineOptions opts;
    opts.ell = row.ell;
    const PipelineResult res = run_pipeline(opts);
    const std::string tag = "l=" + std::to_string(row.ell);
    expect_true(r, tag + " search exhausted", res.exhausted);
    const auto xs = res.abs_x_set();
    expect(r, tag + " x-set", row.x, xs, set_str(row.x), set_str(xs));
    expect_true(r, tag + " every pair has n1 = n2 = l + 1", res.all_balanced());
    r.notes.push_back(tag + ": " + std::to_string(res.candidates.size()) + " candidates, " +
                      std::to_string(res.pairs.size()) + " pairs");

    std::string oracle = tag + " all pairs with unit sums, by |x|:";
    for (const auto& [x, counts] : all_pairs_by_x(row.ell)) {
      oracle += " " + std::to_string(x) + " -> " + std::to_string(counts.first) + " ordered pairs (" +
                std::to_string(counts.second) + " with n1 != n2)";
    }
    r.notes.push_back(oracle);
  }
  return r;
}

}  // namespace lp::cli
