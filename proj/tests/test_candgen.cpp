#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "lp/candgen.hpp"
#include "lp/cli/golden.hpp"
#include "oracles.hpp"

using namespace lp;
using oracle::Seq;

namespace {

Seq vec(const CompressedSequence& c) { return {c.entries().begin(), c.entries().end()}; }

std::set<std::pair<Seq, Seq>> as_set(const std::vector<CandidatePair>& cands) {
  std::set<std::pair<Seq, Seq>> out;
  for (const auto& c : cands) out.insert({vec(c.a), vec(c.b)});
  return out;
}

std::set<std::int64_t> abs_x(const std::vector<CandidatePair>& cands) {
  std::set<std::int64_t> out;
  for (const auto& c : cands) out.insert(std::llabs(*c.x));
  return out;
}

// Independent check of the pair invariants.
void check_pair(const CandidatePair& c) {
  const Seq a = vec(c.a);
  const Seq b = vec(c.b);
  const int m = c.factor;
  const auto d = a.size();
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < d; ++i) {
    sa += a[i];
    sb += b[i];
  }
  CHECK(sa == 1);
  CHECK(sb == 1);
  for (std::size_t s = 1; s < d; ++s) CHECK(oracle::paf(a, s) + oracle::paf(b, s) == -2 * m);
  for (std::size_t k = 1; k < d; ++k) {
    CHECK(static_cast<double>(oracle::psd(a, k) + oracle::psd(b, k)) == doctest::Approx(2.0 * c.ell + 2).epsilon(1e-9));
  }
  if (d == 5) {
    CHECK(oracle::paf(a, 0) == 4 * m + 1);
    CHECK(oracle::paf(b, 0) == 4 * m + 1);
    REQUIRE(c.x);
    CHECK(*c.x == oracle::x_of(a));
    CHECK(oracle::x_of(a) == -oracle::x_of(b));
    CHECK(*c.x % 2 == 0);
  }
  CHECK(candidate_violations(c).empty());
}

// Every pair of length-d sequences over odd magnitudes <= 3 with sums 1, the
// given magnitude counts and PAF sums -2m, up to equivalence.
std::set<std::pair<Seq, Seq>> general_oracle(int d, int m, const std::map<int, int>& counts, bool balanced) {
  std::vector<Seq> sides;
  Seq cur(static_cast<std::size_t>(d));
  auto rec = [&](auto&& self, int i, int sum) -> void {
    if (i == d) {
      if (sum == 1) sides.push_back(cur);
      return;
    }
    for (int v : {-3, -1, 1, 3}) {
      cur[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, sum + v);
    }
  };
  rec(rec, 0, 0);
  const auto count3 = [](const Seq& s) { return std::count_if(s.begin(), s.end(), [](int v) { return std::abs(v) == 3; }); };
  std::map<std::vector<long long>, std::vector<std::size_t>> by_key;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    std::vector<long long> key;
    for (int s = 1; s < d; ++s) key.push_back(oracle::paf(sides[i], static_cast<std::size_t>(s)));
    by_key[key].push_back(i);
  }
  std::set<std::pair<Seq, Seq>> out;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    std::vector<long long> want;
    for (int s = 1; s < d; ++s) want.push_back(-2LL * m - oracle::paf(sides[i], static_cast<std::size_t>(s)));
    const auto it = by_key.find(want);
    if (it == by_key.end()) continue;
    for (std::size_t j : it->second) {
      const auto c3 = count3(sides[i]) + count3(sides[j]);
      if (c3 != counts.at(3)) continue;
      if (balanced && (count3(sides[i]) != count3(sides[j]))) continue;
      out.insert(oracle::canonical(sides[i], sides[j]));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("d5 candidates equal the brute-force filter") {
  for (int m : {1, 3, 5, 7}) {
    CAPTURE(m);
    const auto got = candidates_d5(m);
    CHECK(as_set(got) == oracle::candidates_d5(m));
    CHECK(as_set(got).size() == got.size());
    CHECK(std::is_sorted(got.begin(), got.end(), [](const CandidatePair& p, const CandidatePair& q) {
      return std::tie(p.a, p.b) < std::tie(q.a, q.b);
    }));
    for (const auto& c : got) {
      CHECK(c.ell == 5 * m);
      CHECK(c.factor == m);
      check_pair(c);
    }
  }
}

TEST_CASE("d5 examples") {
  for (const auto& c : candidates_d5(3)) {
    for (const auto* side : {&c.a, &c.b}) {
      Seq mags;
      for (int v : side->entries()) mags.push_back(std::abs(v));
      std::sort(mags.begin(), mags.end());
      CHECK(mags == Seq{1, 1, 1, 1, 3});
    }
  }
  const auto m11 = candidates_d5(11);
  CHECK_FALSE(m11.empty());
  for (const auto& c : m11) {
    check_pair(c);
    for (const auto* side : {&c.a, &c.b}) {
      CHECK_FALSE(std::all_of(side->entries().begin(), side->entries().end(), [](int v) { return std::abs(v) == 3; }));
    }
  }
  // length 5: every candidate decompresses to itself, and |x| is 4
  const auto m1 = candidates_d5(1);
  CHECK_FALSE(m1.empty());
  CHECK(abs_x(m1) == std::set<std::int64_t>{4});
}

TEST_CASE("realized x values for m = 3 and m = 17") {
  const auto m3 = abs_x(candidates_d5(3));
  CHECK(m3.count(0));
  CHECK(m3.count(8));
  CHECK(m3 == std::set<std::int64_t>{0, 8});
  const auto m17 = candidates_d5(17);
  CHECK(abs_x(m17).count(36));
  bool printed = false;
  for (const auto& c : m17) {
    check_pair(c);
    const auto canon = canonicalize(CandidatePair{CompressedSequence({1, 3, 3, 1, -7}, 17),
                                                  CompressedSequence({3, 1, 1, 3, -7}, 17), 85, 17, 36});
    printed = printed || (c.a == canon.a && c.b == canon.b);
  }
  CHECK(printed);
}

TEST_CASE("x filter") {
  const auto only8 = candidates_d5(3, std::set<std::int64_t>{8});
  CHECK_FALSE(only8.empty());
  CHECK(abs_x(only8) == std::set<std::int64_t>{8});
  CHECK(candidates_d5(3, std::set<std::int64_t>{4}).empty());
  const auto all = candidates_d5(7);
  const auto some = candidates_d5(7, std::set<std::int64_t>{16});
  CHECK(some.size() == static_cast<std::size_t>(std::count_if(all.begin(), all.end(), [](const CandidatePair& c) {
          return std::llabs(*c.x) == 16;
        })));
}

TEST_CASE("canonical form") {
  const CandidatePair p{CompressedSequence({1, 3, 3, 1, -7}, 17), CompressedSequence({3, 1, 1, 3, -7}, 17), 85, 17, 36};
  const auto c = canonicalize(p);
  CHECK(canonicalize(c) == c);
  CHECK(std::make_pair(vec(c.a), vec(c.b)) == oracle::canonical(vec(p.a), vec(p.b)));
  REQUIRE(c.x);
  CHECK(*c.x == oracle::x_of(vec(c.a)));

  const auto shift = [](const Seq& s, std::size_t k) {
    Seq o(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) o[i] = s[(i + k) % s.size()];
    return o;
  };
  for (std::size_t k = 0; k < 5; ++k) {
    const CandidatePair q{CompressedSequence(shift(vec(p.a), k), 17), CompressedSequence(shift(vec(p.b), k), 17), 85, 17,
                          36};
    CHECK(canonicalize(q) == c);
  }
  Seq ra = vec(p.a), rb = vec(p.b);
  std::reverse(ra.begin(), ra.end());
  std::reverse(rb.begin(), rb.end());
  CHECK(canonicalize(CandidatePair{CompressedSequence(ra, 17), CompressedSequence(rb, 17), 85, 17, 36}) == c);
  CHECK(canonicalize(CandidatePair{p.b, p.a, 85, 17, -36}) == c);
}

TEST_CASE("profile identities") {
  const auto good = make_profile(87, 3, {{3, 14}, {1, 44}}, true);
  CHECK(good.violations().empty());
  CHECK_NOTHROW(good.validate());
  CHECK(good.length == 29);

  const auto bad = make_profile(87, 3, {{3, 15}, {1, 43}}, true);
  CHECK_FALSE(bad.violations().empty());
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  try {
    bad.validate();
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("2l + 2 - 2m") != std::string::npos);
  }
  CHECK_FALSE(make_profile(87, 3, {{3, 14}, {1, 40}}, false).violations().empty());  // count sum
  CHECK_FALSE(make_profile(87, 3, {{2, 14}, {1, 44}}, false).violations().empty());  // parity
  CHECK_FALSE(make_profile(87, 4, {{3, 14}, {1, 44}}, false).violations().empty());  // 4 does not divide 87
  auto with_x = make_profile(87, 3, {{3, 14}, {1, 44}}, false);
  with_x.x_filter = std::set<std::int64_t>{0};
  CHECK_FALSE(with_x.violations().empty());
  CHECK_FALSE(make_profile(21, 3, {{3, 3}, {1, 11}}, true).violations().empty());  // odd count cannot split
}

TEST_CASE("the length-87 reference compressions satisfy the balanced profile") {
  const auto g = lp::cli::golden_ell87();
  const auto profile = make_profile(87, 3, g.abs_value_counts, true);
  const CandidatePair p{CompressedSequence(g.a_compressed, 3), CompressedSequence(g.b_compressed, 3), 87, 3, std::nullopt};
  CHECK(candidate_violations(p).empty());
  CHECK(satisfies_profile(p, profile));
  CHECK(satisfies_profile(canonicalize(p), profile));
  check_pair(p);
}

TEST_CASE("general stream equals the brute-force set at small lengths") {
  // l = 15, m = 3: magnitude counts {3: 2, 1: 8}
  const auto unbalanced = candidates_general(make_profile(15, 3, {{3, 2}, {1, 8}}, false));
  CHECK(as_set(unbalanced) == general_oracle(5, 3, {{3, 2}, {1, 8}}, false));
  const auto balanced = candidates_general(make_profile(15, 3, {{3, 2}, {1, 8}}, true));
  CHECK(as_set(balanced) == general_oracle(5, 3, {{3, 2}, {1, 8}}, true));
  // the balanced d = 5 profile is the d5 generator
  CHECK(as_set(balanced) == as_set(candidates_d5(3)));
  CHECK(as_set(unbalanced).size() > as_set(balanced).size());

  // l = 21, m = 3: counts {3: 3, 1: 11}
  const auto d7 = candidates_general(make_profile(21, 3, {{3, 3}, {1, 11}}, false));
  CHECK_FALSE(d7.empty());
  CHECK(as_set(d7) == general_oracle(7, 3, {{3, 3}, {1, 11}}, false));
  for (const auto& c : d7) check_pair(c);
}

TEST_CASE("general stream is deterministic and respects the budget") {
  auto profile = make_profile(87, 3, {{3, 14}, {1, 44}}, true);
  profile.budget = 300'000;
  profile.seed = 5;
  CandidateStream s1(profile);
  CandidateStream s2(profile);
  std::vector<CandidatePair> c1, c2;
  while (auto c = s1.next()) c1.push_back(*c);
  while (auto c = s2.next()) c2.push_back(*c);
  CHECK(c1 == c2);
  CHECK(s1.nodes_visited() == s2.nodes_visited());
  CHECK(s1.nodes_visited() <= 300'000 + 64);
  CHECK_FALSE(s1.exhausted());
  for (const auto& c : c1) {
    check_pair(c);
    CHECK(satisfies_profile(c, profile));
  }
  MESSAGE("length-87 candidates within 300000 nodes: " << c1.size());
}
