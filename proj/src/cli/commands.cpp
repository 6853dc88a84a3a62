#include "lp/cli/commands.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "lp/candgen.hpp"
#include "lp/cli/golden.hpp"
#include "lp/cli/manifest.hpp"
#include "lp/cli/pipeline.hpp"
#include "lp/cli/reproduce.hpp"
#include "lp/counter_rng.hpp"
#include "lp/decompress.hpp"
#include "lp/diophantine.hpp"
#include "lp/grouptools.hpp"
#include "lp/seqcore.hpp"
#include "lp/seqio.hpp"

namespace lp::cli {

using nlohmann::json;

namespace {

std::string rational_str(const Rational& q) { return q.str(); }

json psd_exact_json(const PsdExact& p) {
  return {{"rat", rational_str(p.rat)}, {"coef", rational_str(p.coef)}, {"value", p.to_double()}};
}

std::string psd_exact_text(const PsdExact& p) {
  std::ostringstream s;
  const bool neg = p.coef < 0;
  s << rational_str(p.rat) << (neg ? " - " : " + ") << rational_str(neg ? Rational(-p.coef) : p.coef)
    << "*sqrt(5)";
  s.precision(12);
  s << "  (" << p.to_double() << ")";
  return s.str();
}

std::vector<int> to_vec(std::span<const int> s) { return {s.begin(), s.end()}; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
  if (!f) throw UsageError("failed writing " + path);
}

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

std::string pair_text(const PmOneSequence& a, const PmOneSequence& b) {
  return format_sequence(a.entries()) + "\n" + format_sequence(b.entries()) + "\n";
}

BigInt parse_big(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw UsageError("not a non-negative integer: '" + text + "'");
  }
  return BigInt(text);
}

BigInt json_big(const json& j) {
  if (j.is_string()) return parse_big(j.get<std::string>());
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    return BigInt(j.get<std::uint64_t>());
  }
  throw UsageError("rank must be a non-negative integer or a decimal string");
}

json codes_json(const SelectionCodes& codes) {
  json j = json::object();
  for (const auto& [size, code] : codes) {
    j[std::to_string(size)] = {{"universe", code.universe}, {"k", code.subset_size}, {"rank", code.rank.str()}};
  }
  return j;
}

std::pair<PmOneSequence, PmOneSequence> read_two(const VerifyOptions& opts) {
  const auto first = read_sequence_file(opts.file_a);
  if (opts.file_b.empty()) {
    if (first.size() != 2) {
      throw UsageError(opts.file_a + ": expected two sequences, found " + std::to_string(first.size()));
    }
    return {PmOneSequence(first[0]), PmOneSequence(first[1])};
  }
  const auto second = read_sequence_file(opts.file_b);
  if (first.size() != 1 || second.size() != 1) throw UsageError("each file must hold exactly one sequence");
  return {PmOneSequence(first[0]), PmOneSequence(second[0])};
}

// Magnitude counts from the two identities sum(c) = 2d and
// sum(c * mag^2) = 2l + 2 - 2m, when only two magnitudes are possible.
std::map<int, int> derive_counts(int ell, int factor) {
  std::vector<int> mags;
  for (int v = factor % 2; v <= factor; v += 2) mags.push_back(v);
  if (mags.size() != 2) {
    throw UsageError("magnitude counts are not determined for m = " + std::to_string(factor) + "; pass --counts");
  }
  const long long d = ell / factor;
  const long long lo = mags[0] * mags[0];
  const long long hi = mags[1] * mags[1];
  const long long energy = 2LL * ell + 2 - 2LL * factor;
  const long long num = energy - 2 * d * lo;
  if (num < 0 || num % (hi - lo) != 0) throw UsageError("no integral magnitude counts for this (l, m)");
  const long long c_hi = num / (hi - lo);
  if (c_hi > 2 * d) throw UsageError("no feasible magnitude counts for this (l, m)");
  return {{mags[0], static_cast<int>(2 * d - c_hi)}, {mags[1], static_cast<int>(c_hi)}};
}

json candidate_json(const CandidatePair& c) {
  json j{{"a", to_vec(c.a.entries())}, {"b", to_vec(c.b.entries())}};
  j["x"] = c.x ? json(*c.x) : json(nullptr);
  return j;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    const auto b = token.find_first_not_of(" \t[]");
    const auto e = token.find_last_not_of(" \t[]");
    if (b == std::string::npos) throw UsageError("empty element in list '" + text + "'");
    token = token.substr(b, e - b + 1);
    try {
      std::size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError("not an integer: '" + token + "'");
    }
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out) {
  const auto [a, b] = read_two(opts);
  const VerificationReport r = verify_legendre_pair(a, b);
  const std::size_t ell = a.size();
  if (opts.json) {
    json j{{"ell", ell}, {"is_legendre_pair", r.is_legendre_pair}};
    j["failing_shift"] = r.failing_shift ? json(*r.failing_shift) : json(nullptr);
    j["x"] = r.x_value ? json(*r.x_value) : json(nullptr);
    j["n1_n2"] = r.n1_n2 ? json::array({r.n1_n2->first, r.n1_n2->second}) : json(nullptr);
    if (r.psd_at_m) {
      j["psd_at_m"] = {{"a", psd_exact_json(r.psd_at_m->first)}, {"b", psd_exact_json(r.psd_at_m->second)}};
      const auto m = ell / 5;
      j["psd_at_m_float"] = {psd(a.normalized().entries(), m), psd(b.normalized().entries(), m)};
    } else {
      j["psd_at_m"] = nullptr;
    }
    out << j.dump(2) << '\n';
  } else {
    out << "length: " << ell << '\n';
    out << "legendre pair: " << (r.is_legendre_pair ? "yes" : "no") << '\n';
    if (r.failing_shift) out << "failing shift: " << *r.failing_shift << '\n';
    if (r.x_value) out << "x: " << *r.x_value << '\n';
    if (r.n1_n2) out << "n1/n2: " << r.n1_n2->first << "/" << r.n1_n2->second << '\n';
    if (r.psd_at_m) {
      const auto m = ell / 5;
      out.precision(12);
      out << "PSD_A(" << m << ") = " << psd_exact_text(r.psd_at_m->first) << "  dft "
          << psd(a.normalized().entries(), m) << '\n';
      out << "PSD_B(" << m << ") = " << psd_exact_text(r.psd_at_m->second) << "  dft "
          << psd(b.normalized().entries(), m) << '\n';
    }
  }
  return r.is_legendre_pair ? kOk : kNegative;
}

int cmd_compress(const std::string& file, int factor, bool as_json, std::ostream& out) {
  json arr = json::array();
  for (const auto& entries : read_sequence_file(file)) {
    const auto c = compress(PmOneSequence(entries), factor);
    if (as_json) {
      arr.push_back({{"entries", to_vec(c.entries())}, {"factor", factor}, {"original_length", entries.size()}});
    } else {
      out << format_sequence(c.entries()) << '\n';
    }
  }
  if (as_json) out << arr.dump() << '\n';
  return kOk;
}

int cmd_psd(const std::string& file, std::optional<int> k, bool as_json, std::ostream& out) {
  json arr = json::array();
  out.precision(12);
  for (const auto& entries : read_sequence_file(file)) {
    const PmOneSequence seq(entries);
    const std::size_t ell = seq.size();
    if (k && (*k < 0 || static_cast<std::size_t>(*k) >= ell)) {
      throw UsageError("k must lie in [0, " + std::to_string(ell) + ")");
    }
    std::vector<double> values;
    if (k) {
      values.push_back(psd(seq.entries(), static_cast<std::size_t>(*k)));
    } else {
      for (std::size_t i = 0; i < ell; ++i) values.push_back(psd(seq.entries(), i));
    }
    std::optional<PsdExact> exact;
    if (ell % 5 == 0) exact = psd_at_m_exact(compress(seq, static_cast<int>(ell / 5)));
    if (as_json) {
      json j{{"ell", ell}, {"psd", values}};
      if (k) j["k"] = *k;
      j["psd_at_m_exact"] = exact ? psd_exact_json(*exact) : json(nullptr);
      arr.push_back(j);
    } else {
      for (std::size_t i = 0; i < values.size(); ++i) {
        out << "PSD(" << (k ? static_cast<std::size_t>(*k) : i) << ") = " << values[i] << '\n';
      }
      if (exact) out << "PSD(" << ell / 5 << ") exact = " << psd_exact_text(*exact) << '\n';
    }
  }
  if (as_json) out << arr.dump(2) << '\n';
  return kOk;
}

int cmd_dioph(int m, bool as_json, std::ostream& out) {
  const auto sols = odd_five_squares(m);
  if (as_json) {
    json j{{"m", m}, {"target", 4 * m + 1}, {"solutions", json::array()}};
    for (const auto& s : sols) {
      j["solutions"].push_back({{"values", s.values}, {"admits_unit_sum", admits_unit_sum(s)}});
    }
    out << j.dump(2) << '\n';
  } else {
    for (const auto& s : sols) {
      out << s.values[0] << ',' << s.values[1] << ',' << s.values[2] << ',' << s.values[3] << ',' << s.values[4]
          << " admits_unit_sum=" << (admits_unit_sum(s) ? "true" : "false") << '\n';
    }
  }
  return sols.empty() ? kNegative : kOk;
}

int cmd_candidates(const CandidatesOptions& opts, std::ostream& out) {
  if (opts.factor < 1 || opts.ell < 1 || opts.ell % opts.factor != 0) {
    throw UsageError("--m must divide --ell");
  }
  const int d = opts.ell / opts.factor;
  std::vector<CandidatePair> cands;
  json meta = json::object();
  if (d == 5 && opts.counts.empty()) {
    if (opts.factor % 2 == 0) throw UsageError("the five-entry generator needs odd m");
    cands = candidates_d5(opts.factor, opts.x);
    meta["exhausted"] = true;
  } else {
    if (opts.x) throw UsageError("--x applies to l = 5m only");
    auto counts = opts.counts.empty() ? derive_counts(opts.ell, opts.factor) : opts.counts;
    GenerationProfile profile = make_profile(opts.ell, opts.factor, counts, opts.balanced);
    profile.budget = opts.budget;
    profile.seed = opts.seed;
    profile.validate();
    CandidateStream stream(profile);
    while (auto c = stream.next()) cands.push_back(std::move(*c));
    meta["exhausted"] = stream.exhausted();
    meta["nodes_visited"] = stream.nodes_visited();
    json jc = json::object();
    for (const auto& [mag, n] : counts) jc[std::to_string(mag)] = n;
    meta["abs_value_counts"] = jc;
  }
  json j{{"ell", opts.ell}, {"m", opts.factor}, {"pairs", json::array()}};
  for (const auto& c : cands) j["pairs"].push_back(candidate_json(c));
  for (auto& [k, v] : meta.items()) j[k] = v;
  const std::string text = j.dump() + "\n";
  if (opts.out.empty()) {
    out << text;
  } else {
    write_file(opts.out, text);
    out << "wrote " << cands.size() << " candidate pairs to " << opts.out << '\n';
  }
  return cands.empty() ? kNegative : kOk;
}

int cmd_decompress(const DecompressOptions& opts, std::ostream& out) {
  const std::string raw = read_text(opts.candidates);
  const json in = parse_json(raw, opts.candidates);
  const int ell = in.at("ell").get<int>();
  const int factor = in.at("m").get<int>();
  if (opts.ell != 0 && opts.ell != ell) {
    throw UsageError("--ell " + std::to_string(opts.ell) + " does not match the candidate file (" +
                     std::to_string(ell) + ")");
  }
  ManifestRecorder rec(command_line(), opts.seed);
  rec.add_input("candidates", opts.candidates);

  std::string text;
  json xs = json::array();
  json codes = json::array();
  std::uint64_t nodes = 0;
  bool exhausted = true;
  std::size_t found_count = 0;
  const auto& list = in.at("pairs");
  for (std::size_t i = 0; i < list.size(); ++i) {
    CandidatePair cand{CompressedSequence(list[i].at("a").get<std::vector<int>>(), factor),
                       CompressedSequence(list[i].at("b").get<std::vector<int>>(), factor), ell, factor,
                       std::nullopt};
    SearchConfig cfg;
    cfg.budget_nodes = opts.budget;
    cfg.seed = counter_hash(opts.seed, 0x63616e64ULL, i);
    cfg.jobs = opts.jobs;
    if (opts.max_solutions) cfg.max_solutions = opts.max_solutions - found_count;
    const SearchResult r = uncompress_search(ell, cand, cfg);
    nodes += r.nodes_visited;
    exhausted = exhausted && r.exhausted;
    for (const auto& p : r.pairs) {
      text += pair_text(p.a, p.b);
      const auto rep = verify_legendre_pair(p.a, p.b);
      xs.push_back(rep.x_value ? json(*rep.x_value) : json(nullptr));
      codes.push_back(nullptr);
      ++found_count;
    }
    if (opts.max_solutions && found_count >= opts.max_solutions) {
      if (i + 1 < list.size()) exhausted = false;
      break;
    }
  }
  rec.add_result("pairs", text);
  json side{{"codes", codes},       {"x", xs},
            {"nodes_visited", nodes}, {"exhausted", exhausted},
            {"pairs_found", found_count}, {"manifest", rec.finish().to_json()}};
  if (opts.out.empty()) {
    out << text;
  } else {
    write_file(opts.out, text);
    write_file(opts.out + ".json", side.dump(2) + "\n");
    out << side.dump(2) << '\n';
  }
  return found_count ? kOk : kNegative;
}

int cmd_search_orbit(const SearchOrbitOptions& opts, std::ostream& out) {
  SearchConfig cfg;
  cfg.strategy = SearchStrategy::orbit_restricted;
  cfg.subgroup_generators = opts.generators;
  cfg.ones_orbits = opts.ones;
  cfg.twos_orbits = opts.twos;
  cfg.budget_nodes = opts.budget;
  cfg.seed = opts.seed;
  cfg.jobs = opts.jobs;
  cfg.balanced_prefilter = opts.balanced_prefilter;
  ManifestRecorder rec(command_line(), opts.seed);
  if (opts.include_golden) {
    const Ell85Golden g = golden_ell85();
    if (g.ell != opts.ell || g.generators != opts.generators || g.ones != opts.ones || g.twos != opts.twos) {
      throw UsageError("--include-golden needs --ell 85 --gen 69 --ones 12 --twos 15");
    }
    for (const auto& [a, b] : g.code_pairs) {
      cfg.include_selections.push_back(a);
      cfg.include_selections.push_back(b);
    }
    rec.add_input("golden/ell85.json", data_dir() / "golden" / "ell85.json");
  }
  const SearchResult r = orbit_search(opts.ell, cfg);

  std::string text;
  json xs = json::array();
  json codes = json::array();
  for (const auto& p : r.pairs) {
    text += pair_text(p.a, p.b);
    const auto rep = verify_legendre_pair(p.a, p.b);
    xs.push_back(rep.x_value ? json(*rep.x_value) : json(nullptr));
    codes.push_back(p.codes ? json::array({codes_json(p.codes->first), codes_json(p.codes->second)}) : json(nullptr));
  }
  rec.add_result("pairs", text);
  const OrbitTable table = orbits(opts.ell, opts.generators);
  const BigInt space = binomial(static_cast<int>(table.orbits_of_size(1).size()), opts.ones) *
                       binomial(static_cast<int>(table.orbits_of_size(2).size()), opts.twos);
  json side{{"codes", codes},
            {"x", xs},
            {"nodes_visited", r.nodes_visited},
            {"exhausted", r.exhausted},
            {"search_space", space.str()},
            {"manifest", rec.finish().to_json()}};
  if (opts.out.empty()) {
    out << text;
  } else {
    write_file(opts.out, text);
    write_file(opts.out + ".json", side.dump(2) + "\n");
    out << side.dump(2) << '\n';
  }
  return r.pairs.empty() ? kNegative : kOk;
}

int cmd_orbits(int ell, const std::vector<int>& generators, bool as_json, std::ostream& out) {
  const OrbitTable t = orbits(ell, generators);
  if (as_json) {
    json by_size = json::object();
    for (const auto& [size, list] : t.orbits_by_size) by_size[std::to_string(size)] = list;
    out << json{{"ell", ell},
                {"generators", generators},
                {"subgroup_order", t.subgroup_order()},
                {"orbit_count", t.orbit_count()},
                {"orbits_by_size", by_size}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "subgroup order " << t.subgroup_order() << ", " << t.orbit_count() << " orbits\n";
  for (const auto& [size, list] : t.orbits_by_size) {
    out << list.size() << " orbits of size " << size << '\n';
    for (std::size_t i = 0; i < list.size(); ++i) {
      out << "  " << i + 1 << ": {";
      for (std::size_t j = 0; j < list[i].size(); ++j) out << (j ? "," : "") << list[i][j];
      out << "}\n";
    }
  }
  return kOk;
}

int cmd_rank(int universe, const std::vector<int>& subset, std::ostream& out) {
  out << lex_rank(universe, subset).str() << '\n';
  return kOk;
}

int cmd_unrank(int universe, int subset_size, const std::string& rank, std::ostream& out) {
  const auto subset = lex_unrank(universe, subset_size, parse_big(rank));
  for (std::size_t i = 0; i < subset.size(); ++i) out << (i ? "," : "") << subset[i];
  out << '\n';
  return kOk;
}

int cmd_decode_pair(int ell, const std::vector<int>& generators, const std::string& codes_arg, std::ostream& out) {
  const std::string text =
      !codes_arg.empty() && (codes_arg.front() == '[' || codes_arg.front() == '{') ? codes_arg : read_text(codes_arg);
  const json j = parse_json(text, "--codes");
  const OrbitTable table = orbits(ell, generators);

  std::optional<int> ones;
  std::optional<int> twos;
  json sides;
  if (j.is_object()) {
    if (j.contains("ones")) ones = j.at("ones").get<int>();
    if (j.contains("twos")) twos = j.at("twos").get<int>();
    sides = json::array({j.at("a"), j.at("b")});
  } else {
    sides = j;
  }
  if (!sides.is_array() || sides.size() != 2) throw UsageError("--codes must hold two selection codes");
  if (!ones || !twos) {
    const Ell85Golden g = golden_ell85();
    if (g.ell != ell || g.generators != generators) {
      throw UsageError("--codes must give \"ones\" and \"twos\" subset sizes for this length");
    }
    ones = g.ones;
    twos = g.twos;
  }
  const auto decode = [&](const json& code) {
    if (!code.is_array() || code.size() != 2) throw UsageError("a selection code is [ones rank, twos rank]");
    const SelectionCodes sel{
        {1, LexRankCode{static_cast<int>(table.orbits_of_size(1).size()), *ones, json_big(code[0])}},
        {2, LexRankCode{static_cast<int>(table.orbits_of_size(2).size()), *twos, json_big(code[1])}},
    };
    return sequence_from_block(block_from_codes(table, sel));
  };
  const PmOneSequence a = decode(sides[0]);
  const PmOneSequence b = decode(sides[1]);
  out << pair_text(a, b);
  const auto rep = verify_legendre_pair(a, b);
  out << "# legendre pair: " << (rep.is_legendre_pair ? "yes" : "no");
  if (rep.x_value) out << ", x = " << *rep.x_value;
  out << '\n';
  return kOk;
}

int cmd_reproduce(const std::string& section, bool as_json, std::ostream& out) {
  std::vector<std::string> sections;
  if (section == "all") {
    sections = reproduce_sections();
  } else if (std::find(reproduce_sections().begin(), reproduce_sections().end(), section) !=
             reproduce_sections().end()) {
    sections = {section};
  } else {
    throw UsageError("unknown section '" + section + "'");
  }
  bool all_ok = true;
  json arr = json::array();
  for (const auto& s : sections) {
    const ReproduceReport r = reproduce(s);
    all_ok = all_ok && r.identical();
    if (as_json) {
      arr.push_back(r.to_json());
    } else {
      r.print(out);
    }
  }
  if (as_json) out << (arr.size() == 1 ? arr[0] : arr).dump(2) << '\n';
  return all_ok ? kOk : kNegative;
}

int cmd_pipeline(const PipelineCliOptions& opts, std::ostream& out, std::ostream& err) {
  PipelineOptions p;
  p.ell = opts.ell;
  if (opts.budget) p.budget_per_candidate = *opts.budget;
  p.seed = opts.seed;
  p.jobs = opts.jobs;
  p.max_pairs = opts.max_pairs;
  p.x_filter = opts.x;
  p.time_limit_seconds = opts.time_limit;
  ManifestRecorder rec(command_line(), opts.seed);
  if (!opts.profile.empty()) {
    const json pj = parse_json(read_text(opts.profile), opts.profile);
    rec.add_input("profile", opts.profile);
    const int ell = pj.at("ell").get<int>();
    if (p.ell == 0) p.ell = ell;
    if (p.ell != ell) throw UsageError("--ell does not match the profile");
    const int factor = pj.at("m").get<int>();
    std::map<int, int> counts;
    if (pj.contains("abs_value_counts")) {
      for (const auto& [mag, n] : pj.at("abs_value_counts").items()) counts[std::stoi(mag)] = n.get<int>();
    } else {
      counts = derive_counts(ell, factor);
    }
    GenerationProfile prof = make_profile(ell, factor, counts, pj.value("balanced", false));
    if (pj.contains("candidate_budget")) prof.budget = pj.at("candidate_budget").get<std::uint64_t>();
    prof.seed = opts.seed;
    prof.validate();
    p.profile = std::move(prof);
  }

  std::ofstream file;
  if (!opts.out.empty()) {
    file.open(opts.out, std::ios::binary);
    if (!file) throw UsageError("cannot write " + opts.out);
  }
  std::ostream& pairs_out = opts.out.empty() ? out : file;
  std::string text;
  const PipelineResult res = run_pipeline(p, [&](const PipelinePair& pp) {
    const std::string t = pair_text(pp.pair.a, pp.pair.b);
    text += t;
    pairs_out << t << std::flush;
  });
  rec.add_result("pairs", text);

  json summary{{"ell", p.ell},
               {"dioph_solutions", res.dioph_solutions},
               {"candidates", res.candidates.size()},
               {"candidates_searched", res.candidates_searched},
               {"pairs", res.pairs.size()},
               {"nodes_visited", res.nodes_visited},
               {"exhausted", res.exhausted}};
  if (p.ell % 5 == 0) {
    summary["x_set"] = res.abs_x_set();
    summary["all_balanced"] = res.all_balanced();
  }
  summary["manifest"] = rec.finish().to_json();
  if (opts.out.empty()) {
    err << summary.dump(2) << '\n';
  } else {
    file.close();
    write_file(opts.out + ".json", summary.dump(2) + "\n");
    out << summary.dump(2) << '\n';
  }
  return res.pairs.empty() ? kNegative : kOk;
}

}  // namespace lp::cli
