// lp: Legendre pair search and verification.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lp/cli/commands.hpp"
#include "lp/cli/golden.hpp"
#include "lp/cli/manifest.hpp"

namespace {

using namespace lp::cli;

std::optional<std::set<std::int64_t>> x_set(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::set<std::int64_t> out;
  for (int v : parse_int_list(text)) out.insert(v < 0 ? -v : v);
  return out;
}

std::map<int, int> counts_of(const std::string& text) {
  std::map<int, int> out;
  if (text.empty()) return out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("--counts items look like 3:14");
    const auto mag = parse_int_list(item.substr(0, colon));
    const auto n = parse_int_list(item.substr(colon + 1));
    out[mag.at(0)] = n.at(0);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  set_command_line(std::vector<std::string>(argv, argv + argc));

  CLI::App app{"Legendre pair search: verification, compression, candidates, decompression, orbit search"};
  app.require_subcommand(1);
  std::string data;
  app.add_option("--data", data, "Directory holding golden/ (default: LP_DATA_DIR or the build-time path)");

  // verify
  VerifyOptions verify;
  auto* c_verify = app.add_subcommand("verify", "Check whether two sequences form a Legendre pair");
  c_verify->add_option("file_a", verify.file_a, "Sequence file (two lines if file_b is omitted)")->required();
  c_verify->add_option("file_b", verify.file_b, "Second sequence file");
  c_verify->add_flag("--json", verify.json);

  // compress
  std::string file;
  int factor = 0;
  bool as_json = false;
  auto* c_compress = app.add_subcommand("compress", "m-compress every sequence in a file");
  c_compress->add_option("file", file)->required();
  c_compress->add_option("--m", factor, "Compression factor")->required();
  c_compress->add_flag("--json", as_json);

  // psd
  std::optional<int> k;
  auto* c_psd = app.add_subcommand("psd", "Power spectral density of each sequence in a file");
  c_psd->add_option("file", file)->required();
  c_psd->add_option("--k", k, "Single frequency index");
  c_psd->add_flag("--json", as_json);

  // dioph
  int m = 0;
  auto* c_dioph = app.add_subcommand("dioph", "All-odd five-square representations of 4m+1");
  c_dioph->add_option("-m,--m", m)->required();
  c_dioph->add_flag("--json", as_json);

  // candidates
  CandidatesOptions cand;
  std::string x_text;
  std::string counts_text;
  std::optional<std::uint64_t> budget;
  auto* c_cand = app.add_subcommand("candidates", "Enumerate candidate compressed pairs");
  c_cand->add_option("--ell", cand.ell)->required();
  c_cand->add_option("--m", cand.factor, "Compression factor")->required();
  c_cand->add_flag("--balanced", cand.balanced, "Split every magnitude count evenly between the sides");
  c_cand->add_option("--x", x_text, "Allowed |x| values, comma separated (l = 5m)");
  c_cand->add_option("--counts", counts_text, "Magnitude counts across both sides, e.g. 3:14,1:44");
  c_cand->add_option("--budget", budget, "Search node budget");
  c_cand->add_option("--seed", cand.seed);
  c_cand->add_option("--out", cand.out, "Output JSON file");

  // decompress
  DecompressOptions dec;
  auto* c_dec = app.add_subcommand("decompress", "Recover +-1 pairs from candidate compressions");
  c_dec->add_option("--ell", dec.ell);
  c_dec->add_option("--candidates", dec.candidates, "Candidate JSON file")->required();
  c_dec->add_option("--budget", dec.budget, "Node budget per candidate");
  c_dec->add_option("--seed", dec.seed);
  c_dec->add_option("--jobs", dec.jobs, "Worker threads (0: all cores; capped by LP_THREADS)");
  c_dec->add_option("--max-solutions", dec.max_solutions);
  c_dec->add_option("--out", dec.out, "Found pairs; a JSON sidecar is written next to it");

  // search-orbit
  SearchOrbitOptions so;
  std::string gens_text;
  bool no_prefilter = false;
  auto* c_so = app.add_subcommand("search-orbit", "Search sequences constant on multiplier orbits");
  c_so->add_option("--ell", so.ell)->required();
  c_so->add_option("--gen", gens_text, "Subgroup generators, comma separated")->required();
  c_so->add_option("--ones", so.ones, "Number of size-1 orbits per block")->required();
  c_so->add_option("--twos", so.twos, "Number of size-2 orbits per block")->required();
  c_so->add_option("--seed", so.seed);
  c_so->add_option("--budget", so.budget, "Selections to evaluate");
  c_so->add_option("--jobs", so.jobs);
  c_so->add_flag("--include-golden", so.include_golden, "Evaluate the reference selections first");
  c_so->add_flag("--no-prefilter", no_prefilter, "Skip the balanced-compression filter");
  c_so->add_option("--out", so.out);

  // orbits
  int ell = 0;
  auto* c_orbits = app.add_subcommand("orbits", "Orbits of a multiplier subgroup on Z_l \\ {0}");
  c_orbits->add_option("--ell", ell)->required();
  c_orbits->add_option("--gen", gens_text)->required();
  c_orbits->add_flag("--json", as_json);

  // rank / unrank
  int universe = 0;
  int subset_size = 0;
  std::string set_text;
  std::string rank_text;
  auto* c_rank = app.add_subcommand("rank", "Lexicographic rank of a k-subset of {1..N}");
  c_rank->add_option("-N", universe)->required();
  c_rank->add_option("--set", set_text, "Ascending subset, comma separated")->required();
  auto* c_unrank = app.add_subcommand("unrank", "k-subset of {1..N} with a given lexicographic rank");
  c_unrank->add_option("-N", universe)->required();
  c_unrank->add_option("-k", subset_size)->required();
  c_unrank->add_option("-r", rank_text)->required();

  // decode-pair
  std::string codes;
  auto* c_decode = app.add_subcommand("decode-pair", "Decode orbit selection codes into a sequence pair");
  c_decode->add_option("--ell", ell)->required();
  c_decode->add_option("--gen", gens_text)->required();
  c_decode->add_option("--codes", codes, "JSON text or file: [[ones, twos], [ones, twos]]")->required();

  // reproduce
  std::string section;
  auto* c_repro = app.add_subcommand("reproduce", "Compare computed values with the golden data");
  c_repro->add_option("section", section, "dioph-all | ell85-decode | ell87-verify | table1-small | all")->required();
  c_repro->add_flag("--json", as_json);

  // pipeline
  PipelineCliOptions pipe;
  auto* c_pipe = app.add_subcommand("pipeline", "dioph -> candidates -> decompress");
  c_pipe->add_option("--ell", pipe.ell);
  c_pipe->add_option("--budget", pipe.budget, "Node budget per candidate (default: exhaustive)");
  c_pipe->add_option("--seed", pipe.seed);
  c_pipe->add_option("--jobs", pipe.jobs);
  c_pipe->add_option("--max-pairs", pipe.max_pairs);
  c_pipe->add_option("--x", x_text, "Allowed |x| values (l = 5m)");
  c_pipe->add_option("--profile", pipe.profile, "JSON profile {ell, m, abs_value_counts, balanced}");
  c_pipe->add_option("--time-limit", pipe.time_limit, "Seconds before no new candidate is started");
  c_pipe->add_option("--out", pipe.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (!data.empty()) set_data_dir(data);
    std::ostream& out = std::cout;
    if (*c_verify) return cmd_verify(verify, out);
    if (*c_compress) return cmd_compress(file, factor, as_json, out);
    if (*c_psd) return cmd_psd(file, k, as_json, out);
    if (*c_dioph) return cmd_dioph(m, as_json, out);
    if (*c_cand) {
      cand.x = x_set(x_text);
      cand.counts = counts_of(counts_text);
      cand.budget = budget;
      return cmd_candidates(cand, out);
    }
    if (*c_dec) return cmd_decompress(dec, out);
    if (*c_so) {
      so.generators = parse_int_list(gens_text);
      so.balanced_prefilter = !no_prefilter;
      return cmd_search_orbit(so, out);
    }
    if (*c_orbits) return cmd_orbits(ell, parse_int_list(gens_text), as_json, out);
    if (*c_rank) return cmd_rank(universe, parse_int_list(set_text), out);
    if (*c_unrank) return cmd_unrank(universe, subset_size, rank_text, out);
    if (*c_decode) return cmd_decode_pair(ell, parse_int_list(gens_text), codes, out);
    if (*c_repro) return cmd_reproduce(section, as_json, out);
    if (*c_pipe) {
      pipe.x = x_set(x_text);
      return cmd_pipeline(pipe, out, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
