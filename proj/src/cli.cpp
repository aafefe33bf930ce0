#include "goldbach/cli.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "goldbach/conjectures.hpp"
#include "goldbach/errors.hpp"
#include "goldbach/heuristics.hpp"
#include "goldbach/partitions.hpp"
#include "goldbach/statistics.hpp"
#include "goldbach/sweep.hpp"

namespace goldbach {

namespace {

namespace fs = std::filesystem;

std::string join(const std::vector<std::uint64_t>& values) {
  if (values.empty()) return "(empty)";
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + std::to_string(values[i]);
  return out;
}

std::string braced(const std::vector<std::uint64_t>& values) {
  return values.empty() ? "{}" : "{" + join(values) + "}";
}

struct CommonFlags {
  RunConfig config;
  std::string format = "csv";
  std::string cache_dir;
  std::uint64_t m = 0;
};

void add_limit(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("-N,--limit", f.config.limit, "Search limit N (inclusive)")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
}

void add_search_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("-M,--stage1-bound", f.config.stage1_bound, "Stage-1 bound M (default: adaptive in m)");
  cmd->add_option("--threads", f.config.threads, "Worker threads (0 = auto)");
  cmd->add_option("--cache-dir", f.cache_dir, std::string("Result cache directory (default: $") + kCacheDirEnv + ")");
  cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

void add_range_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--m", f.m, "Single even modulus (overrides --m-min/--m-max)");
  cmd->add_option("--m-min", f.config.m_min, "Smallest even modulus");
  cmd->add_option("--m-max", f.config.m_max, "Largest even modulus");
}

void finalize(CommonFlags& f) {
  f.config.format = parse_output_format(f.format);
  if (!f.cache_dir.empty()) {
    f.config.cache_dir = f.cache_dir;
  } else if (const char* env = std::getenv(kCacheDirEnv); env != nullptr && *env != '\0') {
    f.config.cache_dir = fs::path(env);
  }
  if (f.m != 0) {
    f.config.m_min = f.m;
    f.config.m_max = f.m;
  }
}

std::vector<std::uint64_t> modulus_range(const RunConfig& config) {
  if (config.m_min % 2 != 0 || config.m_max % 2 != 0 || config.m_min < 2) {
    throw ContractViolation(fmt::format("modulus range {}..{} must have even endpoints >= 2", config.m_min,
                                        config.m_max));
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = config.m_min; m <= config.m_max; m += 2) out.push_back(m);
  return out;
}

SweepOptions sweep_options(const RunConfig& config) {
  SweepOptions options;
  options.limit = config.limit;
  options.search.stage1_bound = config.stage1_bound;
  options.search.threads = config.threads;
  options.cache_dir = config.cache_dir;
  return options;
}

void report_warnings(const ModulusSweep& sweep, std::ostream& err) {
  for (const auto& w : sweep.warnings()) err << "warning: " << w << '\n';
}

std::vector<ModulusSummary> summaries_for(ModulusSweep& sweep, const std::vector<std::uint64_t>& moduli) {
  std::vector<ModulusSummary> out;
  for (auto m : moduli) out.push_back(summarize_modulus(sweep.sets_for(m), m));
  return out;
}

int cmd_exceptions(const CommonFlags& f, std::uint64_t a, std::uint64_t b, std::ostream& out, std::ostream& err) {
  const AdmissiblePair pair(a, b, f.m);
  const RunConfig& config = f.config;
  SearchConfig search{config.stage1_bound, config.threads};
  const std::uint64_t bound = resolve_stage1_bound(pair.m(), config.limit, search);

  // Sets are symmetric in (a, b); the a <= b orientation is the one computed
  // and cached, so its stage diagnostics are reported either way.
  const AdmissiblePair key = a <= b ? pair : pair.swapped();
  std::optional<ExceptionalSet> set;
  std::optional<ResultCache> cache;
  std::vector<std::string> warnings;
  if (config.cache_dir) {
    cache.emplace(*config.cache_dir);
    set = cache->load(key, config.limit, bound, &warnings);
  }
  if (!set) {
    set = exceptional_set(sieve_primes(config.limit), key, config.limit, search);
    if (cache) cache->store(*set);
  }
  set->pair = pair;
  for (const auto& w : warnings) err << "warning: " << w << '\n';

  // spot-check witness for the largest non-exception <= N in the class
  std::optional<PartitionWitness> witness;
  const auto& elements = set->elements;
  for (std::uint64_t n = pair.first_candidate() + (config.limit - pair.first_candidate()) / pair.m() * pair.m();
       pair.first_candidate() <= config.limit && n >= pair.first_candidate(); n -= pair.m()) {
    if (!std::binary_search(elements.begin(), elements.end(), n)) {
      witness = find_witness(n, pair);
      break;
    }
    if (n < pair.first_candidate() + pair.m()) break;
  }

  if (config.format == OutputFormat::json) {
    nlohmann::json j{{"a", a},
                     {"b", b},
                     {"m", f.m},
                     {"N", set->search_limit},
                     {"M", set->stage1_bound},
                     {"elements", set->elements},
                     {"stage1_survivors", set->stage1_survivors},
                     {"confirmed", set->confirmed}};
    if (witness) j["witness"] = {{"n", witness->n}, {"p", witness->p}, {"q", witness->q}};
    out << j.dump(2) << '\n';
  } else {
    out << fmt::format("E_{{{},{},{}}} up to N={} (stage-1 bound M={})\n", a, b, f.m, set->search_limit,
                       set->stage1_bound);
    out << join(set->elements) << '\n';
    out << "size: " << set->elements.size() << '\n';
    out << "stage1_survivors: " << set->stage1_survivors << '\n';
    if (witness) out << fmt::format("witness: {} = {} + {}\n", witness->n, witness->p, witness->q);
  }
  return exit_code::kSuccess;
}

int cmd_table1(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto moduli = modulus_range(config);
  ModulusSweep sweep(sweep_options(config));
  const auto rows = summaries_for(sweep, moduli);
  report_warnings(sweep, err);
  out << table1_document(rows, config.format);
  return exit_code::kSuccess;
}

int cmd_table2(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto moduli = modulus_range(config);
  ModulusSweep sweep(sweep_options(config));
  std::vector<EmptyPairCount> rows;
  for (auto m : moduli) rows.push_back(count_empty_pairs(sweep.sets_for(m), m));
  report_warnings(sweep, err);
  out << table2_document(rows, config.format);
  return exit_code::kSuccess;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  file << text;
  if (!file) throw IoError("failed writing '" + path.string() + "'");
}

int cmd_figures(const RunConfig& config, const std::string& out_dir, std::ostream& out, std::ostream& err) {
  const auto moduli = modulus_range(config);
  ModulusSweep sweep(sweep_options(config));
  const GrowthSeries series = growth_series(summaries_for(sweep, moduli));
  report_warnings(sweep, err);
  const std::string ext = config.format == OutputFormat::json ? ".json" : ".csv";
  const std::string fig1 = figure1_document(series, config.format);
  const std::string fig2 = figure2_document(series, config.format);
  if (!out_dir.empty()) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create '" + out_dir + "': " + ec.message());
    write_file(fs::path(out_dir) / ("figure1" + ext), fig1);
    write_file(fs::path(out_dir) / ("figure2" + ext), fig2);
    out << "wrote " << (fs::path(out_dir) / ("figure1" + ext)).string() << '\n';
    out << "wrote " << (fs::path(out_dir) / ("figure2" + ext)).string() << '\n';
  } else {
    out << fig1 << '\n' << fig2;
  }
  return exit_code::kSuccess;
}

struct VerifyLine {
  std::string label;
  std::vector<std::uint64_t> found;
  std::vector<std::uint64_t> stated;
  bool pass() const { return found == stated; }
};

int emit_verify(const std::string& target, std::uint64_t limit, const std::vector<VerifyLine>& lines,
                OutputFormat format, std::ostream& out) {
  bool all = true;
  for (const auto& l : lines) all = all && l.pass();
  if (format == OutputFormat::json) {
    nlohmann::json j{{"target", target}, {"N", limit}, {"pass", all}, {"items", nlohmann::json::array()}};
    for (const auto& l : lines) {
      j["items"].push_back({{"item", l.label}, {"violations", l.found}, {"stated", l.stated}, {"pass", l.pass()}});
    }
    out << j.dump(2) << '\n';
  } else {
    for (const auto& l : lines) {
      out << fmt::format("{} ({}) N={}: violations {} stated {} {}\n", target, l.label, limit, braced(l.found),
                         braced(l.stated), l.pass() ? "PASS" : "FAIL");
    }
  }
  return all ? exit_code::kSuccess : exit_code::kVerificationFailed;
}

int cmd_verify(const std::string& target, const RunConfig& config, std::uint64_t residue_vii, std::ostream& out,
               std::ostream& err) {
  if (target == "conj2" || target == "conj3" || target == "ternary") {
    if (target == "ternary" && config.limit < 7) throw ContractViolation("verify ternary needs --limit >= 7");
    const PrimeTable table = sieve_primes(config.limit);
    std::vector<VerifyLine> lines;
    if (target == "conj2") {
      for (auto c : {Mod4Case::i, Mod4Case::ii, Mod4Case::iii, Mod4Case::iv}) {
        lines.push_back({std::string(to_string(c)), verify_conjecture_mod4(table, c, config.limit),
                         stated_mod4_exceptions(c)});
      }
    } else if (target == "conj3") {
      for (const auto& claim : sample_claims(residue_vii)) {
        lines.push_back({claim.label, verify_conjecture_samples(table, claim, config.limit), claim.stated_exceptions});
      }
    } else {
      lines.push_back({"odd n > 5", verify_ternary(table, config.limit), {}});
    }
    return emit_verify(target, config.limit, lines, config.format, out);
  }
  if (target == "asy") {
    const auto moduli = modulus_range(config);
    ModulusSweep sweep(sweep_options(config));
    double best = 0;
    std::uint64_t best_m = 0;
    std::uint64_t best_e = 0;
    for (auto m : moduli) {
      if (m < 3) continue;  // ln 2 < 1 makes the normalisation meaningless at m = 2
      const auto s = summarize_modulus(sweep.sets_for(m), m);
      const double lg = std::log(static_cast<double>(m));
      const double ratio = static_cast<double>(s.all.largest) / (static_cast<double>(m * m) * lg * lg);
      if (ratio > best) {
        best = ratio;
        best_m = m;
        best_e = s.all.largest;
      }
    }
    report_warnings(sweep, err);
    if (config.format == OutputFormat::json) {
      out << nlohmann::json{{"target", "asy"}, {"N", config.limit}, {"max_ratio", best}, {"argmax_m", best_m},
                            {"E_max", best_e}}
                 .dump(2)
          << '\n';
    } else {
      out << fmt::format("asy N={} m={}..{}: max E_max(m)/(m^2 (ln m)^2) = {:.6f} at m={} (E_max={})\n", config.limit,
                         config.m_min, config.m_max, best, best_m, best_e);
    }
    return exit_code::kSuccess;
  }
  throw ContractViolation("unknown verify target '" + target + "' (expected conj2, conj3, ternary or asy)");
}

struct HeuristicFlags {
  double c = 1.0;
  double delta = 0.5;
  std::uint64_t seed = 1;
  std::uint64_t trials = 100'000;
};

int cmd_heuristic(const CommonFlags& f, const HeuristicFlags& h, std::ostream& out, std::ostream& err) {
  const std::uint64_t m = f.m;
  if (m == 0) throw ContractViolation("heuristic needs --m");
  const CouponModel model = make_coupon_model(m);
  const std::uint64_t n = std::max<std::uint64_t>(m * m, 4);
  const auto k = static_cast<std::uint64_t>(std::floor(g2_estimate(n)));
  const double tail = coupon_tail(model.r, k);
  const double simulated = simulate_coupon(model.r, k, h.trials, h.seed);
  const std::uint64_t model_limit = std::max<std::uint64_t>(std::min<std::uint64_t>(f.config.limit, 1'000'000), 10);
  const ExpectedLengthEstimate length = expected_exception_length(m, model_limit);

  std::optional<BoundPrediction> bounds;
  if (m >= 4) bounds = predict_bounds(m, h.c, h.delta);

  std::optional<ModulusSummary> observed;
  if (f.config.cache_dir) {
    ModulusSweep sweep(sweep_options(f.config));
    if (auto sets = sweep.cached_sets_for(m)) observed = summarize_modulus(*sets, m);
    report_warnings(sweep, err);
  }

  if (f.config.format == OutputFormat::json) {
    nlohmann::json j{{"m", m},
                     {"phi", totient(m)},
                     {"r", model.r},
                     {"alpha", model.alpha},
                     {"expected_wait", coupon_expected_wait(model.r)},
                     {"n", n},
                     {"k", k},
                     {"tail", tail},
                     {"simulated_tail", simulated},
                     {"trials", h.trials},
                     {"seed", h.seed},
                     {"model_expected_length", length.value},
                     {"model_tail_bound", length.tail_bound},
                     {"model_limit", model_limit}};
    if (bounds) {
      j["e_max_bound"] = bounds->e_max_bound;
      j["expected_length_bound"] = bounds->expected_length;
      j["c"] = h.c;
      j["delta"] = h.delta;
    }
    if (observed) {
      j["observed_L_avg"] = observed->all.average_length();
      j["observed_E_max"] = observed->all.largest;
    }
    out << j.dump(2) << '\n';
    return exit_code::kSuccess;
  }

  out << fmt::format("m: {}\nphi(m): {}\nr: {}\nalpha: {:.6f}\nE[W]: {}\n", m, totient(m), model.r, model.alpha,
                     coupon_expected_wait(model.r));
  out << fmt::format("n = m^2: {}\nk = floor(2n/(ln n)^2): {}\nP(W > k): {:.6g}\n", n, k, tail);
  out << fmt::format("simulated P(W > k): {:.6g} ({} trials, seed {})\n", simulated, h.trials, h.seed);
  if (bounds) {
    out << fmt::format("e_max_bound c m^2 (ln m)^2 (c={}): {:.3f}\n", h.c, bounds->e_max_bound);
    out << fmt::format("expected_length r^(1/delta)/(2m) (delta={}): {:.6g}\n", h.delta, bounds->expected_length);
  } else {
    out << "e_max_bound: n/a (m < 4)\nexpected_length: n/a (m < 4)\n";
  }
  out << fmt::format("model E[L(m)] (N={}): {:.6g} (tail <= {:.3g})\n", model_limit, length.value, length.tail_bound);
  if (observed) {
    out << fmt::format("observed L_avg: {} (N={})\nobserved E_max: {}\n",
                       format_ratio(observed->all.total, observed->all.pairs, 3, true), f.config.limit,
                       observed->all.largest);
  } else {
    out << "observed: not in cache\n";
  }
  return exit_code::kSuccess;
}

int cmd_survivors(const CommonFlags& f, std::ostream& out) {
  if (f.m == 0) throw ContractViolation("survivors needs --m");
  const PrimeTable table = sieve_primes(f.config.limit);
  const SearchConfig search{f.config.stage1_bound, f.config.threads};
  const SurvivorCensus census = stage1_survivor_census(table, f.m, f.config.limit, search);
  if (f.config.format == OutputFormat::json) {
    out << nlohmann::json{{"m", census.m},
                          {"N", census.limit},
                          {"M", census.stage1_bound},
                          {"ordered_incidents", census.ordered_incidents},
                          {"distinct_n", census.distinct_n},
                          {"unordered_incidents", census.unordered_incidents}}
               .dump(2)
        << '\n';
  } else {
    out << fmt::format("m={} N={} M={}\n", census.m, census.limit, census.stage1_bound);
    out << "ordered pairs, with multiplicity: " << census.ordered_incidents << '\n';
    out << "distinct n: " << census.distinct_n << '\n';
    out << "unordered pairs (a <= b), with multiplicity: " << census.unordered_incidents << '\n';
  }
  return exit_code::kSuccess;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exceptional sets for Goldbach partitions with primes in arithmetic progressions", "goldbach-ap"};
  app.require_subcommand(1);

  CommonFlags f;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::string target;
  std::string out_dir;
  std::uint64_t residue_vii = 7;
  HeuristicFlags h;

  auto* exceptions = app.add_subcommand("exceptions", "Exceptional set E_{a,b,m} up to N");
  exceptions->add_option("--a", a, "Residue of p")->required();
  exceptions->add_option("--b", b, "Residue of q")->required();
  exceptions->add_option("--m", f.m, "Even modulus")->required();
  add_limit(exceptions, f);
  add_search_flags(exceptions, f);

  auto* table1 = app.add_subcommand("table1", "Per-modulus summary statistics (13 columns)");
  auto* table2 = app.add_subcommand("table2", "Ordered pairs with empty exceptional set");
  auto* figures = app.add_subcommand("figures", "Plot data: E_max vs phi(m), E_max vs growth curves");
  figures->add_option("--out-dir", out_dir, "Write figure1/figure2 files here instead of stdout");
  for (auto* cmd : {table1, table2, figures}) {
    add_limit(cmd, f);
    add_range_flags(cmd, f);
    add_search_flags(cmd, f);
  }

  auto* verify = app.add_subcommand("verify", "Check conjectured exception lists");
  verify->add_option("target", target, "conj2 | conj3 | ternary | asy")->required();
  verify->add_option("--a", residue_vii, "Residue mod 60 for claim (vii) of conj3");
  add_limit(verify, f);
  add_range_flags(verify, f);
  add_search_flags(verify, f);

  auto* heuristic = app.add_subcommand("heuristic", "Coupon-collector model quantities for one modulus");
  heuristic->add_option("--m", f.m, "Even modulus")->required();
  heuristic->add_option("--c", h.c, "Constant c in c m^2 (ln m)^2");
  heuristic->add_option("--delta", h.delta, "Exponent delta in (0,1)");
  heuristic->add_option("--seed", h.seed, "Seed for the Monte Carlo check");
  heuristic->add_option("--trials", h.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
  add_limit(heuristic, f);
  add_search_flags(heuristic, f);

  auto* survivors = app.add_subcommand("survivors", "Stage-1 survivor counts for one modulus");
  survivors->add_option("--m", f.m, "Even modulus")->required();
  add_limit(survivors, f);
  add_search_flags(survivors, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  }

  try {
    finalize(f);
    if (f.config.limit < 2) throw ContractViolation("--limit must be >= 2");
    if (*exceptions) return cmd_exceptions(f, a, b, out, err);
    if (*table1) return cmd_table1(f.config, out, err);
    if (*table2) return cmd_table2(f.config, out, err);
    if (*figures) return cmd_figures(f.config, out_dir, out, err);
    if (*verify) return cmd_verify(target, f.config, residue_vii, out, err);
    if (*heuristic) return cmd_heuristic(f, h, out, err);
    if (*survivors) return cmd_survivors(f, out);
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kIo;
  }
  return exit_code::kUsage;
}

}  // namespace goldbach
