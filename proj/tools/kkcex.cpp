// kkcex: exact construction and certification of the Kahn--Kalai point sets
// that refute Borsuk's conjecture. Every number printed is computed in exact
// integer/rational arithmetic; decimals are correctly rounded renderings.
//
// Exit codes: 0 pass, 1 verification failure, 2 invalid usage, 3 resource
// cap or search budget exceeded.

#include "kk/bounds.hpp"
#include "kk/construction.hpp"
#include "kk/exact.hpp"
#include "kk/oracle.hpp"
#include "kk/serialize.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace kk;

void print_json(const Json& j) { std::cout << render_json(j); }

std::string prime_power_note(const Params& p) {
  if (p.prime_power) {
    return "yes (" + std::to_string(p.prime_power->base) + "^" +
           std::to_string(p.prime_power->exponent) + ")";
  }
  return "no";
}

void print_lines(const std::vector<std::string>& lines, const char* label) {
  for (const std::string& line : lines) std::cout << label << ": " << line << "\n";
}

int finish_report(const VerificationReport& rep, bool json, bool inconclusive) {
  if (json) {
    print_json(to_json(rep));
  } else {
    std::cout << "suite " << rep.suite << "  k = " << rep.k << "\n";
    for (const auto& [name, value] : rep.counters) {
      std::cout << "  " << name << " = " << value << "\n";
    }
    print_lines(rep.witnesses, "witness");
    print_lines(rep.warnings, "warning");
    std::cout << (rep.pass ? "pass" : "FAIL") << " (" << std::fixed
              << std::setprecision(3) << rep.elapsed_seconds << " s)\n";
  }
  if (inconclusive) return 3;
  return rep.pass ? 0 : 1;
}

int run_params(std::uint64_t k, bool json) {
  const Params p = make_params(k);
  if (json) {
    print_json(to_json(p));
    return 0;
  }
  std::cout << "k = " << p.k << "\n"
            << "m = 4k = " << p.m << "\n"
            << "|W| = C(m,2) = " << p.w_size << "\n"
            << "d = |W| - 1 = " << p.d << "\n"
            << "k prime power: " << prime_power_note(p) << "\n"
            << "|K| = C(m,2k)/2 = " << div_exact(binomial(p.m, 2 * k), 2).str()
            << "\n";
  return 0;
}

int run_q(std::uint64_t k, unsigned digits, bool json) {
  const QReport rep = q_exact(k, digits);
  if (json) {
    print_json(to_json(rep));
    return 0;
  }
  const Params p = make_params(k);
  std::cout << "k = " << k << "\n"
            << "d = " << p.d << "\n"
            << "q = " << to_fraction(rep.q) << " ~= " << rep.decimal << "\n"
            << "formulas agree: half-binomial-ratio, doubled-central-ratio, "
               "shifted-central-ratio, product-ratio\n"
            << "sandwich 2*(3/2)^k <= q <= 2*(2-1/(k+1))^k: holds\n";
  print_lines(rep.warnings, "warning");
  return 0;
}

int run_range(std::uint64_t k, bool json) {
  const RangeReport rep = counterexample_range(k);
  if (json) {
    print_json(to_json(rep));
    return 0;
  }
  std::cout << "k = " << rep.k << "   d = " << rep.d << "   q ~= "
            << to_decimal(rep.q, 2) << "\n";
  if (rep.is_counterexample) {
    std::cout << "Counterexample for " << rep.d_low->str() << " <= d <= "
              << rep.d_high->str() << "\n";
  } else {
    std::cout << "Point set not verified as counterexample\n";
  }
  print_lines(rep.warnings, "warning");
  return 0;
}

int run_plan(std::uint64_t target, bool json) {
  const CoverPlan plan = plan_cover(target);
  if (json) {
    print_json(to_json(plan));
    return 0;
  }
  std::cout << "target d = " << plan.target_dim << "\n";
  if (plan.chosen_k) {
    std::cout << "smallest certifying prime power k = " << *plan.chosen_k
              << ", range " << plan.certifying_range->first.str() << ".."
              << plan.certifying_range->second.str() << "\n";
  } else {
    std::cout << "no prime power certifies d = " << plan.target_dim
              << " by this method\n";
  }
  return 0;
}

int run_chain(std::uint64_t max_k, std::uint64_t start_dim,
              const std::vector<std::uint64_t>& bridge, bool json) {
  const ChainReport rep = verify_chain(max_k, start_dim, bridge);
  if (json) {
    print_json(to_json(rep));
    return rep.pass ? 0 : 1;
  }
  std::cout << "chain to k = " << rep.k_max << ", start d = " << rep.start_dim
            << "\n";
  for (const ChainLink& link : rep.links) {
    std::cout << "  k=" << link.k << " -> k=" << link.next_k
              << ": certified through " << link.certified_high.str() << " vs next "
              << link.next_low.str() << " (" << link.certificate << ") "
              << (link.ok ? "ok" : "GAP") << "\n";
  }
  for (const DoublingRatioCheck& check : rep.ratio_checks) {
    std::cout << "  ratio (3/2)^k / C(8k,2) at k=" << check.k
              << " doubling: " << (check.increased ? "increased" : "DECREASED")
              << "\n";
  }
  std::cout << rep.summary << "\n" << (rep.pass ? "pass" : "FAIL") << "\n";
  return rep.pass ? 0 : 1;
}

int run_spectrum(std::uint64_t k, bool brute, std::uint64_t cap_k, bool json) {
  const std::vector<SpectrumEntry> entries = spectrum_analytic(k);
  std::vector<SpectrumCount> census;
  bool match = true;
  if (brute) {
    census = spectrum_bruteforce(k, cap_k);
    match = census.size() == entries.size();
    for (std::size_t i = 0; match && i < census.size(); ++i) {
      match = census[i].dist_sq == entries[i].dist_sq &&
              ExactInt(census[i].count) == entries[i].count;
    }
  }
  if (json) {
    Json j = spectrum_to_json(k, entries);
    if (brute) {
      j["brute"] = to_json(census);
      j["match"] = match;
    }
    print_json(j);
    return match ? 0 : 1;
  }
  const Params p = make_params(k);
  std::cout << "k = " << k << "  |K| = " << div_exact(binomial(p.m, 2 * k), 2).str()
            << "  point pairs = " << total_point_pairs(k).str() << "\n";
  for (const SpectrumEntry& e : entries) {
    std::cout << "  p in {" << e.p_low;
    if (e.p_high != e.p_low) std::cout << "," << e.p_high;
    std::cout << "}: dist^2 = " << e.dist_sq << ", count = " << e.count.str();
    if (e.p_low == k) std::cout << "  (diameter)";
    std::cout << "\n";
  }
  if (brute) {
    std::cout << "brute-force census: " << (match ? "match" : "MISMATCH") << "\n";
    if (!match) {
      for (const SpectrumCount& c : census) {
        std::cout << "  observed dist^2 = " << c.dist_sq << ", count = " << c.count
                  << "\n";
      }
    }
  }
  return match ? 0 : 1;
}

int run_verify(const std::string& suite, std::uint64_t k, std::uint64_t cap_k,
               bool cap_set, std::uint64_t budget, std::uint64_t exact_cap,
               bool json) {
  if (suite == "identities") {
    return finish_report(
        verify_identities(k, cap_set ? cap_k : kDefaultPairwiseCapK), json, false);
  }
  if (suite == "diameter") {
    const DiameterCensus census =
        diameter_bruteforce(k, cap_set ? cap_k : kDefaultPairwiseCapK);
    return finish_report(census.report, json, false);
  }
  if (suite == "fw") {
    const FamilySearchResult res = max_conflict_free_family(k, budget, exact_cap);
    return finish_report(res.report, json,
                         res.status == SearchStatus::kInconclusive);
  }
  if (suite == "rank") {
    const RankResult res = affine_rank(k, cap_set ? cap_k : kDefaultRankCapK);
    return finish_report(res.report, json, false);
  }
  if (suite == "cover") {
    const CoverResult res = greedy_cover(k, cap_set ? cap_k : kDefaultPairwiseCapK);
    return finish_report(res.report, json, false);
  }
  std::cerr << "error: unknown suite \"" << suite << "\"\n";
  return 2;
}

int run_export(std::uint64_t k, const std::string& path, std::uint64_t cap_k,
               bool json) {
  const PointSet ps = enumerate_points(make_params(k), cap_k);
  write_pointset_file(path, ps);
  if (json) {
    Json j;
    j["type"] = "export";
    j["path"] = path;
    j["k"] = std::to_string(k);
    j["points"] = std::to_string(ps.points.size());
    print_json(j);
    return 0;
  }
  std::cout << "wrote " << ps.points.size() << " points to " << path
            << " (k=" << k << ", w=" << ps.params.w_size << ")\n";
  return 0;
}

int run_import(const std::string& path, bool json) {
  const PointSet ps = read_pointset_file(path);
  if (json) {
    Json j;
    j["type"] = "import";
    j["path"] = path;
    j["k"] = std::to_string(ps.params.k);
    j["points"] = std::to_string(ps.points.size());
    j["valid"] = true;
    print_json(j);
    return 0;
  }
  std::cout << path << ": valid kk-pointset v1, k=" << ps.params.k << ", "
            << ps.points.size() << " points\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "kkcex: exact Kahn--Kalai point sets, covering lower bounds, and "
      "brute-force verification suites"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable JSON output (no timestamps)");

  std::uint64_t params_k = 0;
  CLI::App* sub_params = app.add_subcommand("params", "derived parameters for k");
  sub_params->add_option("k", params_k, "premiss parameter, k >= 1")->required();

  std::uint64_t q_k = 0;
  unsigned digits = 2;
  CLI::App* sub_q = app.add_subcommand("q", "covering lower bound q(k), exact");
  sub_q->add_option("k", q_k, "premiss parameter, k >= 1")->required();
  sub_q->add_option("--digits", digits, "decimal digits after the point")
      ->check(CLI::Range(0u, kMaxDecimalDigits));

  std::uint64_t range_k = 0;
  CLI::App* sub_range =
      app.add_subcommand("range", "certified counterexample dimension range");
  sub_range->add_option("k", range_k, "premiss parameter, k >= 1")->required();

  std::uint64_t plan_d = 0;
  CLI::App* sub_plan =
      app.add_subcommand("plan", "smallest prime power k certifying a dimension");
  sub_plan->add_option("D", plan_d, "target dimension, D >= 1")
      ->required()
      ->check(CLI::PositiveNumber);

  std::uint64_t chain_max_k = 4096;
  std::uint64_t chain_start = 2015;
  std::vector<std::uint64_t> chain_bridge = {17};
  CLI::App* sub_chain =
      app.add_subcommand("chain", "verify gap-free coverage of all d >= start");
  sub_chain->add_option("--max-k", chain_max_k, "chain cap, power of two >= 32");
  sub_chain->add_option("--start-dim", chain_start, "first covered dimension");
  sub_chain->add_option("--bridge", chain_bridge,
                        "prime powers strictly between 16 and 32");

  std::uint64_t spectrum_k = 0;
  bool spectrum_brute = false;
  std::uint64_t spectrum_cap = kDefaultPairwiseCapK;
  CLI::App* sub_spectrum =
      app.add_subcommand("spectrum", "distance census of K, closed form");
  sub_spectrum->add_option("k", spectrum_k, "premiss parameter, k >= 1")->required();
  sub_spectrum->add_flag("--brute", spectrum_brute,
                         "cross-check against the exhaustive pairwise census");
  sub_spectrum->add_option("--cap-k", spectrum_cap, "brute-force cap on k");

  std::string verify_suite;
  std::uint64_t verify_k = 0;
  std::uint64_t verify_cap = 0;
  std::uint64_t verify_budget = kDefaultSearchBudget;
  std::uint64_t verify_exact_cap = kDefaultExactMisCapK;
  CLI::App* sub_verify = app.add_subcommand("verify", "run a verification suite");
  sub_verify
      ->add_option("suite", verify_suite,
                   "one of: identities, diameter, fw, rank, cover")
      ->required()
      ->check(CLI::IsMember({"identities", "diameter", "fw", "rank", "cover"}));
  sub_verify->add_option("k", verify_k, "premiss parameter, k >= 1")->required();
  CLI::Option* cap_opt =
      sub_verify->add_option("--cap-k", verify_cap, "override the suite's k cap");
  sub_verify->add_option("--budget", verify_budget,
                         "search node/comparison budget for the fw suite");
  sub_verify->add_option("--exact-cap", verify_exact_cap,
                         "largest k solved exactly by the fw suite");

  std::uint64_t export_k = 0;
  std::string export_path;
  std::uint64_t export_cap = kDefaultEnumerationCapK;
  CLI::App* sub_export =
      app.add_subcommand("export", "write the point set in kk-pointset v1 format");
  sub_export->add_option("k", export_k, "premiss parameter, k >= 1")->required();
  sub_export->add_option("--out", export_path, "output path")->required();
  sub_export->add_option("--cap-k", export_cap, "enumeration cap on k");

  std::string import_path;
  CLI::App* sub_import =
      app.add_subcommand("import", "re-read and validate a kk-pointset v1 file");
  sub_import->add_option("path", import_path, "file to validate")->required();

  // Let a trailing --json fall through to the parent from any subcommand.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sub_params->parsed()) return run_params(params_k, json);
    if (sub_q->parsed()) return run_q(q_k, digits, json);
    if (sub_range->parsed()) return run_range(range_k, json);
    if (sub_plan->parsed()) return run_plan(plan_d, json);
    if (sub_chain->parsed())
      return run_chain(chain_max_k, chain_start, chain_bridge, json);
    if (sub_spectrum->parsed())
      return run_spectrum(spectrum_k, spectrum_brute, spectrum_cap, json);
    if (sub_verify->parsed())
      return run_verify(verify_suite, verify_k, verify_cap, cap_opt->count() > 0,
                        verify_budget, verify_exact_cap, json);
    if (sub_export->parsed()) return run_export(export_k, export_path, export_cap, json);
    if (sub_import->parsed()) return run_import(import_path, json);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const kk::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const kk::PointsetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
