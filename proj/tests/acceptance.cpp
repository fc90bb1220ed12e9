// Acceptance gate for the kk-pointset deliverable. Each criterion prints
// exactly one PASS/FAIL line; the exit code is the number of failures.
//
// Numeric criteria are exact (zero tolerance); runtime budgets are pinned
// here in code next to the criterion they govern.
//
// Usage: acceptance <path-to-kkcex>

#include "kk/bounds.hpp"
#include "kk/construction.hpp"
#include "kk/exact.hpp"
#include "kk/oracle.hpp"
#include "kk/serialize.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

using namespace kk;

int g_failures = 0;
std::string g_kkcex;

void criterion(int number, const char* name, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_seconds > 0 && elapsed > budget_seconds) {
    ok = false;
    detail = "over budget";
  }
  if (!ok) ++g_failures;

  std::printf("%s  %2d. %s", ok ? "PASS" : "FAIL", number, name);
  if (budget_seconds > 0) {
    std::printf("  [%.3f s, budget %.0f s]", elapsed, budget_seconds);
  } else {
    std::printf("  [%.3f s]", elapsed);
  }
  if (!ok && !detail.empty()) std::printf("  -- %s", detail.c_str());
  std::printf("\n");
  std::fflush(stdout);
}

bool run_tool(const std::string& args, int expected_exit) {
  const std::string cmd = g_kkcex + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) && WEXITSTATUS(status) == expected_exit;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: acceptance <path-to-kkcex>\n");
    return 64;
  }
  g_kkcex = argv[1];

  criterion(1, "published table: d and q to two decimals at the seven k", 1.0,
            [](std::string& detail) {
              const std::vector<std::uint64_t> ks = {11, 13, 16, 17, 29, 31, 32};
              const std::vector<std::uint64_t> ds = {945,  1325, 2015, 2277,
                                                     6669, 7625, 8127};
              const std::vector<std::string> qs = {
                  "548.70",     "1561.91",     "7502.65",    "12659.44",
                  "6745998.54", "19209098.12", "32414445.61"};
              for (std::size_t i = 0; i < ks.size(); ++i) {
                if (make_params(ks[i]).d != ds[i]) {
                  detail = "d mismatch at k=" + std::to_string(ks[i]);
                  return false;
                }
                if (q_exact(ks[i]).decimal != qs[i]) {
                  detail = "q mismatch at k=" + std::to_string(ks[i]);
                  return false;
                }
              }
              return true;
            });

  criterion(2, "certified dimension ranges at k = 13, 16, 17; none at k = 11", 0,
            [](std::string& detail) {
              const auto expect = [&detail](std::uint64_t k, std::uint64_t low,
                                            std::uint64_t high) {
                const RangeReport r = counterexample_range(k);
                if (!r.is_counterexample || *r.d_low != ExactInt(low) ||
                    *r.d_high != ExactInt(high)) {
                  detail = "range mismatch at k=" + std::to_string(k);
                  return false;
                }
                return true;
              };
              if (!expect(13, 1325, 1560)) return false;
              if (!expect(16, 2015, 7501)) return false;
              if (!expect(17, 2277, 12658)) return false;
              const RangeReport r11 = counterexample_range(11);
              if (r11.is_counterexample || r11.d_low || r11.d_high) {
                detail = "k=11 must not certify a counterexample";
                return false;
              }
              return true;
            });

  criterion(3, "four formulas agree and the sandwich holds, k = 1..500", 10.0,
            [](std::string& detail) {
              for (std::uint64_t k = 1; k <= 500; ++k) {
                const QReport rep = q_exact(k);
                for (const ExactRatio& v : rep.formula_values) {
                  if (v != rep.q) {
                    detail = "formula disagreement at k=" + std::to_string(k);
                    return false;
                  }
                }
                ExactInt two_pow = 2;
                for (std::uint64_t i = 0; i < k; ++i) two_pow *= 2;
                if (!(rep.lower <= rep.q && rep.q <= rep.upper &&
                      rep.upper < ExactRatio(two_pow))) {
                  detail = "sandwich violated at k=" + std::to_string(k);
                  return false;
                }
              }
              return true;
            });

  criterion(4, "exhaustive identity sweep over all block pairs, k = 1, 2, 3", 120.0,
            [](std::string& detail) {
              for (std::uint64_t k = 1; k <= 3; ++k) {
                const VerificationReport rep = verify_identities(k);
                if (!rep.pass) {
                  detail = "identities failed at k=" + std::to_string(k) +
                           (rep.witnesses.empty() ? "" : ": " + rep.witnesses[0]);
                  return false;
                }
              }
              return true;
            });

  criterion(5, "brute-force diameter is 4k^2, attained exactly at p = k", 0,
            [](std::string& detail) {
              for (std::uint64_t k = 1; k <= 3; ++k) {
                const DiameterCensus census = diameter_bruteforce(k);
                if (census.diameter_sq != 4 * k * k || !census.report.pass) {
                  detail = "diameter census failed at k=" + std::to_string(k);
                  return false;
                }
              }
              return true;
            });

  criterion(6, "Frankl-Wilson at k = 2: exact maximum family is at most 14", 60.0,
            [](std::string& detail) {
              const FamilySearchResult res = max_conflict_free_family(2);
              if (res.status != SearchStatus::kExact) {
                detail = "search did not complete exactly";
                return false;
              }
              if (!(ExactInt(res.family_size) <= res.bound) || res.bound != 14 ||
                  !res.report.pass) {
                detail = "family size " + std::to_string(res.family_size) +
                         " vs bound " + res.bound.str();
                return false;
              }
              return true;
            });

  criterion(7, "closed-form spectrum equals the brute-force census, k = 1, 2, 3", 0,
            [](std::string& detail) {
              for (std::uint64_t k = 1; k <= 3; ++k) {
                const auto analytic = spectrum_analytic(k);
                const auto brute = spectrum_bruteforce(k);
                if (analytic.size() != brute.size()) {
                  detail = "class count differs at k=" + std::to_string(k);
                  return false;
                }
                for (std::size_t i = 0; i < brute.size(); ++i) {
                  if (brute[i].dist_sq != analytic[i].dist_sq ||
                      ExactInt(brute[i].count) != analytic[i].count) {
                    detail = "census mismatch at k=" + std::to_string(k);
                    return false;
                  }
                }
              }
              const auto s2 = spectrum_bruteforce(2);
              const bool pinned = s2.size() == 2 && s2[0] == SpectrumCount{12, 280} &&
                                  s2[1] == SpectrumCount{16, 315} &&
                                  total_point_pairs(2) == 595;
              if (!pinned) detail = "k=2 spectrum must be {12:280, 16:315} / 595";
              return pinned;
            });

  criterion(8, "affine rank of K stays within the ambient dimension d, k = 1, 2", 0,
            [](std::string& detail) {
              for (std::uint64_t k = 1; k <= 2; ++k) {
                const RankResult res = affine_rank(k);
                if (res.rank > res.d || !res.report.pass) {
                  detail = "rank " + std::to_string(res.rank) + " exceeds d=" +
                           std::to_string(res.d) + " at k=" + std::to_string(k);
                  return false;
                }
              }
              return true;
            });

  criterion(9, "greedy diameter-free cover needs at least q parts, k = 1, 2, 3", 0,
            [](std::string& detail) {
              for (std::uint64_t k = 1; k <= 3; ++k) {
                const CoverResult res = greedy_cover(k);
                if (!res.report.pass || ExactRatio(ExactInt(res.part_count)) < res.q) {
                  detail = "cover failed at k=" + std::to_string(k);
                  return false;
                }
                if (k == 2 && res.q != ExactRatio(5)) {
                  detail = "q at k=2 must be exactly 5";
                  return false;
                }
              }
              return true;
            });

  criterion(10, "ranges chain with no gap from 2015 through d(8192)", 30.0,
            [](std::string& detail) {
              const ChainReport rep = verify_chain(4096, 2015, {17});
              const std::vector<std::uint64_t> expected = {16,  17,   32,   64,  128,
                                                           256, 512, 1024, 2048, 4096};
              if (rep.ks != expected) {
                detail = "unexpected chain membership";
                return false;
              }
              for (const ChainLink& link : rep.links) {
                if (!link.ok ||
                    (link.certificate != "q-exact" && link.certificate != "lower-bound")) {
                  detail = "uncertified link at k=" + std::to_string(link.k);
                  return false;
                }
              }
              if (rep.links.back().next_k != 8192) {
                detail = "chain must extend through d(8192)";
                return false;
              }
              if (!rep.pass) detail = rep.summary;
              return rep.pass;
            });

  criterion(11, "pointset files round-trip for k <= 4; corruption exits 1", 0,
            [](std::string& detail) {
              for (std::uint64_t k = 1; k <= 4; ++k) {
                const PointSet original = enumerate_points(make_params(k));
                std::stringstream buf;
                write_pointset(buf, original);
                const PointSet reread = read_pointset(buf);
                if (reread.blocks != original.blocks ||
                    reread.points != original.points) {
                  detail = "round trip not lossless at k=" + std::to_string(k);
                  return false;
                }
              }

              const std::string path = "acceptance_pointset_k2.txt";
              if (!run_tool("export 2 --out " + path, 0)) {
                detail = "export via the tool failed";
                return false;
              }
              if (!run_tool("import " + path, 0)) {
                detail = "import of a valid file failed";
                return false;
              }
              std::ifstream is(path);
              std::string bytes((std::istreambuf_iterator<char>(is)),
                                std::istreambuf_iterator<char>());
              is.close();
              const auto at = bytes.find("\n") + 1;  // first point line
              bytes[at] = bytes[at] == '0' ? '1' : '0';  // flip one hex digit
              std::ofstream(path) << bytes;
              const bool rejected = run_tool("import " + path, 1);
              std::remove(path.c_str());
              if (!rejected) {
                detail = "corrupted file must be rejected with exit code 1";
                return false;
              }
              return true;
            });

  if (g_failures == 0) {
    std::printf("acceptance: all 11 criteria passed\n");
  } else {
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  }
  return g_failures;
}
