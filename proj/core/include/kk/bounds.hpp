#pragma once

// Exact computation of the covering lower bound
//
//     q = C(m,2k) / (2 C(m-1,k-1)),   m = 4k,
//
// its three equivalent forms, the analytic sandwich
// 2 (3/2)^k <= q <= 2 (2 - 1/(k+1))^k < 2^(k+1), the dimension ranges a
// given k certifies, the cover planner over prime powers, and the
// closed-form distance spectrum of K.

#include "kk/construction.hpp"
#include "kk/exact.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kk {

inline constexpr std::array<const char*, 4> kQFormulaNames = {
    "half-binomial-ratio",    // C(m,2k) / (2 C(m-1,k-1))
    "doubled-central-ratio",  // 2 C(3k,k) / C(2k,k)
    "shifted-central-ratio",  // C(3k,k) / C(2k-1,k-1)
    "product-ratio",          // prod(2k+1..3k) / prod(k..2k-1)
};

struct QReport {
  std::uint64_t k = 0;
  ExactRatio q;
  std::array<ExactRatio, 4> formula_values;  // named by kQFormulaNames
  ExactRatio lower;                          // 2 (3/2)^k
  ExactRatio upper;                          // 2 (2 - 1/(k+1))^k
  std::string decimal;
  std::vector<std::string> warnings;
};

// Evaluates all four formulas independently and cross-checks them, then
// checks the sandwich; any disagreement is a std::logic_error. A warning
// is recorded when k is not a prime power.
QReport q_exact(std::uint64_t k, unsigned digits = 2);

struct RangeReport {
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  ExactRatio q;
  bool is_counterexample = false;  // q > d+1, exactly
  std::optional<ExactInt> d_low;   // = d when present
  std::optional<ExactInt> d_high;  // greatest integer strictly below q-1
  std::vector<std::string> warnings;
};

RangeReport counterexample_range(std::uint64_t k);

struct CoverPlan {
  std::uint64_t target_dim = 0;
  std::optional<std::uint64_t> chosen_k;  // smallest admissible prime power
  std::optional<std::pair<ExactInt, ExactInt>> certifying_range;
};

// Scans prime powers in increasing order until d(k) exceeds the target.
CoverPlan plan_cover(std::uint64_t target_dim);

// One step of the coverage chain: the range certified for k must reach the
// start d(next_k) of the next range. certificate is "lower-bound" when the
// proven 2 (3/2)^k bound suffices and "q-exact" otherwise.
struct ChainLink {
  std::uint64_t k = 0;
  std::uint64_t next_k = 0;
  ExactInt next_low;        // d(next_k)
  std::string certificate;  // "lower-bound" | "q-exact"
  ExactInt certified_high;
  bool ok = false;
};

// Doubling check on (3/2)^k / C(8k,2): once one lower-bound link holds, a
// monotone ratio makes every later doubling hold as well.
struct DoublingRatioCheck {
  std::uint64_t k = 0;
  bool increased = false;
};

struct ChainReport {
  std::uint64_t k_max = 0;
  std::uint64_t start_dim = 0;
  std::vector<std::uint64_t> ks;  // {16} + bridge + powers of two 32..k_max
  bool pass = false;
  std::vector<ChainLink> links;
  std::vector<DoublingRatioCheck> ratio_checks;
  std::string summary;  // names the offending k on failure
};

// Verifies that the ranges for ks chain with no gap from start_dim through
// d(2 k_max). k_max must be a power of two >= 32; bridge members must be
// prime powers strictly between 16 and 32.
ChainReport verify_chain(std::uint64_t k_max = 4096, std::uint64_t start_dim = 2015,
                         const std::vector<std::uint64_t>& bridge = {17});

// Unordered point pairs of K at squared distance 4(k^2 - (p-k)^2), grouped
// by the class {p, 2k-p} of block intersection sizes.
struct SpectrumEntry {
  std::uint64_t p_low = 0;
  std::uint64_t p_high = 0;
  std::uint64_t dist_sq = 0;
  ExactInt count;
};

// Closed-form census: |H| C(2k,p) C(2k,2k-p) / 4 per class with p != k and
// |H| C(2k,k)^2 / 8 at p = k; every division is checked exact and the
// counts are validated to sum to C(|K|,2). Entries at distance 0 excluded.
std::vector<SpectrumEntry> spectrum_analytic(std::uint64_t k);

// C(|K|,2) = |K|(|K|-1)/2 with |K| = C(m,2k)/2; the spectrum total.
ExactInt total_point_pairs(std::uint64_t k);

}  // namespace kk
