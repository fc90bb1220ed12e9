#include "kk/bounds.hpp"

#include <algorithm>
#include <bit>

namespace kk {

namespace {

using boost::multiprecision::pow;

ExactInt product(std::uint64_t from, std::uint64_t to) {
  ExactInt r = 1;
  for (std::uint64_t i = from; i <= to; ++i) r *= ExactInt(i);
  return r;
}

std::string not_prime_power_warning(std::uint64_t k) {
  return "k=" + std::to_string(k) +
         " is not a prime power; the Frankl-Wilson premiss fails, so the "
         "bound does not certify a counterexample";
}

// d(k) = C(4k,2) - 1 without going through Params.
ExactInt dim_of(std::uint64_t k) {
  const ExactInt m = 4 * ExactInt(k);
  return m * (m - 1) / 2 - 1;
}

ExactRatio lower_bound(std::uint64_t k) {
  return make_ratio(2 * pow(ExactInt(3), static_cast<unsigned>(k)),
                    pow(ExactInt(2), static_cast<unsigned>(k)));
}

ExactRatio upper_bound(std::uint64_t k) {
  return make_ratio(2 * pow(ExactInt(2 * k + 1), static_cast<unsigned>(k)),
                    pow(ExactInt(k + 1), static_cast<unsigned>(k)));
}

}  // namespace

QReport q_exact(std::uint64_t k, unsigned digits) {
  if (k == 0) throw std::invalid_argument("q_exact: k must be positive");

  QReport rep;
  rep.k = k;
  rep.formula_values = {
      make_ratio(binomial(4 * k, 2 * k), 2 * binomial(4 * k - 1, k - 1)),
      make_ratio(2 * binomial(3 * k, k), binomial(2 * k, k)),
      make_ratio(binomial(3 * k, k), binomial(2 * k - 1, k - 1)),
      make_ratio(product(2 * k + 1, 3 * k), product(k, 2 * k - 1)),
  };
  for (std::size_t i = 1; i < rep.formula_values.size(); ++i) {
    if (rep.formula_values[i] != rep.formula_values[0]) {
      throw std::logic_error("q_exact: formula '" + std::string(kQFormulaNames[i]) +
                             "' disagrees with '" + kQFormulaNames[0] +
                             "' at k=" + std::to_string(k));
    }
  }
  rep.q = rep.formula_values[0];

  rep.lower = lower_bound(k);
  rep.upper = upper_bound(k);
  const ExactInt two_pow = pow(ExactInt(2), static_cast<unsigned>(k + 1));
  if (!(rep.lower <= rep.q && rep.q <= rep.upper && rep.upper < two_pow)) {
    throw std::logic_error("q_exact: bound sandwich violated at k=" + std::to_string(k));
  }

  rep.decimal = to_decimal(rep.q, digits);
  if (!is_prime_power(k)) rep.warnings.push_back(not_prime_power_warning(k));
  return rep;
}

RangeReport counterexample_range(std::uint64_t k) {
  const Params p = make_params(k);
  QReport qr = q_exact(k);

  RangeReport rep;
  rep.k = k;
  rep.d = p.d;
  rep.q = qr.q;
  rep.warnings = std::move(qr.warnings);
  rep.is_counterexample = rep.q > ExactInt(p.d) + 1;
  if (rep.is_counterexample) {
    rep.d_low = ExactInt(p.d);
    rep.d_high = largest_int_below(rep.q - 1);
  }
  return rep;
}

CoverPlan plan_cover(std::uint64_t target_dim) {
  if (target_dim < 1) throw std::invalid_argument("plan_cover: target dimension must be >= 1");

  CoverPlan plan;
  plan.target_dim = target_dim;
  const ExactInt target(target_dim);

  for (std::uint64_t k = 2;; ++k) {
    const ExactInt d_k = dim_of(k);
    if (d_k > target) break;  // d grows with k, so no later k can start low enough
    if (!is_prime_power(k)) continue;

    // Cheap rejections via the upper bound: q <= upper, so upper <= d+1
    // rules out a counterexample and target >= upper-1 rules out coverage.
    const ExactRatio upper = upper_bound(k);
    if (upper <= ExactRatio(d_k + 1)) continue;
    if (ExactRatio(target) >= upper - 1) continue;

    const RangeReport rr = counterexample_range(k);
    if (rr.is_counterexample && target <= *rr.d_high) {
      plan.chosen_k = k;
      plan.certifying_range = std::make_pair(*rr.d_low, *rr.d_high);
      break;
    }
  }
  return plan;
}

ChainReport verify_chain(std::uint64_t k_max, std::uint64_t start_dim,
                         const std::vector<std::uint64_t>& bridge) {
  if (k_max < 32 || !std::has_single_bit(k_max)) {
    throw std::invalid_argument("verify_chain: k_max must be a power of two >= 32");
  }
  for (std::uint64_t b : bridge) {
    if (b <= 16 || b >= 32) {
      throw std::invalid_argument("verify_chain: bridge k must lie strictly between 16 and 32");
    }
    if (!is_prime_power(b)) {
      throw std::invalid_argument("verify_chain: bridge k=" + std::to_string(b) +
                                  " is not a prime power");
    }
  }

  ChainReport rep;
  rep.k_max = k_max;
  rep.start_dim = start_dim;
  rep.ks.push_back(16);
  rep.ks.insert(rep.ks.end(), bridge.begin(), bridge.end());
  for (std::uint64_t k = 32; k <= k_max; k *= 2) rep.ks.push_back(k);
  std::sort(rep.ks.begin(), rep.ks.end());
  rep.ks.erase(std::unique(rep.ks.begin(), rep.ks.end()), rep.ks.end());

  rep.pass = true;
  if (dim_of(rep.ks.front()) > ExactInt(start_dim)) {
    rep.pass = false;
    rep.summary = "gap before k=" + std::to_string(rep.ks.front()) +
                  ": its range starts above the requested start dimension";
  }

  for (std::size_t i = 0; i < rep.ks.size(); ++i) {
    const std::uint64_t k = rep.ks[i];
    const std::uint64_t next_k = i + 1 < rep.ks.size() ? rep.ks[i + 1] : 2 * k_max;

    ChainLink link;
    link.k = k;
    link.next_k = next_k;
    link.next_low = dim_of(next_k);

    // Prefer the proven lower bound: 2 (3/2)^k - 1 > d(next) is stronger
    // than range adjacency and needs no binomials. Fall back to the exact
    // range where the bound is too weak (k = 16 and the bridge).
    const ExactRatio lb_high = lower_bound(k) - 1;  // certified through just below this
    if (lb_high > link.next_low) {
      link.certificate = "lower-bound";
      link.certified_high = largest_int_below(lb_high);
      link.ok = true;
    } else {
      const RangeReport rr = counterexample_range(k);
      link.certificate = "q-exact";
      if (rr.is_counterexample) {
        link.certified_high = *rr.d_high;
        link.ok = link.next_low <= link.certified_high + 1;
      } else {
        link.certified_high = 0;
        link.ok = false;
      }
    }
    if (!link.ok && rep.pass) {
      rep.pass = false;
      rep.summary = "chain gap at k=" + std::to_string(k) + ": certified range ends at " +
                    link.certified_high.str() + " but d(" + std::to_string(next_k) +
                    ")=" + link.next_low.str();
    }
    rep.links.push_back(std::move(link));
  }

  // (3/2)^(2k)/C(16k,2) > (3/2)^k/C(8k,2)  <=>  3^k C(8k,2) > 2^k C(16k,2).
  for (std::uint64_t k : rep.ks) {
    if (!std::has_single_bit(k)) continue;
    const auto e = static_cast<unsigned>(k);
    DoublingRatioCheck chk;
    chk.k = k;
    chk.increased =
        pow(ExactInt(3), e) * (dim_of(2 * k) + 1) > pow(ExactInt(2), e) * (dim_of(4 * k) + 1);
    if (!chk.increased && rep.pass) {
      rep.pass = false;
      rep.summary = "growth ratio failed to increase at the doubling k=" + std::to_string(k);
    }
    rep.ratio_checks.push_back(chk);
  }

  if (rep.pass) {
    rep.summary = "verified up to k=" + std::to_string(k_max) + ": dimensions " +
                  std::to_string(start_dim) + ".." + dim_of(2 * k_max).str() +
                  " covered with no gap; growth ratio monotone at all tested doublings";
  }
  return rep;
}

ExactInt total_point_pairs(std::uint64_t k) {
  const ExactInt n_points = div_exact(binomial(4 * k, 2 * k), 2);
  return div_exact(n_points * (n_points - 1), 2);
}

std::vector<SpectrumEntry> spectrum_analytic(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("spectrum_analytic: k must be positive");

  const ExactInt h_size = binomial(4 * k, 2 * k);
  std::vector<SpectrumEntry> entries;
  ExactInt total = 0;

  // One entry per class {p, 2k-p}, p = 1..k; p in {0, 2k} is distance 0.
  for (std::uint64_t p = 1; p <= k; ++p) {
    SpectrumEntry e;
    e.p_low = p;
    e.p_high = 2 * k - p;
    e.dist_sq = dist_sq_closed(k, p);
    if (p == k) {
      e.count = div_exact(h_size * binomial(2 * k, k) * binomial(2 * k, k), 8);
    } else {
      e.count = div_exact(h_size * binomial(2 * k, p) * binomial(2 * k, 2 * k - p), 4);
    }
    total += e.count;
    entries.push_back(std::move(e));
  }

  if (total != total_point_pairs(k)) {
    throw std::logic_error("spectrum_analytic: counts do not sum to C(|K|,2) at k=" +
                           std::to_string(k));
  }
  return entries;
}

}  // namespace kk
