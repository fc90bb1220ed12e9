#include "kk/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <future>
#include <map>
#include <stdexcept>
#include <thread>

namespace kk {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void add_counter(VerificationReport& rep, std::string name, std::uint64_t value) {
  rep.counters.emplace_back(std::move(name), std::to_string(value));
}

void add_counter(VerificationReport& rep, std::string name, const ExactInt& value) {
  rep.counters.emplace_back(std::move(name), value.str());
}

void add_counter(VerificationReport& rep, std::string name, std::string value) {
  rep.counters.emplace_back(std::move(name), std::move(value));
}

std::string fw_premiss_warning(std::uint64_t k) {
  return "k=" + std::to_string(k) +
         " is not a prime power; the Frankl-Wilson bound 2*C(m-1,k-1) is not "
         "certified for this k and is reported for reference only";
}

// Splits [0,n) into contiguous chunks, one worker per chunk, and returns the
// per-chunk partial results in ascending chunk order. With one hardware
// thread this degrades to a single sequential call. Keeping the merge in
// chunk order makes witness selection deterministic: the first witness seen
// in merged order is the lexicographically least failing index pair.
template <typename Partial, typename Worker>
std::vector<Partial> run_chunked(std::size_t n, const Worker& worker) {
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, n == 0 ? std::size_t{1} : n);
  if (workers <= 1) {
    std::vector<Partial> one;
    one.push_back(worker(std::size_t{0}, n));
    return one;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::future<Partial>> futures;
  for (std::size_t t = 0; t < workers; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    futures.push_back(std::async(std::launch::async,
                                 [&worker, lo, hi] { return worker(lo, hi); }));
  }
  std::vector<Partial> parts;
  parts.reserve(futures.size());
  for (auto& f : futures) parts.push_back(f.get());
  return parts;
}

void require_cap(std::uint64_t k, std::uint64_t cap_k, const char* what) {
  if (k > cap_k) {
    throw CapExceeded(std::string(what) + " cap exceeded: k=" + std::to_string(k) +
                      " > cap " + std::to_string(cap_k));
  }
}

}  // namespace

VerificationReport verify_identities(std::uint64_t k, std::uint64_t cap_k) {
  const auto t0 = Clock::now();
  require_cap(k, cap_k, "pairwise");
  const Params p = make_params(k);
  VerificationReport rep;
  rep.suite = "identities";
  rep.k = k;

  const std::vector<Block> blocks = all_blocks(p);
  const std::size_t n = blocks.size();
  std::vector<CrossVector> points;
  points.reserve(n);
  for (Block b : blocks) points.push_back(cross_set(b, p));

  auto fail = [&rep](std::string msg) {
    if (rep.witnesses.size() < 5) rep.witnesses.push_back(std::move(msg));
  };

  const std::uint64_t point_size = 4 * k * k;
  std::uint64_t canonical = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Block a = blocks[i];
    const Block na = complement(a, p);
    if (points[i].popcount() != point_size) {
      fail("|S(A)| != 4k^2 for A=" + format_block(a, p));
    }
    if (!(cross_set(na, p) == points[i])) {
      fail("S(N(A)) != S(A) for A=" + format_block(a, p));
    }
    if (block_size(na) != 2 * k) {
      fail("|N(A)| != 2k for A=" + format_block(a, p));
    }
    if (canonicalize(a, p) != canonicalize(na, p)) {
      fail("canonical forms of A and N(A) differ for A=" + format_block(a, p));
    }
    if (a.bits & 1) ++canonical;
  }
  const ExactInt h_expect = binomial(p.m, 2 * k);
  if (ExactInt(n) != h_expect) fail("|H| != C(m,2k)");
  if (ExactInt(canonical) != div_exact(h_expect, 2)) fail("|K| != C(m,2k)/2");

  struct Partial {
    std::uint64_t pairs = 0;
    std::uint64_t max_dist = 0;
    std::uint64_t at_diameter = 0;
    std::vector<std::string> witnesses;
  };
  const auto partials = run_chunked<Partial>(n, [&](std::size_t lo, std::size_t hi) {
    Partial out;
    auto bad = [&out](std::string msg) {
      if (out.witnesses.size() < 3) out.witnesses.push_back(std::move(msg));
    };
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ++out.pairs;
        const std::uint64_t pij = intersection_size(blocks[i], blocks[j]);
        const std::uint64_t overlap = and_popcount(points[i], points[j]);
        const std::uint64_t dsq = dist_sq_direct(points[i], points[j]);
        auto pair_name = [&] {
          return "A=" + format_block(blocks[i], p) + " B=" + format_block(blocks[j], p);
        };
        // p^2 + (2k-p)^2 is the expanded 2p^2 + 4k^2 - 4kp, kept subtraction-free.
        if (overlap != pij * pij + (2 * k - pij) * (2 * k - pij)) {
          bad("|a&b| != 2p^2+4k^2-4kp for " + pair_name());
        }
        if (dsq != 2 * point_size - 2 * overlap) {
          bad("dist^2 != 2(2k)^2 - 2|a&b| for " + pair_name());
        }
        if (dsq != dist_sq_closed(k, pij)) {
          bad("dist^2 != 4(k^2-(p-k)^2) for " + pair_name());
        }
        if (dsq == 0 && !(i == j || blocks[j] == complement(blocks[i], p))) {
          bad("S(A) = S(B) with B outside {A, N(A)} for " + pair_name());
        }
        if (intersection_size(blocks[i], complement(blocks[j], p)) != 2 * k - pij) {
          bad("|A & N(B)| != 2k-p for " + pair_name());
        }
        if ((pij == k) != (dsq == point_size)) {
          bad("dist^2 = 4k^2 iff p=k violated for " + pair_name());
        }
        if (dsq > out.max_dist) out.max_dist = dsq;
        if (dsq == point_size) ++out.at_diameter;
      }
    }
    return out;
  });

  std::uint64_t pairs = 0;
  std::uint64_t at_diameter = 0;
  std::uint64_t max_dist = 0;
  for (const Partial& part : partials) {
    pairs += part.pairs;
    at_diameter += part.at_diameter;
    max_dist = std::max(max_dist, part.max_dist);
    for (const std::string& w : part.witnesses) fail(w);
  }
  if (max_dist != point_size) fail("squared diameter != 4k^2");

  add_counter(rep, "blocks", n);
  add_counter(rep, "canonical-blocks", canonical);
  add_counter(rep, "ordered-pairs", pairs);
  add_counter(rep, "diameter-sq", max_dist);
  add_counter(rep, "ordered-pairs-at-diameter", at_diameter);
  rep.pass = rep.witnesses.empty();
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

DiameterCensus diameter_bruteforce(std::uint64_t k, std::uint64_t cap_k) {
  const auto t0 = Clock::now();
  require_cap(k, cap_k, "pairwise");
  const Params p = make_params(k);
  const PointSet ps = enumerate_points(p, cap_k);
  const std::size_t n = ps.points.size();
  const std::uint64_t point_size = 4 * k * k;

  struct Partial {
    std::uint64_t pairs = 0;
    std::uint64_t max_dist = 0;
    std::uint64_t at_max = 0;
    std::size_t wa = 0, wb = 0;
    std::vector<std::string> witnesses;
  };
  const auto partials = run_chunked<Partial>(n, [&](std::size_t lo, std::size_t hi) {
    Partial out;
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        ++out.pairs;
        const std::uint64_t dsq = dist_sq_direct(ps.points[i], ps.points[j]);
        const std::uint64_t pij = intersection_size(ps.blocks[i], ps.blocks[j]);
        if ((pij == k) != (dsq == point_size) && out.witnesses.size() < 3) {
          out.witnesses.push_back("dist^2 = 4k^2 iff p=k violated for A=" +
                                  format_block(ps.blocks[i], p) + " B=" +
                                  format_block(ps.blocks[j], p));
        }
        // Distinct points of K are never coincident, so dsq > 0 here and the
        // first pair always installs itself as the running maximum.
        if (dsq > out.max_dist) {
          out.max_dist = dsq;
          out.at_max = 1;
          out.wa = i;
          out.wb = j;
        } else if (dsq == out.max_dist) {
          ++out.at_max;
        }
      }
    }
    return out;
  });

  DiameterCensus census;
  VerificationReport& rep = census.report;
  rep.suite = "diameter";
  rep.k = k;
  std::uint64_t pairs = 0;
  for (const Partial& part : partials) pairs += part.pairs;
  std::uint64_t max_dist = 0;
  for (const Partial& part : partials) max_dist = std::max(max_dist, part.max_dist);
  std::uint64_t at_max = 0;
  bool have_witness = false;
  for (const Partial& part : partials) {
    if (part.max_dist != max_dist) continue;
    at_max += part.at_max;
    if (!have_witness) {
      census.witness_a = ps.blocks[part.wa];
      census.witness_b = ps.blocks[part.wb];
      have_witness = true;
    }
  }
  for (const Partial& part : partials) {
    for (const std::string& w : part.witnesses) {
      if (rep.witnesses.size() < 5) rep.witnesses.push_back(w);
    }
  }
  census.diameter_sq = max_dist;
  if (max_dist != point_size) {
    rep.witnesses.push_back("squared diameter " + std::to_string(max_dist) +
                            " != 4k^2 = " + std::to_string(point_size));
  }

  add_counter(rep, "points", n);
  add_counter(rep, "point-pairs", pairs);
  add_counter(rep, "diameter-sq", max_dist);
  add_counter(rep, "pairs-at-diameter", at_max);
  if (have_witness) {
    add_counter(rep, "witness", "A=" + format_block(census.witness_a, p) +
                                    " B=" + format_block(census.witness_b, p));
  }
  rep.pass = rep.witnesses.empty();
  rep.elapsed_seconds = seconds_since(t0);
  return census;
}

ConflictGraph ConflictGraph::build(const Params& p, std::uint64_t cap_k) {
  require_cap(p.k, cap_k, "conflict-graph");
  ConflictGraph g;
  g.params = p;
  g.vertices = all_blocks(p);
  const std::size_t n = g.vertices.size();
  g.row_words = (n + 63) / 64;
  g.adjacency.assign(n * g.row_words, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (intersection_size(g.vertices[i], g.vertices[j]) == p.k) {
        g.adjacency[i * g.row_words + j / 64] |= std::uint64_t{1} << (j % 64);
        g.adjacency[j * g.row_words + i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }
  return g;
}

std::uint64_t ConflictGraph::edge_count() const {
  std::uint64_t twice = 0;
  for (std::uint64_t w : adjacency) twice += static_cast<std::uint64_t>(std::popcount(w));
  return twice / 2;
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kExact: return "exact";
    case SearchStatus::kLowerBound: return "lower-bound";
    case SearchStatus::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

std::size_t first_set(std::span<const std::uint64_t> words) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    if (words[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words[w]));
  }
  return words.size() * 64;
}

void clear_bit(std::vector<std::uint64_t>& words, std::size_t i) {
  words[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

class MisSolver {
 public:
  MisSolver(std::size_t n, std::size_t row_words,
            std::span<const std::uint64_t> adjacency, std::uint64_t budget)
      : n_(n), words_(row_words), adj_(adjacency), budget_(budget) {}

  MisResult run() {
    std::vector<std::uint64_t> cand(words_, 0);
    for (std::size_t i = 0; i < n_; ++i) cand[i / 64] |= std::uint64_t{1} << (i % 64);
    descend(cand);
    MisResult out;
    out.status = out_of_budget_ ? SearchStatus::kInconclusive : SearchStatus::kExact;
    out.size = best_.size();
    out.members = best_;
    std::sort(out.members.begin(), out.members.end());
    out.nodes = nodes_;
    return out;
  }

 private:
  std::span<const std::uint64_t> row(std::size_t v) const {
    return {adj_.data() + v * words_, words_};
  }

  // Greedy clique cover of the candidate set: an independent set takes at
  // most one vertex per clique, so the cover size bounds what remains.
  std::size_t clique_cover_bound(const std::vector<std::uint64_t>& cand) const {
    std::vector<std::uint64_t> left = cand;
    std::vector<std::uint64_t> common(words_);
    std::size_t cliques = 0;
    while (true) {
      const std::size_t v = first_set(left);
      if (v >= n_) break;
      ++cliques;
      clear_bit(left, v);
      const auto rv = row(v);
      for (std::size_t w = 0; w < words_; ++w) common[w] = left[w] & rv[w];
      while (true) {
        const std::size_t u = first_set(common);
        if (u >= n_) break;
        clear_bit(left, u);
        clear_bit(common, u);
        const auto ru = row(u);
        for (std::size_t w = 0; w < words_; ++w) common[w] &= ru[w];
      }
    }
    return cliques;
  }

  // Highest candidate degree, lowest index on ties: fully deterministic.
  std::uint32_t branch_vertex(const std::vector<std::uint64_t>& cand) const {
    std::uint32_t best_v = 0;
    std::size_t best_deg = 0;
    bool found = false;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = cand[w];
      while (bits) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const auto rv = row(v);
        std::size_t deg = 0;
        for (std::size_t ww = 0; ww < words_; ++ww) {
          deg += static_cast<std::size_t>(std::popcount(rv[ww] & cand[ww]));
        }
        if (!found || deg > best_deg) {
          found = true;
          best_deg = deg;
          best_v = static_cast<std::uint32_t>(v);
        }
      }
    }
    return best_v;
  }

  void descend(const std::vector<std::uint64_t>& cand) {
    if (out_of_budget_) return;
    if (++nodes_ > budget_) {
      out_of_budget_ = true;
      return;
    }
    const std::size_t cover = clique_cover_bound(cand);
    if (current_.size() + cover <= best_.size()) return;
    if (cover == 0) {
      best_ = current_;
      return;
    }
    const std::uint32_t v = branch_vertex(cand);
    std::vector<std::uint64_t> next(words_);
    const auto rv = row(v);
    for (std::size_t w = 0; w < words_; ++w) next[w] = cand[w] & ~rv[w];
    clear_bit(next, v);
    current_.push_back(v);
    descend(next);
    current_.pop_back();
    next = cand;
    clear_bit(next, v);
    descend(next);
  }

  std::size_t n_;
  std::size_t words_;
  std::span<const std::uint64_t> adj_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::vector<std::uint32_t> current_;
  std::vector<std::uint32_t> best_;
};

}  // namespace

MisResult max_independent_set(std::size_t n, std::size_t row_words,
                              std::span<const std::uint64_t> adjacency,
                              std::uint64_t budget) {
  if (row_words < (n + 63) / 64 || adjacency.size() < n * row_words) {
    throw std::invalid_argument("max_independent_set: adjacency shape mismatch");
  }
  if (n == 0) return MisResult{SearchStatus::kExact, 0, {}, 0};
  MisSolver solver(n, row_words, adjacency, budget);
  return solver.run();
}

FamilySearchResult max_conflict_free_family(std::uint64_t k, std::uint64_t budget,
                                            std::uint64_t exact_cap_k) {
  const auto t0 = Clock::now();
  const Params p = make_params(k);
  FamilySearchResult res;
  res.bound = 2 * binomial(p.m - 1, k - 1);
  VerificationReport& rep = res.report;
  rep.suite = "fw";
  rep.k = k;
  if (!p.prime_power) rep.warnings.push_back(fw_premiss_warning(k));

  if (k <= exact_cap_k) {
    const ConflictGraph graph = ConflictGraph::build(p, exact_cap_k);
    const MisResult mis = max_independent_set(graph.vertices.size(), graph.row_words,
                                              graph.adjacency, budget);
    res.status = mis.status;
    res.nodes = mis.nodes;
    res.family_size = mis.size;
    res.family.reserve(mis.members.size());
    for (std::uint32_t v : mis.members) res.family.push_back(graph.vertices[v]);
    add_counter(rep, "mode", "exact");
    add_counter(rep, "vertices", graph.vertices.size());
    add_counter(rep, "edges", graph.edge_count());
    add_counter(rep, "search-nodes", mis.nodes);
  } else {
    res.status = SearchStatus::kLowerBound;
    rep.warnings.push_back("k=" + std::to_string(k) + " is above the exact cap " +
                           std::to_string(exact_cap_k) +
                           ": greedy family only, no maximality claim");
    std::uint64_t comparisons = 0;
    bool budget_hit = false;
    for_each_block(p, [&](Block b) {
      bool conflict = false;
      for (Block f : res.family) {
        if (++comparisons > budget) {
          budget_hit = true;
          return false;
        }
        if (intersection_size(f, b) == k) {
          conflict = true;
          break;
        }
      }
      if (!conflict) res.family.push_back(b);
      return true;
    });
    res.family_size = res.family.size();
    res.nodes = comparisons;
    add_counter(rep, "mode", "lower-bound");
    add_counter(rep, "comparisons", comparisons);
    if (budget_hit) {
      rep.warnings.push_back("budget exhausted after " + std::to_string(budget) +
                             " comparisons; block enumeration stopped early");
    }
  }

  // Revalidate the reported family independently of the search path.
  for (std::size_t i = 0; i < res.family.size() && rep.witnesses.empty(); ++i) {
    for (std::size_t j = i + 1; j < res.family.size(); ++j) {
      if (intersection_size(res.family[i], res.family[j]) == k) {
        rep.witnesses.push_back("family members intersect in exactly k: A=" +
                                format_block(res.family[i], p) + " B=" +
                                format_block(res.family[j], p));
        break;
      }
    }
  }
  add_counter(rep, "family-size", res.family_size);
  add_counter(rep, "bound", res.bound);
  add_counter(rep, "status", to_string(res.status));
  if (p.prime_power && ExactInt(res.family_size) > res.bound) {
    rep.witnesses.push_back("family size " + std::to_string(res.family_size) +
                            " exceeds the Frankl-Wilson bound " + res.bound.str());
  }
  if (res.status == SearchStatus::kInconclusive) {
    rep.warnings.push_back("search budget exhausted after " +
                           std::to_string(res.nodes) +
                           " nodes; the exact maximum was not established");
  }
  rep.pass = rep.witnesses.empty() && res.status != SearchStatus::kInconclusive;
  rep.elapsed_seconds = seconds_since(t0);
  return res;
}

std::uint64_t affine_rank_of_points(std::span<const CrossVector> points) {
  if (points.size() <= 1) return 0;
  const std::size_t rows = points.size() - 1;
  const std::size_t cols = points[0].bit_count();
  for (const CrossVector& pt : points) {
    if (pt.bit_count() != cols) {
      throw std::invalid_argument("affine_rank_of_points: mixed dimensions");
    }
  }
  std::vector<std::vector<ExactInt>> mat(rows, std::vector<ExactInt>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      mat[r][c] = static_cast<int>(points[r + 1].test(c)) -
                  static_cast<int>(points[0].test(c));
    }
  }
  // Fraction-free (Bareiss) elimination: every division is by the previous
  // pivot and exact over the integers; div_exact would throw otherwise.
  std::size_t rank = 0;
  ExactInt prev(1);
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && mat[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(mat[rank], mat[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t cc = c + 1; cc < cols; ++cc) {
        mat[r][cc] =
            div_exact(mat[r][cc] * mat[rank][c] - mat[r][c] * mat[rank][cc], prev);
      }
      mat[r][c] = 0;
    }
    prev = mat[rank][c];
    ++rank;
  }
  return rank;
}

RankResult affine_rank(std::uint64_t k, std::uint64_t cap_k) {
  const auto t0 = Clock::now();
  require_cap(k, cap_k, "rank");
  const Params p = make_params(k);
  const PointSet ps = enumerate_points(p, cap_k);
  RankResult out;
  out.rank = affine_rank_of_points(ps.points);
  out.d = p.d;
  VerificationReport& rep = out.report;
  rep.suite = "rank";
  rep.k = k;
  add_counter(rep, "points", ps.points.size());
  add_counter(rep, "coordinates", p.w_size);
  add_counter(rep, "affine-rank", out.rank);
  add_counter(rep, "dimension-bound", p.d);
  if (out.rank > p.d) {
    rep.witnesses.push_back("affine rank " + std::to_string(out.rank) +
                            " exceeds d=" + std::to_string(p.d));
  }
  rep.pass = rep.witnesses.empty();
  rep.elapsed_seconds = seconds_since(t0);
  return out;
}

std::vector<std::vector<std::uint32_t>> first_fit_cover(
    std::span<const CrossVector> points, std::uint64_t forbidden_dist_sq) {
  std::vector<std::vector<std::uint32_t>> parts;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool placed = false;
    for (auto& part : parts) {
      bool blocked = false;
      for (std::uint32_t member : part) {
        if (dist_sq_direct(points[i], points[member]) == forbidden_dist_sq) {
          blocked = true;
          break;
        }
      }
      if (!blocked) {
        part.push_back(static_cast<std::uint32_t>(i));
        placed = true;
        break;
      }
    }
    if (!placed) parts.push_back({static_cast<std::uint32_t>(i)});
  }
  return parts;
}

CoverResult greedy_cover(std::uint64_t k, std::uint64_t cap_k) {
  const auto t0 = Clock::now();
  require_cap(k, cap_k, "pairwise");
  const Params p = make_params(k);
  const PointSet ps = enumerate_points(p, cap_k);
  const std::uint64_t diameter_sq = 4 * k * k;

  CoverResult out;
  out.parts = first_fit_cover(ps.points, diameter_sq);
  out.part_count = out.parts.size();
  out.q = q_exact(k).q;
  VerificationReport& rep = out.report;
  rep.suite = "cover";
  rep.k = k;

  // Validity: no part may contain a pair at (or, impossibly, above) the
  // diameter, so every part has strictly smaller diameter.
  for (const auto& part : out.parts) {
    for (std::size_t a = 0; a < part.size(); ++a) {
      for (std::size_t b = a + 1; b < part.size(); ++b) {
        if (dist_sq_direct(ps.points[part[a]], ps.points[part[b]]) >= diameter_sq &&
            rep.witnesses.size() < 5) {
          rep.witnesses.push_back("part contains a diameter pair: A=" +
                                  format_block(ps.blocks[part[a]], p) + " B=" +
                                  format_block(ps.blocks[part[b]], p));
        }
      }
    }
  }
  // Coverage: the parts form a partition of the point index range.
  std::vector<std::uint32_t> seen(ps.points.size(), 0);
  for (const auto& part : out.parts) {
    for (std::uint32_t member : part) ++seen[member];
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] != 1 && rep.witnesses.size() < 5) {
      rep.witnesses.push_back("point " + format_block(ps.blocks[i], p) +
                              " covered " + std::to_string(seen[i]) + " times");
    }
  }
  if (ExactRatio(out.part_count) < out.q) {
    rep.witnesses.push_back("part count " + std::to_string(out.part_count) +
                            " is below the covering lower bound q = " +
                            to_fraction(out.q));
  }

  add_counter(rep, "points", ps.points.size());
  add_counter(rep, "parts", out.part_count);
  add_counter(rep, "forbidden-dist-sq", diameter_sq);
  add_counter(rep, "q", to_fraction(out.q));
  add_counter(rep, "q-decimal", to_decimal(out.q, 2));
  rep.pass = rep.witnesses.empty();
  rep.elapsed_seconds = seconds_since(t0);
  return out;
}

std::vector<SpectrumCount> spectrum_bruteforce(std::uint64_t k, std::uint64_t cap_k) {
  require_cap(k, cap_k, "pairwise");
  const Params p = make_params(k);
  const PointSet ps = enumerate_points(p, cap_k);
  const std::size_t n = ps.points.size();

  using Census = std::map<std::uint64_t, std::uint64_t>;
  const auto partials = run_chunked<Census>(n, [&](std::size_t lo, std::size_t hi) {
    Census out;
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        ++out[dist_sq_direct(ps.points[i], ps.points[j])];
      }
    }
    return out;
  });
  Census census;
  for (const Census& part : partials) {
    for (const auto& [dist, count] : part) census[dist] += count;
  }
  std::vector<SpectrumCount> out;
  out.reserve(census.size());
  for (const auto& [dist, count] : census) out.push_back({dist, count});
  return out;
}

}  // namespace kk
