#pragma once

// Brute-force and exact-search verification at desk scale. Everything here
// recomputes a claim from first principles (exhaustive pair sweeps, exact
// search, fraction-free elimination) rather than trusting a closed form.

#include "kk/bounds.hpp"
#include "kk/construction.hpp"
#include "kk/exact.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kk {

inline constexpr std::uint64_t kDefaultPairwiseCapK = 3;   // O(|H|^2) sweeps
inline constexpr std::uint64_t kDefaultCountCapK = 4;      // count-only suites
inline constexpr std::uint64_t kDefaultRankCapK = 2;       // exact elimination
inline constexpr std::uint64_t kDefaultExactMisCapK = 2;   // exact family search
inline constexpr std::uint64_t kDefaultSearchBudget = 20'000'000;

// Shared machine-readable outcome of a verification suite. A failing
// report always carries at least one concrete witness. elapsed_seconds is
// for human display and never serialized.
struct VerificationReport {
  std::string suite;
  std::uint64_t k = 0;
  bool pass = false;
  std::vector<std::pair<std::string, std::string>> counters;
  std::vector<std::string> witnesses;
  std::vector<std::string> warnings;
  double elapsed_seconds = 0.0;
};

// Graph on all of H (both members of every complement pair) with an edge
// where blocks intersect in exactly k elements; conflict-free families are
// its independent sets. Rows are bitsets over the vertex indices.
struct ConflictGraph {
  Params params;
  std::vector<Block> vertices;  // ascending block words
  std::size_t row_words = 0;
  std::vector<std::uint64_t> adjacency;

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {adjacency.data() + i * row_words, row_words};
  }
  std::uint64_t edge_count() const;

  static ConflictGraph build(const Params& p, std::uint64_t cap_k = kDefaultCountCapK);
};

// Exhaustively checks, over every ordered pair of blocks, the overlap and
// distance closed forms, injectivity of S up to complement, point sizes,
// |K| = C(m,2k)/2, and that the diameter is attained exactly at p = k.
VerificationReport verify_identities(std::uint64_t k,
                                     std::uint64_t cap_k = kDefaultPairwiseCapK);

struct DiameterCensus {
  std::uint64_t diameter_sq = 0;
  Block witness_a, witness_b;  // first attaining pair in enumeration order
  VerificationReport report;
};

// Maximum squared distance over all point pairs of K, with the p = k
// equivalence asserted in both directions.
DiameterCensus diameter_bruteforce(std::uint64_t k,
                                   std::uint64_t cap_k = kDefaultPairwiseCapK);

enum class SearchStatus { kExact, kLowerBound, kInconclusive };

const char* to_string(SearchStatus s);

struct FamilySearchResult {
  SearchStatus status = SearchStatus::kInconclusive;
  std::uint64_t family_size = 0;
  std::vector<Block> family;
  ExactInt bound;  // 2 C(m-1,k-1)
  std::uint64_t nodes = 0;
  VerificationReport report;
};

// Largest family of blocks with no two intersecting in exactly k elements.
// Exact branch-and-bound up to exact_cap_k; beyond that a greedy family is
// reported as a lower bound with no optimality claim. A budget exhausted
// mid-search in exact mode yields an explicit inconclusive status.
FamilySearchResult max_conflict_free_family(std::uint64_t k,
                                            std::uint64_t budget = kDefaultSearchBudget,
                                            std::uint64_t exact_cap_k = kDefaultExactMisCapK);

struct MisResult {
  SearchStatus status = SearchStatus::kInconclusive;
  std::uint64_t size = 0;
  std::vector<std::uint32_t> members;
  std::uint64_t nodes = 0;
};

// Exact maximum independent set over a bitset adjacency (n rows of
// row_words words each). Branch and bound in greedy-degeneracy order with
// a greedy clique-cover bound for pruning; fully deterministic.
MisResult max_independent_set(std::size_t n, std::size_t row_words,
                              std::span<const std::uint64_t> adjacency,
                              std::uint64_t budget = kDefaultSearchBudget);

struct RankResult {
  std::uint64_t rank = 0;
  std::uint64_t d = 0;
  VerificationReport report;
};

// Exact affine rank of K (rank of the differences from the first point)
// by fraction-free elimination; asserts rank <= d.
RankResult affine_rank(std::uint64_t k, std::uint64_t cap_k = kDefaultRankCapK);

// Stand-alone helper: 0 for zero or one point.
std::uint64_t affine_rank_of_points(std::span<const CrossVector> points);

struct CoverResult {
  std::uint64_t part_count = 0;
  std::vector<std::vector<std::uint32_t>> parts;  // point indices
  ExactRatio q;
  VerificationReport report;
};

// First-fit partition of K into parts free of the squared diameter 4k^2;
// verifies every part's diameter and that the part count is >= q.
CoverResult greedy_cover(std::uint64_t k, std::uint64_t cap_k = kDefaultPairwiseCapK);

// First-fit on an arbitrary point list: a point joins the first part with
// no member at the forbidden squared distance, else opens a new part.
std::vector<std::vector<std::uint32_t>> first_fit_cover(
    std::span<const CrossVector> points, std::uint64_t forbidden_dist_sq);

struct SpectrumCount {
  std::uint64_t dist_sq = 0;
  std::uint64_t count = 0;
  friend bool operator==(const SpectrumCount&, const SpectrumCount&) = default;
};

// Exhaustive pairwise distance census over K, ascending by distance.
std::vector<SpectrumCount> spectrum_bruteforce(std::uint64_t k,
                                               std::uint64_t cap_k = kDefaultPairwiseCapK);

}  // namespace kk
