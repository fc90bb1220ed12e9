#pragma once

// The point-set construction: ground set V = {1..m}, pair space W, blocks
// H (the 2k-subsets of V), complements N(A), and the cross sets S(A) that
// form the point set K as 0/1 vectors over W.
//
// Encodings are fixed so exports are bit-exact:
//   * Block: bit i-1 of a 64-bit word holds element i (so m <= 64).
//   * Pair space W is coordinatized colexicographically:
//       index({a,b}) = (b-1)(b-2)/2 + (a-1)  for 1 <= a < b <= m, 0-based.
//   * CrossVector: bit i of a wSize-bit vector holds pair index i.

#include "kk/exact.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kk {

// Enumerating K is desk-scale up to here by default; C(16,8)/2 = 6435 points.
inline constexpr std::uint64_t kDefaultEnumerationCapK = 4;

// Derived quantities of one construction instance.
struct Params {
  std::uint64_t k = 0;       // premiss parameter
  std::uint64_t m = 0;       // ground-set size, 4k
  std::uint64_t w_size = 0;  // |W| = C(m,2), the ambient coordinate count
  std::uint64_t d = 0;       // claimed dimension, |W| - 1
  std::optional<PrimePowerWitness> prime_power;
};

// k = 0 is rejected; k = 1 is accepted (prime_power stays empty).
Params make_params(std::uint64_t k);

// A 2k-subset A of V as a bit word; element i lives in bit i-1.
struct Block {
  std::uint64_t bits = 0;
  friend constexpr auto operator<=>(const Block&, const Block&) = default;
};

Block make_block(std::initializer_list<unsigned> elements);
std::vector<unsigned> block_elements(Block a, const Params& p);
std::string format_block(Block a, const Params& p);  // "{1,2,5,6}"
unsigned block_size(Block a);

// N(A) = V \ A. An involution; preserves |A| = 2k.
Block complement(Block a, const Params& p);

// Of the pair {A, N(A)} mapping to the same point, the one containing
// element 1. canonicalize(A) == canonicalize(N(A)).
Block canonicalize(Block a, const Params& p);

// p = |A intersect B|.
unsigned intersection_size(Block a, Block b);

// Colexicographic bijection between unordered pairs and 0..wSize-1.
std::size_t pair_index(unsigned a, unsigned b, const Params& p);
std::pair<unsigned, unsigned> pair_unindex(std::size_t i, const Params& p);

// A wSize-bit vector indexed by pair indices; one point of K.
class CrossVector {
 public:
  CrossVector() = default;
  explicit CrossVector(std::size_t bit_count)
      : bit_count_(bit_count), words_((bit_count + 63) / 64, 0) {}

  std::size_t bit_count() const { return bit_count_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t popcount() const;
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const CrossVector&, const CrossVector&) = default;

 private:
  std::size_t bit_count_ = 0;
  std::vector<std::uint64_t> words_;
};

// S(A) = { {a,b} : a in A, b in N(A) }; popcount is always (2k)^2.
CrossVector cross_set(Block a, const Params& p);

// Squared Euclidean distance |X xor Y| between two 0/1 vectors.
std::uint64_t dist_sq_direct(const CrossVector& x, const CrossVector& y);

// |X and Y|, the overlap count used by the identity checks.
std::uint64_t and_popcount(const CrossVector& x, const CrossVector& y);

// Closed form 4(k^2 - (p-k)^2) for the squared distance between points
// whose blocks intersect in p elements; 0 <= p <= 2k.
std::uint64_t dist_sq_closed(std::uint64_t k, std::uint64_t p);

// All of H in ascending order of the block word.
std::vector<Block> all_blocks(const Params& p);

// Streams H in the same order; stops early when fn returns false.
void for_each_block(const Params& p, const std::function<bool(Block)>& fn);

// K, keyed by canonical blocks in ascending word order; blocks and points
// are aligned index by index. Exactly C(m,2k)/2 entries.
struct PointSet {
  Params params;
  std::vector<Block> blocks;
  std::vector<CrossVector> points;
};

PointSet enumerate_points(const Params& p,
                          std::uint64_t cap_k = kDefaultEnumerationCapK);

// Streaming flavor of the same enumeration, same order.
void for_each_point(const Params& p, std::uint64_t cap_k,
                    const std::function<void(Block, const CrossVector&)>& fn);

}  // namespace kk
