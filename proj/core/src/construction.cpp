#include "kk/construction.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace kk {

namespace {

constexpr std::uint64_t kMaxParamsK = std::uint64_t{1} << 30;  // wSize must fit in 64 bits

std::uint64_t element_mask(const Params& p) {
  return p.m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << p.m) - 1;
}

void require_block_support(const Params& p) {
  if (p.m > 64) {
    throw std::invalid_argument("block operations need m <= 64, got m=" +
                                std::to_string(p.m));
  }
}

void require_member_of_h(Block a, const Params& p) {
  require_block_support(p);
  if ((a.bits & ~element_mask(p)) != 0) {
    throw std::invalid_argument("block has elements outside V = {1.." +
                                std::to_string(p.m) + "}");
  }
  if (std::popcount(a.bits) != static_cast<int>(2 * p.k)) {
    throw std::invalid_argument("block is not a 2k-subset of V");
  }
}

// Smallest-to-largest walk over all r-subsets of nbits positions (Gosper).
// fn returns false to stop the walk early.
template <typename Fn>
void for_each_combination_word(unsigned nbits, unsigned r, Fn fn) {
  if (r == 0 || r > nbits || nbits > 63) {
    throw std::logic_error("for_each_combination_word: bad arguments");
  }
  std::uint64_t v = (std::uint64_t{1} << r) - 1;
  const std::uint64_t last = v << (nbits - r);
  while (true) {
    if (!fn(v)) break;
    if (v == last) break;
    const std::uint64_t u = v & (~v + 1);
    const std::uint64_t w = v + u;
    v = w | (((v ^ w) / u) >> 2);
  }
}

}  // namespace

Params make_params(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("make_params: k must be positive");
  if (k > kMaxParamsK) {
    throw std::invalid_argument("make_params: k too large, |W| would overflow");
  }
  Params p;
  p.k = k;
  p.m = 4 * k;
  p.w_size = p.m * (p.m - 1) / 2;
  p.d = p.w_size - 1;
  p.prime_power = is_prime_power(k);
  return p;
}

Block make_block(std::initializer_list<unsigned> elements) {
  Block b;
  for (unsigned e : elements) {
    if (e < 1 || e > 64) throw std::invalid_argument("element out of range 1..64");
    b.bits |= std::uint64_t{1} << (e - 1);
  }
  return b;
}

std::vector<unsigned> block_elements(Block a, const Params& p) {
  std::vector<unsigned> out;
  for (unsigned e = 1; e <= p.m; ++e) {
    if ((a.bits >> (e - 1)) & 1) out.push_back(e);
  }
  return out;
}

std::string format_block(Block a, const Params& p) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (unsigned e : block_elements(a, p)) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

unsigned block_size(Block a) { return static_cast<unsigned>(std::popcount(a.bits)); }

Block complement(Block a, const Params& p) {
  require_member_of_h(a, p);
  return Block{~a.bits & element_mask(p)};
}

Block canonicalize(Block a, const Params& p) {
  require_member_of_h(a, p);
  return (a.bits & 1) ? a : complement(a, p);
}

unsigned intersection_size(Block a, Block b) {
  return static_cast<unsigned>(std::popcount(a.bits & b.bits));
}

std::size_t pair_index(unsigned a, unsigned b, const Params& p) {
  if (a == b) throw std::invalid_argument("pair_index: a == b");
  if (a < 1 || b < 1 || a > p.m || b > p.m) {
    throw std::invalid_argument("pair_index: element out of range 1..m");
  }
  if (a > b) std::swap(a, b);
  return static_cast<std::size_t>(b - 1) * (b - 2) / 2 + (a - 1);
}

std::pair<unsigned, unsigned> pair_unindex(std::size_t i, const Params& p) {
  if (i >= p.w_size) throw std::invalid_argument("pair_unindex: index out of range");
  // Largest b with (b-1)(b-2)/2 <= i, found from a float estimate and fixed up.
  auto tri = [](std::uint64_t b) { return (b - 1) * (b - 2) / 2; };
  std::uint64_t b = static_cast<std::uint64_t>((3.0 + std::sqrt(8.0 * static_cast<double>(i) + 1.0)) / 2.0);
  if (b < 2) b = 2;
  while (b > 2 && tri(b) > i) --b;
  while (tri(b + 1) <= i) ++b;
  const unsigned a = static_cast<unsigned>(i - tri(b) + 1);
  return {a, static_cast<unsigned>(b)};
}

std::size_t CrossVector::popcount() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

CrossVector cross_set(Block a, const Params& p) {
  require_member_of_h(a, p);
  CrossVector v(p.w_size);
  // Pairs {x,b} stream out in exactly colexicographic index order, so the
  // running index is the pair index.
  std::size_t idx = 0;
  for (unsigned b = 2; b <= p.m; ++b) {
    const bool in_b = (a.bits >> (b - 1)) & 1;
    for (unsigned x = 1; x < b; ++x, ++idx) {
      const bool in_x = (a.bits >> (x - 1)) & 1;
      if (in_x != in_b) v.set(idx);
    }
  }
  return v;
}

std::uint64_t dist_sq_direct(const CrossVector& x, const CrossVector& y) {
  if (x.bit_count() != y.bit_count()) {
    throw std::invalid_argument("dist_sq_direct: vector lengths differ");
  }
  std::uint64_t total = 0;
  const auto xw = x.words(), yw = y.words();
  for (std::size_t i = 0; i < xw.size(); ++i) {
    total += static_cast<std::uint64_t>(std::popcount(xw[i] ^ yw[i]));
  }
  return total;
}

std::uint64_t and_popcount(const CrossVector& x, const CrossVector& y) {
  if (x.bit_count() != y.bit_count()) {
    throw std::invalid_argument("and_popcount: vector lengths differ");
  }
  std::uint64_t total = 0;
  const auto xw = x.words(), yw = y.words();
  for (std::size_t i = 0; i < xw.size(); ++i) {
    total += static_cast<std::uint64_t>(std::popcount(xw[i] & yw[i]));
  }
  return total;
}

std::uint64_t dist_sq_closed(std::uint64_t k, std::uint64_t p) {
  if (p > 2 * k) throw std::invalid_argument("dist_sq_closed: p out of range 0..2k");
  if (k > kMaxParamsK) throw std::invalid_argument("dist_sq_closed: k too large");
  const std::uint64_t v = p >= k ? p - k : k - p;
  return 4 * (k * k - v * v);
}

std::vector<Block> all_blocks(const Params& p) {
  std::vector<Block> out;
  for_each_block(p, [&](Block b) {
    out.push_back(b);
    return true;
  });
  return out;
}

void for_each_block(const Params& p, const std::function<bool(Block)>& fn) {
  require_block_support(p);
  for_each_combination_word(static_cast<unsigned>(p.m), static_cast<unsigned>(2 * p.k),
                            [&](std::uint64_t w) { return fn(Block{w}); });
}

void for_each_point(const Params& p, std::uint64_t cap_k,
                    const std::function<void(Block, const CrossVector&)>& fn) {
  if (p.k > cap_k) {
    throw CapExceeded("enumeration cap exceeded: k=" + std::to_string(p.k) +
                      " > enumerate-k cap " + std::to_string(cap_k));
  }
  require_block_support(p);
  // Canonical blocks are exactly {1} plus a (2k-1)-subset of {2..m}; walking
  // the subsets in ascending word order keeps the whole stream ascending.
  for_each_combination_word(static_cast<unsigned>(p.m - 1),
                            static_cast<unsigned>(2 * p.k - 1),
                            [&](std::uint64_t sub) {
                              const Block b{(sub << 1) | 1};
                              fn(b, cross_set(b, p));
                              return true;
                            });
}

PointSet enumerate_points(const Params& p, std::uint64_t cap_k) {
  PointSet ps;
  ps.params = p;
  for_each_point(p, cap_k, [&](Block b, const CrossVector& v) {
    ps.blocks.push_back(b);
    ps.points.push_back(v);
  });
  return ps;
}

}  // namespace kk
