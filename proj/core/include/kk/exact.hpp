#pragma once

// Exact integer and rational arithmetic used by every other component.
// No floating point is involved anywhere in a bound computation; decimal
// output is rendered directly from the exact rational.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace kk {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRatio = boost::multiprecision::cpp_rational;

// Maximum number of digits to_decimal will render after the point.
inline constexpr unsigned kMaxDecimalDigits = 50;

// Thrown when an operation would exceed a configured enumeration or search
// cap. The message names the cap and its value.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Checked exact division: throws std::logic_error unless b divides a.
ExactInt div_exact(const ExactInt& a, const ExactInt& b);

// A rational num/den in lowest terms with a positive denominator.
// Accepts any nonzero den, negative included.
ExactRatio make_ratio(const ExactInt& num, const ExactInt& den);

// C(n,r); returns 0 for r > n. Multiplicative evaluation: every prefix
// product of the rising form is divisible, so intermediates stay small.
ExactInt binomial(std::uint64_t n, std::uint64_t r);

// Witness that k = base^exponent with base prime and exponent >= 1.
struct PrimePowerWitness {
  std::uint64_t base = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePowerWitness&, const PrimePowerWitness&) = default;
};

// Trial-division prime-power test. 1 is not a prime power; 0 is rejected.
std::optional<PrimePowerWitness> is_prime_power(std::uint64_t k);

// Correctly rounded (round-half-even) fixed-point rendering with `digits`
// digits after the point. digits = 0 gives a bare integer string.
std::string to_decimal(const ExactRatio& x, unsigned digits);

// Lowest-terms "numerator/denominator" string; the "/" is always present.
std::string to_fraction(const ExactRatio& x);

// Greatest integer <= x.
ExactInt floor_ratio(const ExactRatio& x);

// Greatest integer strictly below x (x - 1 when x is an integer).
ExactInt largest_int_below(const ExactRatio& x);

}  // namespace kk
