#include "kk/exact.hpp"

#include <algorithm>
#include <utility>

namespace kk {

ExactInt div_exact(const ExactInt& a, const ExactInt& b) {
  if (b == 0) throw std::logic_error("div_exact: division by zero");
  ExactInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) {
    throw std::logic_error("div_exact: " + b.str() + " does not divide " + a.str());
  }
  return q;
}

ExactRatio make_ratio(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw std::invalid_argument("make_ratio: zero denominator");
  if (den < 0) return ExactRatio(-num, -den);
  return ExactRatio(num, den);
}

ExactInt binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  ExactInt result = 1;
  // After step i the accumulator equals C(n-r+i, i), an integer, so the
  // division by i is exact at every step.
  for (std::uint64_t i = 1; i <= r; ++i) {
    result *= ExactInt(n - r + i);
    result = div_exact(result, ExactInt(i));
  }
  return result;
}

std::optional<PrimePowerWitness> is_prime_power(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("is_prime_power: k must be positive");
  if (k == 1) return std::nullopt;  // needs a genuine prime power

  std::uint64_t p = 0;
  if (k % 2 == 0) {
    p = 2;
  } else {
    for (std::uint64_t f = 3; f * f <= k; f += 2) {
      if (k % f == 0) {
        p = f;
        break;
      }
    }
  }
  if (p == 0) return PrimePowerWitness{k, 1};  // k itself is prime

  std::uint64_t rest = k;
  unsigned e = 0;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return std::nullopt;  // a second prime factor survives
  return PrimePowerWitness{p, e};
}

std::string to_decimal(const ExactRatio& x, unsigned digits) {
  if (digits > kMaxDecimalDigits) {
    throw std::invalid_argument("to_decimal: digits exceeds cap of " +
                                std::to_string(kMaxDecimalDigits));
  }
  ExactInt num = numerator(x);
  const ExactInt den = denominator(x);
  const bool negative = num < 0;
  if (negative) num = -num;

  const ExactInt scaled = num * boost::multiprecision::pow(ExactInt(10), digits);
  ExactInt q, r;
  boost::multiprecision::divide_qr(scaled, den, q, r);
  const ExactInt twice = r * 2;
  if (twice > den || (twice == den && boost::multiprecision::bit_test(q, 0))) ++q;

  std::string s = q.str();
  if (digits > 0) {
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (negative && q != 0) s.insert(0, "-");
  return s;
}

std::string to_fraction(const ExactRatio& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

ExactInt floor_ratio(const ExactRatio& x) {
  ExactInt q, r;
  boost::multiprecision::divide_qr(numerator(x), denominator(x), q, r);
  if (r != 0 && numerator(x) < 0) --q;  // divide_qr truncates toward zero
  return q;
}

ExactInt largest_int_below(const ExactRatio& x) {
  if (denominator(x) == 1) return numerator(x) - 1;
  return floor_ratio(x);
}

}  // namespace kk
