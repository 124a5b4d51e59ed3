#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace rectcover {

// Always normalized: den > 0, gcd(|num|, den) = 1.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(std::int64_t num, std::int64_t den = 1);
Rational rational_add(Rational a, Rational b);
Rational rational_mul(Rational a, Rational b);
Rational rational_scale(Rational a, std::int64_t k);

bool rational_less(Rational a, Rational b);
inline bool rational_le(Rational a, Rational b) { return !rational_less(b, a); }

double to_double(Rational a);

// Accepts integers ("7", "-3"), fractions ("2/3"), and decimals ("0.25").
Rational parse_rational(std::string_view text);
std::string to_string(Rational a);

}  // namespace rectcover
