#include "rectcover/rational.hpp"

#include <cstdlib>
#include <limits>

#include "rectcover/cost.hpp"
#include "rectcover/errors.hpp"

namespace rectcover {

namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational normalize(i128 num, i128 den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr i128 lim = std::numeric_limits<std::int64_t>::max();
  if (num > lim || num < -lim || den > lim) throw ValidationError("rational overflow");
  return Rational{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

}  // namespace

Rational make_rational(std::int64_t num, std::int64_t den) { return normalize(num, den); }

Rational rational_add(Rational a, Rational b) {
  return normalize(static_cast<i128>(a.num) * b.den + static_cast<i128>(b.num) * a.den,
                   static_cast<i128>(a.den) * b.den);
}

Rational rational_mul(Rational a, Rational b) {
  return normalize(static_cast<i128>(a.num) * b.num, static_cast<i128>(a.den) * b.den);
}

Rational rational_scale(Rational a, std::int64_t k) {
  return normalize(static_cast<i128>(a.num) * k, a.den);
}

bool rational_less(Rational a, Rational b) {
  return static_cast<i128>(a.num) * b.den < static_cast<i128>(b.num) * a.den;
}

double to_double(Rational a) { return static_cast<double>(a.num) / static_cast<double>(a.den); }

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> Rational { throw ParseError(msg, pos); };

  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&](std::int64_t& out) -> std::size_t {
    std::size_t n = 0;
    out = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (out > (std::numeric_limits<std::int64_t>::max() - 9) / 10)
        throw ParseError("number too large", pos);
      out = out * 10 + (text[pos] - '0');
      ++pos;
      ++n;
    }
    return n;
  };

  std::int64_t whole = 0;
  if (read_digits(whole) == 0) return fail("expected a number");

  Rational result;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::int64_t den = 0;
    if (read_digits(den) == 0) return fail("expected a denominator");
    if (den == 0) return fail("zero denominator");
    result = make_rational(whole, den);
  } else if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::size_t start = pos;
    std::int64_t frac = 0;
    std::size_t digits = read_digits(frac);
    if (digits == 0) return fail("expected fractional digits");
    if (digits > 18) throw ParseError("too many fractional digits", start);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < digits; ++i) den *= 10;
    result = normalize(static_cast<i128>(whole) * den + frac, den);
  } else {
    result = make_rational(whole, 1);
  }
  if (pos != text.size()) return fail("trailing characters after number");
  if (negative) result.num = -result.num;
  return result;
}

std::string to_string(Rational a) {
  if (a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

CostParams make_cost_params(Rational alpha, Rational beta) {
  if (alpha.num < 0 || beta.num < 0) throw ValidationError("cost parameters must be non-negative");
  if (alpha.num == 0 && beta.num == 0) throw ValidationError("alpha and beta cannot both be zero");
  return CostParams{alpha, beta};
}

CostScale make_scale(const CostParams& params) {
  i128 g = gcd128(params.alpha.den, params.beta.den);
  i128 den = static_cast<i128>(params.alpha.den) / g * params.beta.den;
  i128 a = static_cast<i128>(params.alpha.num) * (den / params.alpha.den);
  i128 b = static_cast<i128>(params.beta.num) * (den / params.beta.den);
  constexpr i128 lim = std::numeric_limits<std::int64_t>::max();
  if (a > lim || b > lim || den > lim) throw ValidationError("cost scale overflow");
  return CostScale{static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
                   static_cast<std::int64_t>(den)};
}

Rational from_scaled(std::int64_t scaled, const CostScale& s) {
  return make_rational(scaled, s.den);
}

Rational rect_cost(const Rect& r, const CostParams& params) {
  return rational_add(params.alpha, rational_scale(params.beta, r.area()));
}

Rational cover_cost(std::size_t count, Coord total_area, const CostParams& params) {
  Rational creation = rational_scale(params.alpha, static_cast<std::int64_t>(count));
  Rational area = rational_scale(params.beta, total_area);
  return rational_add(creation, area);
}

}  // namespace rectcover
