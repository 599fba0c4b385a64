#include "hindlab/bohr.hpp"

#include <algorithm>
#include <cctype>

#include "hindlab/error.hpp"

namespace hindlab {

namespace {

using boost::multiprecision::cpp_int;

BigRational frac(const BigRational& x) {
  cpp_int q = boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x);
  BigRational f = x - BigRational(q);
  if (f < 0) f += 1;
  return f;
}

BigRational circle_distance(const BigRational& x, const BigRational& y) {
  BigRational d = x > y ? x - y : y - x;
  return std::min(d, BigRational(1) - d);
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

struct Decimal {
  BigRational value;
  std::size_t digits = 0;
};

Decimal parse_decimal(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto dot = body.find('.');
  const std::string_view whole = body.substr(0, dot);
  const std::string_view fraction = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  if ((!whole.empty() && !all_digits(whole)) || (!fraction.empty() && !all_digits(fraction)) ||
      (whole.empty() && fraction.empty())) {
    throw Error(Errc::invalid_argument, "not a decimal number: '" + std::string(text) + "'");
  }
  // cpp_int reads a leading 0 as an octal prefix.
  std::string digits = std::string(whole) + std::string(fraction);
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
  cpp_int num(digits.empty() ? "0" : digits);
  cpp_int den = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(fraction.size()));
  BigRational v(num, den);
  if (negative) v = -v;
  return {v, fraction.size()};
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text).value;
  const Decimal p = parse_decimal(text.substr(0, slash));
  const Decimal q = parse_decimal(text.substr(slash + 1));
  if (p.digits != 0 || q.digits != 0 || q.value == 0) {
    throw Error(Errc::invalid_argument, "not a fraction p/q: '" + std::string(text) + "'");
  }
  return p.value / q.value;
}

Rotation Rotation::from_decimal(std::string_view text) {
  const Decimal d = parse_decimal(text);
  const cpp_int scale = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(d.digits));
  return {d.value, BigRational(cpp_int(1), 2 * scale)};
}

WindowedSet bohr_set(const Rotation& rotation, const Arc& arc, std::int64_t lo, std::int64_t hi) {
  if (!(arc.lo >= 0 && arc.lo < arc.hi && arc.hi <= 1)) {
    throw Error(Errc::invalid_argument, "arc must satisfy 0 <= lo < hi <= 1");
  }
  if (arc.hi - arc.lo >= 1) throw Error(Errc::invalid_argument, "arc length must be < 1");
  if (rotation.radius < 0) throw Error(Errc::invalid_argument, "negative uncertainty");
  return WindowedSet::from_predicate(lo, hi, [&](std::int64_t n) {
    const BigRational x = frac(rotation.alpha * n);
    if (rotation.radius != 0 && n != 0) {
      const BigRational err = rotation.radius * (n < 0 ? -n : n);
      if (circle_distance(x, arc.lo) <= err || circle_distance(x, frac(arc.hi)) <= err) {
        throw Error(Errc::precision_loss,
                    "n = " + std::to_string(n) + " lies within the alpha uncertainty of an arc endpoint");
      }
    }
    return x >= arc.lo && x < arc.hi;
  });
}

}  // namespace hindlab
