#include "nichols/cyclotomic.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "nichols/errors.hpp"

namespace nichols {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ValidationError("malformed root of unity '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a / g, b, &out)) {
    throw std::overflow_error("root of unity denominator overflow");
  }
  return out < 0 ? -out : out;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  const __int128 p = static_cast<__int128>(a) * b;
  __int128 r = p % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

UnityRoot::UnityRoot(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ValidationError("root of unity with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num = floor_mod(num, den);
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

UnityRoot UnityRoot::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (parse_int(text, text) != 1) {
      throw ValidationError("root of unity must be written a/b (or 1), got '" +
                            std::string(text) + "'");
    }
    return {};
  }
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den <= 0) throw ValidationError("denominator must be positive in '" + std::string(text) + "'");
  return {num, den};
}

UnityRoot UnityRoot::operator*(const UnityRoot& other) const {
  const std::int64_t l = checked_lcm(den_, other.den_);
  const std::int64_t a = mulmod(num_, l / den_, l);
  const std::int64_t b = mulmod(other.num_, l / other.den_, l);
  return {a >= l - b ? a - (l - b) : a + b, l};
}

UnityRoot UnityRoot::pow(std::int64_t k) const { return {mulmod(num_, k, den_), den_}; }

std::string UnityRoot::str() const {
  if (is_one()) return "1";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const UnityRoot& u) { return os << u.str(); }

}  // namespace nichols
