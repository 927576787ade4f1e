#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace nichols {

// A root of unity exp(2*pi*i*num/den), kept in canonical form:
// gcd(num, den) == 1 and 0 <= num < den. The identity is 0/1.
class UnityRoot {
 public:
  constexpr UnityRoot() = default;
  // Any integers with den != 0; the value is reduced modulo 1.
  UnityRoot(std::int64_t num, std::int64_t den);

  // Accepts "a/b" (reduced or not, a may be negative) and "1" for 0/1.
  static UnityRoot parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  // Multiplicative order, i.e. the canonical denominator.
  std::int64_t order() const noexcept { return den_; }
  bool is_one() const noexcept { return num_ == 0; }

  UnityRoot operator*(const UnityRoot& other) const;
  UnityRoot& operator*=(const UnityRoot& other) { return *this = *this * other; }
  UnityRoot pow(std::int64_t k) const;
  UnityRoot inverse() const { return pow(-1); }

  std::string str() const;

  friend bool operator==(const UnityRoot&, const UnityRoot&) = default;
  friend auto operator<=>(const UnityRoot&, const UnityRoot&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline UnityRoot times(const UnityRoot& u, const UnityRoot& v) { return u * v; }
inline UnityRoot power(const UnityRoot& u, std::int64_t k) { return u.pow(k); }
inline std::int64_t order(const UnityRoot& u) { return u.order(); }

std::ostream& operator<<(std::ostream& os, const UnityRoot& u);

// lcm with overflow detection (throws std::overflow_error).
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

// (a * b) mod m in [0, m) for any signed a, b and m >= 1.
std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m);

}  // namespace nichols

template <>
struct std::hash<nichols::UnityRoot> {
  std::size_t operator()(const nichols::UnityRoot& u) const noexcept {
    return std::hash<std::int64_t>{}(u.num()) * 31u ^ std::hash<std::int64_t>{}(u.den());
  }
};
