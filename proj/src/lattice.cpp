#include "nichols/lattice.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

#include "nichols/errors.hpp"

namespace nichols {

RootVector unit_vector(int theta, int i) {
  RootVector v(static_cast<std::size_t>(theta), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in root lattice arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in root lattice arithmetic");
  return r;
}

}  // namespace

RootVector operator+(const RootVector& a, const RootVector& b) {
  RootVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

RootVector operator-(const RootVector& a, const RootVector& b) {
  RootVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], checked_mul(-1, b[i]));
  return out;
}

RootVector operator-(const RootVector& a) {
  RootVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_mul(-1, a[i]);
  return out;
}

RootVector operator*(std::int64_t k, const RootVector& a) {
  RootVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_mul(k, a[i]);
  return out;
}

bool is_nonnegative(const RootVector& v) {
  for (auto x : v) {
    if (x < 0) return false;
  }
  return true;
}

bool is_zero(const RootVector& v) {
  for (auto x : v) {
    if (x != 0) return false;
  }
  return true;
}

std::vector<int> support(const RootVector& v) {
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::string format_vector(const RootVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string format_compact(const RootVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    out += std::to_string(i + 1);
    if (v[i] == 1) continue;
    if (v[i] >= 2 && v[i] <= 9) {
      out += '^' + std::to_string(v[i]);
    } else {
      out += "^{" + std::to_string(v[i]) + "}";
    }
  }
  return out.empty() ? "0" : out;
}

RootVector parse_compact(const std::string& text, int theta) {
  if (theta > 9) throw ValidationError("compact root notation needs rank <= 9");
  RootVector v(static_cast<std::size_t>(theta), 0);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw ValidationError("bad root '" + text + "': " + why);
  };
  if (text == "0") return v;
  while (pos < text.size()) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0') fail("expected index 1-9");
    const int index = c - '1';
    if (index >= theta) fail("index out of range");
    if (v[static_cast<std::size_t>(index)] != 0) fail("repeated index");
    ++pos;
    std::int64_t coeff = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (pos < text.size() && text[pos] == '{') {
        const auto close = text.find('}', pos);
        if (close == std::string::npos) fail("unterminated brace");
        try {
          coeff = std::stoll(text.substr(pos + 1, close - pos - 1));
        } catch (const std::exception&) {
          fail("bad exponent");
        }
        pos = close + 1;
      } else if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff = text[pos] - '0';
        ++pos;
      } else {
        fail("missing exponent");
      }
    }
    v[static_cast<std::size_t>(index)] += coeff;
  }
  return v;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RootVector IntMatrix::column(int c) const {
  RootVector out(static_cast<std::size_t>(n_));
  for (int r = 0; r < n_; ++r) out[static_cast<std::size_t>(r)] = (*this)(r, c);
  return out;
}

RootVector IntMatrix::apply(std::span<const std::int64_t> v) const {
  RootVector out(static_cast<std::size_t>(n_), 0);
  for (int r = 0; r < n_; ++r) {
    std::int64_t acc = 0;
    for (int c = 0; c < n_; ++c) acc = checked_add(acc, checked_mul((*this)(r, c), v[static_cast<std::size_t>(c)]));
    out[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  IntMatrix out(n_);
  for (int r = 0; r < n_; ++r) {
    for (int k = 0; k < n_; ++k) {
      const std::int64_t a = (*this)(r, k);
      if (a == 0) continue;
      for (int c = 0; c < n_; ++c) out(r, c) = checked_add(out(r, c), checked_mul(a, other(k, c)));
    }
  }
  return out;
}

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

std::int64_t IntMatrix::determinant() const {
  if (n_ == 0) return 1;
  std::vector<__int128> m(data_.begin(), data_.end());
  auto at = [&](int r, int c) -> __int128& { return m[static_cast<std::size_t>(r) * n_ + c]; };
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n_ - 1; ++k) {
    if (at(k, k) == 0) {
      int swap = -1;
      for (int r = k + 1; r < n_; ++r) {
        if (at(r, k) != 0) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return 0;
      for (int c = 0; c < n_; ++c) std::swap(at(k, c), at(swap, c));
      sign = -sign;
    }
    for (int r = k + 1; r < n_; ++r) {
      for (int c = k + 1; c < n_; ++c) {
        at(r, c) = (at(r, c) * at(k, k) - at(r, k) * at(k, c)) / prev;
      }
    }
    prev = at(k, k);
  }
  return static_cast<std::int64_t>(sign * at(n_ - 1, n_ - 1));
}

bool IntMatrix::is_identity() const { return *this == identity(n_); }

int span_rank(std::span<const RootVector> vectors, int theta) {
  std::vector<std::vector<__int128>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) rows.emplace_back(v.begin(), v.end());
  int rank = 0;
  for (int col = 0; col < theta && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
    const auto& p = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      auto& row = rows[r];
      const __int128 f = row[static_cast<std::size_t>(col)];
      if (f == 0) continue;
      const __int128 pv = p[static_cast<std::size_t>(col)];
      __int128 g = 0;
      for (int c = 0; c < theta; ++c) {
        auto& x = row[static_cast<std::size_t>(c)];
        x = x * pv - f * p[static_cast<std::size_t>(c)];
        const auto ax = static_cast<std::int64_t>(x < 0 ? -x : x);
        g = std::gcd(static_cast<std::int64_t>(g), ax);
      }
      if (g > 1) {
        for (auto& x : row) x /= g;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace nichols
