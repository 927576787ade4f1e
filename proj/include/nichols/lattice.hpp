#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nichols {

// A vector of the root lattice Z^theta in the basis of simple roots.
using RootVector = std::vector<std::int64_t>;

RootVector unit_vector(int theta, int i);
RootVector operator+(const RootVector& a, const RootVector& b);
RootVector operator-(const RootVector& a, const RootVector& b);
RootVector operator-(const RootVector& a);
RootVector operator*(std::int64_t k, const RootVector& a);

bool is_nonnegative(const RootVector& v);
bool is_zero(const RootVector& v);

// Indices i with v[i] != 0 (0-based).
std::vector<int> support(const RootVector& v);

// "[1,2,2,1,1]"
std::string format_vector(const RootVector& v);

// Exponent notation with 1-based indices: alpha_1 + 2 alpha_2 -> "12^2",
// exponents above 9 are braced: "3^44^85^{12}6^4". Zero prints as "0".
std::string format_compact(const RootVector& v);

// Inverse of format_compact for a known rank. Throws ValidationError.
RootVector parse_compact(const std::string& text, int theta);

// Dense square integer matrix acting on column vectors.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}
  static IntMatrix identity(int n);

  int size() const noexcept { return n_; }
  std::int64_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * n_ + c]; }
  std::int64_t operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * n_ + c];
  }

  RootVector column(int c) const;
  RootVector apply(std::span<const std::int64_t> v) const;
  IntMatrix operator*(const IntMatrix& other) const;

  std::int64_t trace() const;
  // Exact (fraction-free Bareiss elimination).
  std::int64_t determinant() const;
  bool is_identity() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<std::int64_t> data_;
};

// Rank of the integer span of the given vectors.
int span_rank(std::span<const RootVector> vectors, int theta);

}  // namespace nichols
