#pragma once

#include <string>
#include <vector>

#include "nichols/scaled_system.hpp"

namespace nichols {

// a_ii = 2, a_ij = -max{m : m w_i + w_j in Omega_+} for i != j, indexed by
// the order of Pi.
struct LieCartanMatrix {
  std::vector<std::vector<int>> a;

  int size() const noexcept { return static_cast<int>(a.size()); }
  int operator()(int i, int j) const { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  friend bool operator==(const LieCartanMatrix&, const LieCartanMatrix&) = default;
};

LieCartanMatrix cartan_matrix_a(const SimpleScaledRoots& pi, const ScaledRootSystem& omega);

struct SimpleFactor {
  char family = 'A';
  int rank = 1;
  friend auto operator<=>(const SimpleFactor&, const SimpleFactor&) = default;
};

// Product of simple types in canonical order (rank descending, then family),
// with B1, C1 -> A1, C2 -> B2, D2 -> A1xA1, D3 -> A3 applied. An explicit
// zero flag marks the empty root system.
class SemisimpleType {
 public:
  static SemisimpleType zero();
  explicit SemisimpleType(std::vector<SimpleFactor> factors);

  bool is_zero() const noexcept { return zero_; }
  const std::vector<SimpleFactor>& factors() const noexcept { return factors_; }
  int rank() const;
  std::int64_t positive_root_count() const;

  // "A5", "B2xB2", "ZERO"
  std::string name() const;

  // Accepts names such as "C2xB2", "A_1 x A_1", "E6", "ZERO".
  static SemisimpleType parse(const std::string& text);

  friend bool operator==(const SemisimpleType&, const SemisimpleType&) = default;

 private:
  SemisimpleType() = default;
  std::vector<SimpleFactor> factors_;
  bool zero_ = false;
};

std::int64_t positive_root_count(const SimpleFactor& f);

// The standard matrix of a simple type in the same convention as
// cartan_matrix_a: a_ij = -2 or -3 when w_i is the short end of the edge.
LieCartanMatrix template_matrix(const SimpleFactor& f);

// Splits a into connected components and matches each against the finite
// templates by a canonical encoding of the labelled tree. Throws
// Unclassifiable if a component matches nothing.
SemisimpleType classify(const LieCartanMatrix& a);

// classify, followed by the check that the factors' positive-root counts sum
// to omega_size. Throws Unclassifiable on mismatch.
SemisimpleType classify(const LieCartanMatrix& a, std::size_t omega_size);

}  // namespace nichols
