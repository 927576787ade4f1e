#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/lattice.hpp"

// Quadratic verification loops. Each kernel has an OpenMP version and a
// serial reference with identical results (including which witness is
// reported: always the first violation in row-major order).
namespace nichols::kernels {

struct PairIndex {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const PairIndex&, const PairIndex&) = default;
};

// First (a, b) with q(roots[a], roots[b])^{orders[b]} != 1.
std::optional<PairIndex> root_power_violation_serial(const BraidingMatrix& q,
                                                     std::span<const RootVector> roots,
                                                     std::span<const std::int64_t> orders);
std::optional<PairIndex> root_power_violation(const BraidingMatrix& q, std::span<const RootVector> roots,
                                              std::span<const std::int64_t> orders);

// For every reflection r (with reflected vector betas[r]) and every g in the
// sorted set `system`: stability asks s_r(g) in system, integrality asks
// g - s_r(g) = b * betas[r] with b integral. `pairings` is row-major
// reflections x system, holding b where integral.
struct ReflectionScan {
  std::optional<PairIndex> unstable;
  std::optional<PairIndex> not_integral;
  std::vector<std::optional<std::int64_t>> pairings;
  friend bool operator==(const ReflectionScan&, const ReflectionScan&) = default;
};

ReflectionScan scan_reflections_serial(std::span<const IntMatrix> reflections,
                                       std::span<const RootVector> betas,
                                       std::span<const RootVector> system);
ReflectionScan scan_reflections(std::span<const IntMatrix> reflections, std::span<const RootVector> betas,
                                std::span<const RootVector> system);

// b with diff = b * beta, if it exists.
std::optional<std::int64_t> integral_multiple(const RootVector& diff, const RootVector& beta);

}  // namespace nichols::kernels
