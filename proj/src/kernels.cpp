#include "nichols/kernels.hpp"

#include <algorithm>
#include <limits>

namespace nichols::kernels {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

bool row_violates(const BraidingMatrix& q, std::span<const RootVector> roots,
                  std::span<const std::int64_t> orders, std::size_t a, std::size_t& col) {
  for (std::size_t b = 0; b < roots.size(); ++b) {
    if (!bilinear_form(q, roots[a], roots[b]).pow(orders[b]).is_one()) {
      col = b;
      return true;
    }
  }
  return false;
}

struct RowResult {
  std::size_t unstable = kNone;
  std::size_t not_integral = kNone;
};

RowResult scan_row(const IntMatrix& s, const RootVector& beta, std::span<const RootVector> system,
                   std::optional<std::int64_t>* pairings) {
  RowResult out;
  for (std::size_t g = 0; g < system.size(); ++g) {
    const RootVector image = s.apply(system[g]);
    if (out.unstable == kNone && !std::binary_search(system.begin(), system.end(), image)) {
      out.unstable = g;
    }
    pairings[g] = integral_multiple(system[g] - image, beta);
    if (out.not_integral == kNone && !pairings[g]) out.not_integral = g;
  }
  return out;
}

}  // namespace

std::optional<std::int64_t> integral_multiple(const RootVector& diff, const RootVector& beta) {
  std::optional<std::int64_t> b;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] == 0) {
      if (diff[i] != 0) return std::nullopt;
      continue;
    }
    if (diff[i] % beta[i] != 0) return std::nullopt;
    const std::int64_t k = diff[i] / beta[i];
    if (b && *b != k) return std::nullopt;
    b = k;
  }
  return b;
}

std::optional<PairIndex> root_power_violation_serial(const BraidingMatrix& q,
                                                     std::span<const RootVector> roots,
                                                     std::span<const std::int64_t> orders) {
  for (std::size_t a = 0; a < roots.size(); ++a) {
    std::size_t col = 0;
    if (row_violates(q, roots, orders, a, col)) return PairIndex{a, col};
  }
  return std::nullopt;
}

std::optional<PairIndex> root_power_violation(const BraidingMatrix& q, std::span<const RootVector> roots,
                                              std::span<const std::int64_t> orders) {
  const auto n = static_cast<std::ptrdiff_t>(roots.size());
  std::vector<std::size_t> first(roots.size(), kNone);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t a = 0; a < n; ++a) {
    std::size_t col = 0;
    if (row_violates(q, roots, orders, static_cast<std::size_t>(a), col)) first[static_cast<std::size_t>(a)] = col;
  }
  for (std::size_t a = 0; a < first.size(); ++a) {
    if (first[a] != kNone) return PairIndex{a, first[a]};
  }
  return std::nullopt;
}

ReflectionScan scan_reflections_serial(std::span<const IntMatrix> reflections,
                                       std::span<const RootVector> betas,
                                       std::span<const RootVector> system) {
  ReflectionScan out;
  out.pairings.resize(reflections.size() * system.size());
  for (std::size_t r = 0; r < reflections.size(); ++r) {
    const RowResult row = scan_row(reflections[r], betas[r], system, out.pairings.data() + r * system.size());
    if (!out.unstable && row.unstable != kNone) out.unstable = PairIndex{r, row.unstable};
    if (!out.not_integral && row.not_integral != kNone) out.not_integral = PairIndex{r, row.not_integral};
  }
  return out;
}

ReflectionScan scan_reflections(std::span<const IntMatrix> reflections, std::span<const RootVector> betas,
                                std::span<const RootVector> system) {
  ReflectionScan out;
  out.pairings.resize(reflections.size() * system.size());
  std::vector<RowResult> rows(reflections.size());
  const auto n = static_cast<std::ptrdiff_t>(reflections.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t r = 0; r < n; ++r) {
    const auto ur = static_cast<std::size_t>(r);
    rows[ur] = scan_row(reflections[ur], betas[ur], system, out.pairings.data() + ur * system.size());
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!out.unstable && rows[r].unstable != kNone) out.unstable = PairIndex{r, rows[r].unstable};
    if (!out.not_integral && rows[r].not_integral != kNone) out.not_integral = PairIndex{r, rows[r].not_integral};
  }
  return out;
}

}  // namespace nichols::kernels
