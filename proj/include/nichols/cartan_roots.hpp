#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "nichols/groupoid.hpp"

namespace nichols {

struct Infinite {
  friend bool operator==(Infinite, Infinite) = default;
};

// N-tilde of a root: N_beta for non-Cartan roots, infinite for Cartan roots.
using ExtendedOrder = std::variant<std::int64_t, Infinite>;

struct RootDatum {
  RootVector beta;
  std::int64_t n_beta = 1;  // ord q(beta, beta)
  ExtendedOrder n_tilde = std::int64_t{1};
  bool is_cartan = false;
  std::vector<int> prefix;  // i_1 .. i_{j-1}
  int letter = 0;           // i_j
  ObjectId object = 0;      // object at which `letter` is tested for being Cartan
};

// One datum per positive root, in word order. A root is Cartan iff its
// letter is a Cartan vertex of the object reached by its prefix.
std::vector<RootDatum> cartan_roots(const GroupoidAtlas& atlas, const PositiveRoots& roots);

// Keeps the data with is_cartan set.
std::vector<RootDatum> cartan_only(const std::vector<RootDatum>& data);

enum class ConditionStatus { Holds, Fails, Unknown };

// Verdict of q(alpha, beta)^{N_beta} = 1 over all pairs of Cartan roots.
// Signs reduce to positive representatives: q(-a, b) is the inverse of
// q(a, b) and N_{-b} = N_b.
struct RootPowerCondition {
  ConditionStatus status = ConditionStatus::Unknown;
  std::optional<std::pair<RootVector, RootVector>> witness;  // (alpha, beta)
};

RootPowerCondition check_root_power_condition(const BraidingMatrix& q, const std::vector<RootDatum>& cartan);

// Throws InternalInconsistency if beta -> N_beta * beta is not injective on
// the given Cartan roots.
void check_scaling_injective(const std::vector<RootDatum>& cartan);

}  // namespace nichols
