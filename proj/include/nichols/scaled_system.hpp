#pragma once

#include <span>
#include <string>
#include <vector>

#include "nichols/cartan_roots.hpp"

namespace nichols {

// Omega_+ = {N_beta * beta : beta positive Cartan root}, kept sorted.
struct ScaledRootSystem {
  std::vector<RootVector> positive;
  int ambient_rank = 0;
  int span_rank = 0;

  bool empty() const noexcept { return positive.empty(); }
  bool contains_positive(const RootVector& v) const;
  // positive and its negatives, sorted.
  std::vector<RootVector> full() const;
};

ScaledRootSystem scaled_system(const std::vector<RootDatum>& cartan, int theta);

// Members of Omega_+ that are not a sum of two members, sorted
// lexicographically.
struct SimpleScaledRoots {
  std::vector<RootVector> pi;
  std::size_t size() const noexcept { return pi.size(); }
};

SimpleScaledRoots simple_scaled(const ScaledRootSystem& omega);

// s = t s_i t^{-1} with t = s_{i_1} ... s_{i_k} along the datum's witness path
// from `start`. Throws InternalInconsistency if the datum is not Cartan, the
// result is not an involution, or it does not negate the scaled root.
IntMatrix scaled_reflection(const GroupoidAtlas& atlas, ObjectId start, const RootDatum& datum);

// The integer b with gamma - s(gamma) = b * beta. Throws NotIntegral.
std::int64_t coroot_pairing(const IntMatrix& s, const RootVector& beta, const RootVector& gamma);

struct ScaledReflection {
  RootVector root;  // the positive scaled root it negates
  IntMatrix matrix;
};

// Reflections for every member of Omega_+, in the order of omega.positive.
std::vector<ScaledReflection> scaled_reflections(const GroupoidAtlas& atlas, ObjectId start,
                                                 const std::vector<RootDatum>& cartan,
                                                 const ScaledRootSystem& omega);

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool passed() const;
  const AxiomCheck* find(const std::string& name) const;
};

// Root system axioms for Omega: nonzero and symmetric, spanned by a linearly
// independent Pi that is a base, each s_beta a reflection negating beta,
// s_beta(Omega) = Omega, and integral coroot pairings.
AxiomReport verify_axioms(const ScaledRootSystem& omega, const SimpleScaledRoots& pi,
                          std::span<const ScaledReflection> reflections);

}  // namespace nichols
