#include "nichols/scaled_system.hpp"

#include <algorithm>

#include "nichols/errors.hpp"
#include "nichols/kernels.hpp"

namespace nichols {

bool ScaledRootSystem::contains_positive(const RootVector& v) const {
  return std::binary_search(positive.begin(), positive.end(), v);
}

std::vector<RootVector> ScaledRootSystem::full() const {
  std::vector<RootVector> out = positive;
  for (const auto& v : positive) out.push_back(-v);
  std::sort(out.begin(), out.end());
  return out;
}

ScaledRootSystem scaled_system(const std::vector<RootDatum>& cartan, int theta) {
  ScaledRootSystem omega;
  omega.ambient_rank = theta;
  for (const auto& d : cartan) {
    if (d.is_cartan) omega.positive.push_back(d.n_beta * d.beta);
  }
  std::sort(omega.positive.begin(), omega.positive.end());
  omega.positive.erase(std::unique(omega.positive.begin(), omega.positive.end()), omega.positive.end());
  omega.span_rank = span_rank(omega.positive, theta);
  return omega;
}

SimpleScaledRoots simple_scaled(const ScaledRootSystem& omega) {
  SimpleScaledRoots out;
  for (const auto& w : omega.positive) {
    bool decomposable = false;
    for (const auto& a : omega.positive) {
      const RootVector rest = w - a;
      if (is_nonnegative(rest) && omega.contains_positive(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.pi.push_back(w);
  }
  return out;
}

IntMatrix scaled_reflection(const GroupoidAtlas& atlas, ObjectId start, const RootDatum& datum) {
  if (!datum.is_cartan) {
    throw InternalInconsistency("no reflection for non-Cartan root " + format_vector(datum.beta));
  }
  const IntMatrix t = atlas.path_product(start, datum.prefix);
  IntMatrix t_inv = IntMatrix::identity(atlas.rank());
  {
    // t^{-1} = s_{i_k} ... s_{i_1} with each factor taken at its own object.
    std::vector<ObjectId> objects{start};
    for (int letter : datum.prefix) objects.push_back(atlas.edge(objects.back(), letter));
    for (std::size_t k = datum.prefix.size(); k-- > 0;) {
      t_inv = t_inv * atlas.reflection(objects[k], datum.prefix[k]);
    }
  }
  const IntMatrix s = t * atlas.reflection(datum.object, datum.letter) * t_inv;
  if (!(s * s).is_identity()) {
    throw InternalInconsistency("reflection for " + format_vector(datum.beta) + " is not an involution");
  }
  if (s.apply(datum.beta) != -datum.beta) {
    throw InternalInconsistency("reflection for " + format_vector(datum.beta) + " does not negate it");
  }
  return s;
}

std::int64_t coroot_pairing(const IntMatrix& s, const RootVector& beta, const RootVector& gamma) {
  const RootVector diff = gamma - s.apply(gamma);
  if (auto b = kernels::integral_multiple(diff, beta)) return *b;
  throw NotIntegral(format_vector(gamma) + " - s(" + format_vector(gamma) + ") is not an integral multiple of " +
                    format_vector(beta));
}

std::vector<ScaledReflection> scaled_reflections(const GroupoidAtlas& atlas, ObjectId start,
                                                 const std::vector<RootDatum>& cartan,
                                                 const ScaledRootSystem& omega) {
  std::vector<ScaledReflection> out;
  out.reserve(omega.positive.size());
  for (const auto& d : cartan) {
    if (!d.is_cartan) continue;
    out.push_back({d.n_beta * d.beta, scaled_reflection(atlas, start, d)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.root < b.root; });
  return out;
}

bool AxiomReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

AxiomReport verify_axioms(const ScaledRootSystem& omega, const SimpleScaledRoots& pi,
                          std::span<const ScaledReflection> reflections) {
  AxiomReport report;
  const int theta = omega.ambient_rank;

  AxiomCheck nonzero{"nonzero", true, ""};
  for (const auto& v : omega.positive) {
    if (is_zero(v) || !is_nonnegative(v)) {
      nonzero = {"nonzero", false, format_vector(v)};
      break;
    }
  }
  report.checks.push_back(nonzero);

  AxiomCheck spanning{"spanning", true, ""};
  const int pi_rank = span_rank(pi.pi, theta);
  if (pi_rank != static_cast<int>(pi.size()) || omega.span_rank != pi_rank) {
    spanning = {"spanning", false,
                "rank(Pi)=" + std::to_string(pi_rank) + " |Pi|=" + std::to_string(pi.size()) +
                    " rank(Omega)=" + std::to_string(omega.span_rank)};
  }
  report.checks.push_back(spanning);

  AxiomCheck base{"base", true, ""};
  for (const auto& v : omega.positive) {
    if (std::binary_search(pi.pi.begin(), pi.pi.end(), v)) continue;
    const bool reducible = std::any_of(pi.pi.begin(), pi.pi.end(), [&](const RootVector& w) {
      const RootVector rest = v - w;
      return is_nonnegative(rest) && omega.contains_positive(rest);
    });
    if (!reducible) {
      base = {"base", false, format_vector(v) + " is not a simple root plus a positive root"};
      break;
    }
  }
  report.checks.push_back(base);

  AxiomCheck reflection{"reflection", true, ""};
  if (reflections.size() != omega.positive.size()) {
    reflection = {"reflection", false, "expected one reflection per positive root"};
  }
  for (const auto& r : reflections) {
    if (!reflection.passed) break;
    if (!(r.matrix * r.matrix).is_identity() || r.matrix.apply(r.root) != -r.root ||
        r.matrix.determinant() != -1) {
      reflection = {"reflection", false, format_vector(r.root)};
    }
  }
  report.checks.push_back(reflection);

  std::vector<IntMatrix> matrices;
  std::vector<RootVector> betas;
  for (const auto& r : reflections) {
    matrices.push_back(r.matrix);
    betas.push_back(r.root);
  }
  const auto system = omega.full();
  const auto scan = kernels::scan_reflections(matrices, betas, system);

  AxiomCheck stability{"stability", true, ""};
  if (scan.unstable) {
    const auto& s = *scan.unstable;
    stability = {"stability", false,
                 "s_" + format_vector(betas[s.row]) + " maps " + format_vector(system[s.col]) + " to " +
                     format_vector(matrices[s.row].apply(system[s.col])) + " outside Omega"};
  }
  report.checks.push_back(stability);

  AxiomCheck integrality{"integrality", true, ""};
  if (scan.not_integral) {
    const auto& s = *scan.not_integral;
    integrality = {"integrality", false,
                   "pairing of " + format_vector(betas[s.row]) + " with " + format_vector(system[s.col]) +
                       " is not integral"};
  }
  report.checks.push_back(integrality);
  return report;
}

}  // namespace nichols
