#include "nichols/cartan_roots.hpp"

#include <map>

#include "nichols/errors.hpp"
#include "nichols/kernels.hpp"

namespace nichols {

std::vector<RootDatum> cartan_roots(const GroupoidAtlas& atlas, const PositiveRoots& roots) {
  const BraidingMatrix& q = atlas.object(roots.word.start);
  std::vector<RootDatum> out;
  out.reserve(roots.size());
  for (std::size_t j = 0; j < roots.size(); ++j) {
    const auto& w = roots.witnesses[j];
    RootDatum d;
    d.beta = roots.roots[j];
    d.n_beta = bilinear_form(q, d.beta, d.beta).order();
    d.is_cartan = atlas.object(w.object).is_cartan_vertex(w.letter);
    d.n_tilde = d.is_cartan ? ExtendedOrder{Infinite{}} : ExtendedOrder{d.n_beta};
    d.prefix = roots.prefix(j);
    d.letter = w.letter;
    d.object = w.object;
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<RootDatum> cartan_only(const std::vector<RootDatum>& data) {
  std::vector<RootDatum> out;
  for (const auto& d : data) {
    if (d.is_cartan) out.push_back(d);
  }
  return out;
}

RootPowerCondition check_root_power_condition(const BraidingMatrix& q, const std::vector<RootDatum>& cartan) {
  std::vector<RootVector> roots;
  std::vector<std::int64_t> orders;
  for (const auto& d : cartan) {
    roots.push_back(d.beta);
    orders.push_back(d.n_beta);
  }
  RootPowerCondition out;
  if (auto bad = kernels::root_power_violation(q, roots, orders)) {
    out.status = ConditionStatus::Fails;
    out.witness = std::pair{roots[bad->row], roots[bad->col]};
  } else {
    out.status = ConditionStatus::Holds;
  }
  return out;
}

void check_scaling_injective(const std::vector<RootDatum>& cartan) {
  std::map<RootVector, RootVector> seen;
  for (const auto& d : cartan) {
    auto [it, fresh] = seen.emplace(d.n_beta * d.beta, d.beta);
    if (!fresh) {
      throw InternalInconsistency("Cartan roots " + format_vector(it->second) + " and " + format_vector(d.beta) +
                                  " scale to the same vector");
    }
  }
}

}  // namespace nichols
