#include "nichols/analysis.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "nichols/errors.hpp"

namespace nichols {

using nlohmann::ordered_json;

std::shared_ptr<const GroupoidAtlas> make_atlas(const BraidingMatrix& q, const AnalysisOptions& options) {
  if (options.full_atlas) return std::make_shared<const GroupoidAtlas>(explore(q, options.max_objects));
  return std::make_shared<const GroupoidAtlas>(q, options.max_objects);
}

RootAnalysis analyze_roots(std::shared_ptr<const GroupoidAtlas> atlas, ObjectId start,
                           const AnalysisOptions& options) {
  RootAnalysis r;
  r.atlas = std::move(atlas);
  r.start = start;
  r.roots = positive_roots(*r.atlas, longest_word(*r.atlas, start, options.max_roots));
  r.data = cartan_roots(*r.atlas, r.roots);
  r.cartan = cartan_only(r.data);
  return r;
}

RootAnalysis analyze_roots(const BraidingMatrix& q, const AnalysisOptions& options) {
  return analyze_roots(make_atlas(q, options), 0, options);
}

namespace {

void cross_check_pairings(const Analysis& an) {
  const auto by_root = [](const ScaledReflection& r, const RootVector& v) { return r.root < v; };
  for (int i = 0; i < an.a.size(); ++i) {
    const RootVector& wi = an.pi.pi[static_cast<std::size_t>(i)];
    auto it = std::lower_bound(an.reflections.begin(), an.reflections.end(), wi, by_root);
    if (it == an.reflections.end() || it->root != wi) {
      throw InternalInconsistency("no reflection for simple scaled root " + format_vector(wi));
    }
    for (int j = 0; j < an.a.size(); ++j) {
      const auto b = coroot_pairing(it->matrix, wi, an.pi.pi[static_cast<std::size_t>(j)]);
      if (b != an.a(i, j)) {
        throw InternalInconsistency("a_" + std::to_string(i + 1) + std::to_string(j + 1) + " = " +
                                    std::to_string(an.a(i, j)) + " but the coroot pairing gives " +
                                    std::to_string(b));
      }
    }
  }
}

}  // namespace

Analysis analyze_at(std::shared_ptr<const GroupoidAtlas> atlas, ObjectId start, const AnalysisOptions& options,
                    InputForm form) {
  Analysis an;
  an.form = form;
  an.roots = analyze_roots(std::move(atlas), start, options);
  const auto& cartan = an.roots.cartan;
  const BraidingMatrix& q = an.roots.matrix();
  check_scaling_injective(cartan);

  if (options.skip_root_power) {
    an.condition.status = ConditionStatus::Unknown;
  } else {
    an.condition = check_root_power_condition(q, cartan);
  }

  an.omega = scaled_system(cartan, q.rank());
  an.pi = simple_scaled(an.omega);
  an.reflections = scaled_reflections(*an.roots.atlas, start, cartan, an.omega);
  an.axioms = verify_axioms(an.omega, an.pi, an.reflections);
  for (const auto& c : an.axioms.checks) {
    if (!c.passed) an.warnings.push_back("root system axiom '" + c.name + "' fails: " + c.witness);
  }

  if (!an.omega.empty()) {
    an.a = cartan_matrix_a(an.pi, an.omega);
    cross_check_pairings(an);
  }
  an.type = classify(an.a, an.omega.positive.size());

  switch (an.condition.status) {
    case ConditionStatus::Holds: an.status = TypeStatus::Valid; break;
    case ConditionStatus::Fails: an.status = TypeStatus::HypothesisViolated; break;
    case ConditionStatus::Unknown: an.status = TypeStatus::Unchecked; break;
  }

  if (!q.diagram().connected()) {
    an.warnings.push_back("Dynkin diagram is disconnected; the type is the product over its components");
  }
  if (form == InputForm::Diagram && an.condition.status != ConditionStatus::Unknown) {
    an.warnings.push_back(
        "input is a diagram; the root power condition was checked for the representative "
        "q_ij = qt_ij, q_ji = 1 (i < j)");
  }
  if (an.condition.status == ConditionStatus::Fails) {
    const auto& [x, y] = *an.condition.witness;
    an.warnings.push_back("root power condition fails at alpha = " + format_compact(x) + ", beta = " +
                          format_compact(y) + "; type computed, but the isomorphism hypothesis is violated");
  }
  if (an.condition.status == ConditionStatus::Unknown) {
    an.warnings.push_back("root power condition not checked");
  }
  return an;
}

Analysis analyze(const BraidingMatrix& q, const AnalysisOptions& options, InputForm form) {
  return analyze_at(make_atlas(q, options), 0, options, form);
}

Analysis analyze(const MatrixInput& input, const AnalysisOptions& options) {
  return analyze(input.matrix, options, input.form);
}

std::string status_name(ConditionStatus s) {
  switch (s) {
    case ConditionStatus::Holds: return "HOLDS";
    case ConditionStatus::Fails: return "FAILS";
    case ConditionStatus::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::string status_name(TypeStatus s) {
  switch (s) {
    case TypeStatus::Valid: return "valid";
    case TypeStatus::HypothesisViolated: return "computed, but root power hypothesis violated";
    case TypeStatus::Unchecked: return "computed, root power hypothesis unchecked";
  }
  return "";
}

namespace {

ordered_json vector_json(const RootVector& v) { return ordered_json(v); }

ordered_json vectors_json(const std::vector<RootVector>& vs) {
  ordered_json out = ordered_json::array();
  for (const auto& v : vs) out.push_back(vector_json(v));
  return out;
}

ordered_json diagram_json(const DynkinDiagram& d) {
  ordered_json vertices = ordered_json::array();
  for (const auto& v : d.vertices) vertices.push_back(v.str());
  ordered_json edges = ordered_json::array();
  for (const auto& [key, label] : d.edges) {
    edges.push_back({{"i", key.first + 1}, {"j", key.second + 1}, {"label", label.str()}});
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

ordered_json datum_json(const RootDatum& d) {
  return {{"beta", vector_json(d.beta)}, {"compact", format_compact(d.beta)}, {"n_beta", d.n_beta},
          {"cartan", d.is_cartan}};
}

ordered_json cartan_json(const std::vector<RootDatum>& cartan) {
  ordered_json out = ordered_json::array();
  for (const auto& d : cartan) {
    out.push_back({{"beta", vector_json(d.beta)}, {"compact", format_compact(d.beta)}, {"n_beta", d.n_beta}});
  }
  return out;
}

ordered_json positive_json(const std::vector<RootDatum>& data) {
  ordered_json out = ordered_json::array();
  for (const auto& d : data) out.push_back(datum_json(d));
  return out;
}

std::string kind_name(InputForm form) { return form == InputForm::Diagram ? "diagram" : "matrix"; }

}  // namespace

ordered_json input_json(const BraidingMatrix& q, InputForm form) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : q.entries()) {
    ordered_json r = ordered_json::array();
    for (const auto& e : row) r.push_back(e.str());
    rows.push_back(r);
  }
  return {{"theta", q.rank()}, {"form", kind_name(form)}, {"matrix", rows}, {"diagram", diagram_json(q.diagram())}};
}

ordered_json roots_json(const RootAnalysis& r, InputForm form) {
  return {{"input", input_json(r.matrix(), form)},
          {"objects_count", r.atlas->size()},
          {"objects_complete", r.atlas->complete()},
          {"positive_roots", positive_json(r.data)},
          {"cartan_roots", cartan_json(r.cartan)}};
}

ordered_json report_json(const Analysis& a) {
  ordered_json out = roots_json(a.roots, a.form);
  ordered_json condition = {{"status", status_name(a.condition.status)}, {"witness", nullptr}};
  if (a.condition.witness) {
    condition["witness"] = {vector_json(a.condition.witness->first), vector_json(a.condition.witness->second)};
  }
  out["condition_31"] = condition;
  out["omega_plus"] = vectors_json(a.omega.positive);
  out["pi"] = vectors_json(a.pi.pi);
  out["cartan_matrix"] = a.a.a;
  if (a.a.a.empty()) out["cartan_matrix"] = ordered_json::array();
  out["type"] = a.type.name();
  out["type_status"] = status_name(a.status);
  ordered_json axioms = ordered_json::array();
  for (const auto& c : a.axioms.checks) {
    axioms.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  }
  out["axioms"] = axioms;
  out["warnings"] = a.warnings;
  if (a.warnings.empty()) out["warnings"] = ordered_json::array();
  return out;
}

namespace {

void write_input(std::ostream& os, const BraidingMatrix& q, InputForm form) {
  os << "input: theta " << q.rank() << " (" << kind_name(form) << ")\n";
  for (const auto& row : q.entries()) {
    os << " ";
    for (const auto& e : row) os << ' ' << std::setw(6) << e.str();
    os << '\n';
  }
  const auto& d = q.diagram();
  os << "diagram vertices:";
  for (const auto& v : d.vertices) os << ' ' << v.str();
  os << "\ndiagram edges:";
  if (d.edges.empty()) os << " none";
  for (const auto& [key, label] : d.edges) os << ' ' << key.first + 1 << '-' << key.second + 1 << ':' << label.str();
  os << '\n';
}

void write_roots(std::ostream& os, const RootAnalysis& r) {
  os << "objects: " << r.atlas->size() << (r.atlas->complete() ? " (all of X)" : " (visited)") << '\n';
  os << "positive roots: " << r.data.size() << '\n';
  std::size_t width = 4;
  for (const auto& d : r.data) width = std::max(width, format_compact(d.beta).size());
  os << "  " << std::left << std::setw(static_cast<int>(width)) << "root" << "  " << std::right << std::setw(4)
     << "N" << "  cartan\n";
  for (const auto& d : r.data) {
    os << "  " << std::left << std::setw(static_cast<int>(width)) << format_compact(d.beta) << "  " << std::right
       << std::setw(4) << d.n_beta << "  " << (d.is_cartan ? "yes" : "no") << '\n';
  }
  os << "Cartan roots: " << r.cartan.size() << '\n';
  for (const auto& d : r.cartan) os << "  " << format_compact(d.beta) << "  N=" << d.n_beta << '\n';
}

void write_vectors(std::ostream& os, const std::vector<RootVector>& vs) {
  for (const auto& v : vs) os << "  " << format_vector(v) << "  " << format_compact(v) << '\n';
}

}  // namespace

std::string roots_text(const RootAnalysis& r, InputForm form) {
  std::ostringstream os;
  write_input(os, r.matrix(), form);
  write_roots(os, r);
  return os.str();
}

std::string report_text(const Analysis& a) {
  std::ostringstream os;
  write_input(os, a.roots.matrix(), a.form);
  write_roots(os, a.roots);
  os << "root power condition: " << status_name(a.condition.status);
  if (a.condition.witness) {
    os << " at (" << format_compact(a.condition.witness->first) << ", "
       << format_compact(a.condition.witness->second) << ')';
  }
  os << '\n';
  os << "Omega_+: " << a.omega.positive.size() << '\n';
  write_vectors(os, a.omega.positive);
  os << "Pi: " << a.pi.size() << '\n';
  write_vectors(os, a.pi.pi);
  os << "Cartan matrix:\n";
  for (const auto& row : a.a.a) {
    os << " ";
    for (int x : row) os << ' ' << std::setw(2) << x;
    os << '\n';
  }
  os << "type: " << a.type.name() << '\n';
  os << "status: " << status_name(a.status) << '\n';
  os << "axioms:";
  for (const auto& c : a.axioms.checks) os << ' ' << c.name << '=' << (c.passed ? "ok" : "FAIL");
  os << '\n';
  for (const auto& w : a.warnings) os << "warning: " << w << '\n';
  return os.str();
}

}  // namespace nichols
