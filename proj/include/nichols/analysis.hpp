#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "nichols/lie_type.hpp"
#include "nichols/matrix_io.hpp"

namespace nichols {

struct AnalysisOptions {
  std::size_t max_objects = kDefaultMaxObjects;
  std::size_t max_roots = kDefaultMaxRoots;
  bool skip_root_power = false;
  // Materialize every object of the groupoid so that objects_count is |X|.
  bool full_atlas = false;
};

std::shared_ptr<const GroupoidAtlas> make_atlas(const BraidingMatrix& q, const AnalysisOptions& options);

// Positive roots and their Cartan data at one object of an atlas.
struct RootAnalysis {
  std::shared_ptr<const GroupoidAtlas> atlas;
  ObjectId start = 0;
  PositiveRoots roots;
  std::vector<RootDatum> data;    // all positive roots, word order
  std::vector<RootDatum> cartan;  // the Cartan ones, word order

  const BraidingMatrix& matrix() const { return atlas->object(start); }
};

enum class TypeStatus { Valid, HypothesisViolated, Unchecked };

struct Analysis {
  RootAnalysis roots;
  InputForm form = InputForm::Matrix;
  RootPowerCondition condition;
  ScaledRootSystem omega;
  SimpleScaledRoots pi;
  std::vector<ScaledReflection> reflections;
  AxiomReport axioms;
  LieCartanMatrix a;
  SemisimpleType type = SemisimpleType::zero();
  TypeStatus status = TypeStatus::Unchecked;
  std::vector<std::string> warnings;
};

RootAnalysis analyze_roots(std::shared_ptr<const GroupoidAtlas> atlas, ObjectId start,
                           const AnalysisOptions& options = {});
RootAnalysis analyze_roots(const BraidingMatrix& q, const AnalysisOptions& options = {});

// The full pipeline at one object of an existing atlas.
Analysis analyze_at(std::shared_ptr<const GroupoidAtlas> atlas, ObjectId start, const AnalysisOptions& options = {},
                    InputForm form = InputForm::Matrix);
Analysis analyze(const BraidingMatrix& q, const AnalysisOptions& options = {}, InputForm form = InputForm::Matrix);
Analysis analyze(const MatrixInput& input, const AnalysisOptions& options = {});

std::string status_name(ConditionStatus s);
std::string status_name(TypeStatus s);

nlohmann::ordered_json input_json(const BraidingMatrix& q, InputForm form);
nlohmann::ordered_json roots_json(const RootAnalysis& r, InputForm form);
nlohmann::ordered_json report_json(const Analysis& a);

std::string roots_text(const RootAnalysis& r, InputForm form = InputForm::Matrix);
std::string report_text(const Analysis& a);

}  // namespace nichols
