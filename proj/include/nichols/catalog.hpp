#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nichols/analysis.hpp"

namespace nichols {

struct DisputedType {
  SemisimpleType table;
  SemisimpleType derived;
};

struct Fixture {
  std::string name;
  std::filesystem::path file;
  std::string source;
  int theta = 0;
  std::optional<SemisimpleType> type;
  std::optional<DisputedType> disputed;
  std::optional<std::size_t> cartan_count;
  std::optional<std::vector<RootVector>> cartan_roots;  // exact set
  std::vector<RootVector> cartan_roots_contain;
  std::optional<std::int64_t> n_beta;  // default for every Cartan root
  std::vector<std::pair<RootVector, std::int64_t>> n_beta_overrides;
  std::optional<std::vector<RootVector>> pi;
};

std::filesystem::path default_fixture_dir();

// Reads <dir>/expectations.txt and checks that every referenced matrix file
// parses and every listed vector has length theta. Throws ValidationError.
std::vector<Fixture> load_fixtures(const std::filesystem::path& dir);
std::vector<Fixture> fixtures();

enum class Verdict { Pass, Fail, Disputed, Error };
std::string verdict_name(Verdict v);

struct FixtureResult {
  std::string name;
  Verdict verdict = Verdict::Error;
  std::string type;                // computed, empty on error
  std::vector<std::string> notes;  // mismatches and remarks, deterministic order
};

FixtureResult verify_fixture(const Fixture& f, const AnalysisOptions& options = {});
// Fixtures are analysed in parallel; results keep the input order.
std::vector<FixtureResult> verify_tables(const std::vector<Fixture>& fs, const AnalysisOptions& options = {});

// True iff some result is Fail or Error.
bool has_failures(const std::vector<FixtureResult>& results);
std::string format_results(const std::vector<FixtureResult>& results);

}  // namespace nichols
