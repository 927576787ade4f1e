#pragma once

#include <map>
#include <sstream>
#include <set>
#include <string>
#include <vector>

#include "nichols/analysis.hpp"
#include "nichols/catalog.hpp"

namespace test_support {

inline std::filesystem::path fixture_path(const std::string& name) {
  return nichols::default_fixture_dir() / (name + ".nq");
}

inline nichols::MatrixInput load(const std::string& name) { return nichols::read_matrix_file(fixture_path(name)); }

inline nichols::Analysis analyze_fixture(const std::string& name, nichols::AnalysisOptions options = {}) {
  return nichols::analyze(load(name), options);
}

inline std::set<nichols::RootVector> compact_set(const std::string& list, int theta) {
  std::set<nichols::RootVector> out;
  std::istringstream in(list);
  for (std::string t; in >> t;) out.insert(nichols::parse_compact(t, theta));
  return out;
}

inline std::set<nichols::RootVector> as_set(const std::vector<nichols::RootVector>& v) { return {v.begin(), v.end()}; }

inline std::set<nichols::RootVector> cartan_set(const nichols::RootAnalysis& r) {
  std::set<nichols::RootVector> out;
  for (const auto& d : r.cartan) out.insert(d.beta);
  return out;
}

inline nichols::BraidingMatrix matrix_of(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<nichols::UnityRoot>> e;
  for (const auto& row : rows) {
    e.emplace_back();
    for (const auto& x : row) e.back().push_back(nichols::UnityRoot::parse(x));
  }
  return nichols::BraidingMatrix(std::move(e));
}

// Symmetric Cartan-type braiding q_ij = q^{d_i c_ij} with q = exp(2 pi i / n).
inline nichols::BraidingMatrix symmetric_cartan(const std::vector<std::vector<int>>& c, const std::vector<int>& d,
                                                std::int64_t n) {
  std::vector<std::vector<nichols::UnityRoot>> e(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) e[i].emplace_back(d[i] * c[i][j], n);
  }
  return nichols::BraidingMatrix(std::move(e));
}

inline std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : nichols::fixtures()) out.push_back(f.name);
  return out;
}

}  // namespace test_support
