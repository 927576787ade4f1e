#include "nichols/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "nichols/errors.hpp"

namespace nichols {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ValidationError("line " + std::to_string(line) + ": " + what);
}

int parse_index(const std::string& tok, int theta, int line) {
  int value = 0;
  try {
    std::size_t used = 0;
    value = std::stoi(tok, &used);
    if (used != tok.size()) fail(line, "bad index '" + tok + "'");
  } catch (const std::logic_error&) {
    fail(line, "bad index '" + tok + "'");
  }
  if (value < 1 || value > theta) fail(line, "index " + tok + " out of range 1.." + std::to_string(theta));
  return value - 1;
}

UnityRoot parse_root(const std::string& tok, int line) {
  try {
    return UnityRoot::parse(tok);
  } catch (const ValidationError& e) {
    fail(line, e.what());
  }
}

}  // namespace

MatrixInput parse_matrix(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw ValidationError("empty matrix file");
  const auto& head = lines[0];
  if (head.tokens.size() != 1 || (head.tokens[0] != "matrix" && head.tokens[0] != "diagram")) {
    fail(head.number, "expected 'matrix' or 'diagram'");
  }
  const bool diagram = head.tokens[0] == "diagram";
  if (lines.size() < 2 || lines[1].tokens.size() != 2 || lines[1].tokens[0] != "theta") {
    fail(lines.size() < 2 ? head.number : lines[1].number, "expected 'theta N'");
  }
  int theta = 0;
  try {
    theta = std::stoi(lines[1].tokens[1]);
  } catch (const std::logic_error&) {
    fail(lines[1].number, "bad rank");
  }
  if (theta < 1) fail(lines[1].number, "rank must be positive");
  const auto n = static_cast<std::size_t>(theta);

  try {
    if (!diagram) {
      if (lines.size() != n + 2) {
        fail(lines.back().number, "expected exactly " + std::to_string(theta) + " matrix rows");
      }
      std::vector<std::vector<UnityRoot>> entries;
      for (std::size_t r = 0; r < n; ++r) {
        const auto& line = lines[r + 2];
        if (line.tokens.size() != n) {
          fail(line.number, "expected " + std::to_string(theta) + " entries");
        }
        auto& row = entries.emplace_back();
        for (const auto& tok : line.tokens) row.push_back(parse_root(tok, line.number));
      }
      return {BraidingMatrix(std::move(entries)), InputForm::Matrix};
    }

    std::vector<UnityRoot> vertices(n);
    std::vector<bool> seen(n, false);
    std::map<std::pair<int, int>, UnityRoot> edges;
    for (std::size_t k = 2; k < lines.size(); ++k) {
      const auto& line = lines[k];
      const auto& t = line.tokens;
      if (t[0] == "v" && t.size() == 3) {
        const int i = parse_index(t[1], theta, line.number);
        if (seen[static_cast<std::size_t>(i)]) fail(line.number, "vertex listed twice");
        seen[static_cast<std::size_t>(i)] = true;
        vertices[static_cast<std::size_t>(i)] = parse_root(t[2], line.number);
      } else if (t[0] == "e" && t.size() == 4) {
        int i = parse_index(t[1], theta, line.number);
        int j = parse_index(t[2], theta, line.number);
        if (i == j) fail(line.number, "edge from a vertex to itself");
        if (i > j) std::swap(i, j);
        if (!edges.emplace(std::pair{i, j}, parse_root(t[3], line.number)).second) {
          fail(line.number, "edge listed twice");
        }
      } else {
        fail(line.number, "expected 'v i a/b' or 'e i j a/b'");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!seen[i]) throw ValidationError("vertex " + std::to_string(i + 1) + " has no label");
    }
    return {BraidingMatrix::from_diagram(vertices, edges), InputForm::Diagram};
  } catch (const std::overflow_error& e) {
    throw ValidationError(e.what());
  }
}

MatrixInput parse_matrix_string(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

MatrixInput read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  return parse_matrix(in);
}

std::string write_matrix(const BraidingMatrix& q) {
  std::ostringstream out;
  out << "matrix\ntheta " << q.rank() << '\n';
  for (int i = 0; i < q.rank(); ++i) {
    for (int j = 0; j < q.rank(); ++j) out << (j ? " " : "") << q(i, j);
    out << '\n';
  }
  return out.str();
}

}  // namespace nichols
