#include "nichols/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "nichols/errors.hpp"

#ifndef NICHOLS_FIXTURE_DIR
#define NICHOLS_FIXTURE_DIR "fixtures"
#endif

namespace nichols {

std::filesystem::path default_fixture_dir() { return NICHOLS_FIXTURE_DIR; }

namespace {

[[noreturn]] void fail(const std::filesystem::path& file, int line, const std::string& msg) {
  throw ValidationError(file.string() + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

struct PendingLine {
  int number;
  std::string key;
  std::vector<std::string> args;
  std::string rest;
};

std::vector<RootVector> parse_roots(const PendingLine& l, int theta, const std::filesystem::path& file) {
  std::vector<RootVector> out;
  try {
    for (const auto& t : l.args) out.push_back(parse_compact(t, theta));
  } catch (const ValidationError& e) {
    fail(file, l.number, e.what());
  }
  return out;
}

SemisimpleType parse_type_at(const std::string& text, const PendingLine& l, const std::filesystem::path& file) {
  try {
    return SemisimpleType::parse(text);
  } catch (const ValidationError& e) {
    fail(file, l.number, e.what());
  }
}

Fixture build_fixture(const std::string& name, const std::vector<PendingLine>& lines,
                      const std::filesystem::path& dir, const std::filesystem::path& file) {
  Fixture f;
  f.name = name;
  for (const auto& l : lines) {
    if (l.key == "file") {
      if (l.args.size() != 1) fail(file, l.number, "expected 'file PATH'");
      f.file = dir / l.args[0];
      f.theta = read_matrix_file(f.file).matrix.rank();
    }
  }
  if (f.file.empty()) throw ValidationError(file.string() + ": fixture " + name + " has no file");

  for (const auto& l : lines) {
    if (l.key == "file") continue;
    if (l.key == "source") {
      f.source = l.rest;
    } else if (l.key == "type") {
      f.type = parse_type_at(l.rest, l, file);
    } else if (l.key == "disputed") {
      std::optional<SemisimpleType> table, derived;
      for (const auto& a : l.args) {
        if (a.rfind("table=", 0) == 0) table = parse_type_at(a.substr(6), l, file);
        else if (a.rfind("derived=", 0) == 0) derived = parse_type_at(a.substr(8), l, file);
        else fail(file, l.number, "expected table=T derived=T");
      }
      if (!table || !derived) fail(file, l.number, "expected table=T derived=T");
      f.disputed = DisputedType{*table, *derived};
    } else if (l.key == "cartan_count") {
      if (l.args.size() != 1) fail(file, l.number, "expected one count");
      f.cartan_count = std::stoul(l.args[0]);
    } else if (l.key == "cartan_roots") {
      f.cartan_roots = parse_roots(l, f.theta, file);
    } else if (l.key == "cartan_roots_contain") {
      f.cartan_roots_contain = parse_roots(l, f.theta, file);
    } else if (l.key == "n_beta") {
      if (l.args.empty()) fail(file, l.number, "expected a default order");
      f.n_beta = std::stoll(l.args[0]);
      for (std::size_t k = 1; k < l.args.size(); ++k) {
        const auto colon = l.args[k].find(':');
        if (colon == std::string::npos) fail(file, l.number, "expected ROOT:N, got " + l.args[k]);
        PendingLine one{l.number, l.key, {l.args[k].substr(0, colon)}, ""};
        f.n_beta_overrides.emplace_back(parse_roots(one, f.theta, file).front(),
                                        std::stoll(l.args[k].substr(colon + 1)));
      }
    } else if (l.key == "pi") {
      f.pi = parse_roots(l, f.theta, file);
    } else {
      fail(file, l.number, "unknown key '" + l.key + "'");
    }
  }
  if (f.type.has_value() == f.disputed.has_value()) {
    throw ValidationError(file.string() + ": fixture " + name + " needs exactly one of type, disputed");
  }
  return f;
}

std::set<RootVector> as_set(const std::vector<RootVector>& v) { return {v.begin(), v.end()}; }

std::string join_compact(const std::vector<RootVector>& vs) {
  std::string out;
  for (const auto& v : vs) out += (out.empty() ? "" : " ") + format_compact(v);
  return out;
}

std::vector<RootVector> difference(const std::set<RootVector>& a, const std::set<RootVector>& b) {
  std::vector<RootVector> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void compare_sets(const std::string& what, const std::vector<RootVector>& expected,
                  const std::vector<RootVector>& computed, std::vector<std::string>& failures) {
  const auto e = as_set(expected), c = as_set(computed);
  if (e == c) return;
  if (auto missing = difference(e, c); !missing.empty()) failures.push_back(what + " missing: " + join_compact(missing));
  if (auto extra = difference(c, e); !extra.empty()) failures.push_back(what + " unexpected: " + join_compact(extra));
}

}  // namespace

std::vector<Fixture> load_fixtures(const std::filesystem::path& dir) {
  const auto file = dir / "expectations.txt";
  std::ifstream in(file);
  if (!in) throw ValidationError("cannot open " + file.string());
  std::vector<Fixture> out;
  std::string current;
  std::vector<PendingLine> pending;
  std::set<std::string> names;
  const auto flush = [&] {
    if (!current.empty()) out.push_back(build_fixture(current, pending, dir, file));
    pending.clear();
  };
  int number = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    const std::string line = raw.substr(0, raw.find('#'));
    auto tokens = split(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "fixture") {
      flush();
      if (tokens.size() != 2) fail(file, number, "expected 'fixture NAME'");
      current = tokens[1];
      if (!names.insert(current).second) fail(file, number, "duplicate fixture " + current);
      continue;
    }
    if (current.empty()) fail(file, number, "'" + tokens[0] + "' outside a fixture block");
    PendingLine pl{number, tokens[0], {tokens.begin() + 1, tokens.end()}, ""};
    const auto start = line.find_first_not_of(" \t", line.find(tokens[0]) + tokens[0].size());
    if (start != std::string::npos) pl.rest = line.substr(start, line.find_last_not_of(" \t\r") - start + 1);
    pending.push_back(std::move(pl));
  }
  flush();
  return out;
}

std::vector<Fixture> fixtures() { return load_fixtures(default_fixture_dir()); }

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Disputed: return "DISPUTED";
    case Verdict::Error: return "ERROR";
  }
  return "ERROR";
}

FixtureResult verify_fixture(const Fixture& f, const AnalysisOptions& options) {
  FixtureResult r;
  r.name = f.name;
  Analysis an;
  try {
    an = analyze(read_matrix_file(f.file), options);
  } catch (const std::exception& e) {
    r.verdict = Verdict::Error;
    r.notes.push_back(e.what());
    return r;
  }
  r.type = an.type.name();

  std::vector<std::string> failures;
  std::vector<std::string> remarks;
  std::vector<RootVector> computed;
  for (const auto& d : an.roots.cartan) computed.push_back(d.beta);

  if (f.cartan_count && *f.cartan_count != computed.size()) {
    failures.push_back("|D_+| expected " + std::to_string(*f.cartan_count) + ", computed " +
                       std::to_string(computed.size()));
  }
  if (f.cartan_roots) compare_sets("D_+", *f.cartan_roots, computed, failures);
  if (!f.cartan_roots_contain.empty()) {
    const auto listed = as_set(f.cartan_roots_contain), found = as_set(computed);
    if (auto missing = difference(listed, found); !missing.empty()) {
      failures.push_back("D_+ missing listed roots: " + join_compact(missing));
    }
    if (auto extra = difference(found, listed); !extra.empty()) {
      remarks.push_back("D_+ roots beyond the listed ones: " + join_compact(extra));
    }
  }
  if (f.n_beta) {
    for (const auto& d : an.roots.cartan) {
      std::int64_t want = *f.n_beta;
      for (const auto& [v, n] : f.n_beta_overrides) {
        if (v == d.beta) want = n;
      }
      if (want != d.n_beta) {
        failures.push_back("N_beta of " + format_compact(d.beta) + " expected " + std::to_string(want) +
                           ", computed " + std::to_string(d.n_beta));
      }
    }
    for (const auto& [v, n] : f.n_beta_overrides) {
      if (std::find(computed.begin(), computed.end(), v) == computed.end()) {
        failures.push_back("N_beta given for " + format_compact(v) + ", which is not a Cartan root");
      }
    }
  }
  if (f.pi) compare_sets("Pi", *f.pi, an.pi.pi, failures);
  for (const auto& c : an.axioms.checks) {
    if (!c.passed) failures.push_back("axiom " + c.name + " fails: " + c.witness);
  }

  Verdict verdict = Verdict::Pass;
  if (f.type && !(an.type == *f.type)) {
    failures.push_back("type expected " + f.type->name() + ", computed " + an.type.name());
  }
  if (f.disputed) {
    const bool table = an.type == f.disputed->table, derived = an.type == f.disputed->derived;
    std::string which = table && derived ? "both" : table ? "table" : derived ? "derived" : "neither";
    remarks.push_back("candidates table=" + f.disputed->table.name() + " derived=" + f.disputed->derived.name() +
                      "; computed " + an.type.name() + " matches " + which);
    if (!table && !derived) failures.push_back("type matches neither disputed candidate");
    verdict = Verdict::Disputed;
  }
  remarks.push_back("root power condition " + status_name(an.condition.status) +
                    (an.form == InputForm::Diagram ? " (diagram representative)" : ""));

  if (!failures.empty()) verdict = Verdict::Fail;
  r.verdict = verdict;
  r.notes = failures;
  r.notes.insert(r.notes.end(), remarks.begin(), remarks.end());
  return r;
}

std::vector<FixtureResult> verify_tables(const std::vector<Fixture>& fs, const AnalysisOptions& options) {
  std::vector<FixtureResult> results(fs.size());
  const auto n = static_cast<std::ptrdiff_t>(fs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    results[static_cast<std::size_t>(i)] = verify_fixture(fs[static_cast<std::size_t>(i)], options);
  }
  return results;
}

bool has_failures(const std::vector<FixtureResult>& results) {
  return std::any_of(results.begin(), results.end(), [](const FixtureResult& r) {
    return r.verdict == Verdict::Fail || r.verdict == Verdict::Error;
  });
}

std::string format_results(const std::vector<FixtureResult>& results) {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& r : results) {
    ++counts[static_cast<int>(r.verdict)];
    os << std::left;
    os.width(9);
    os << verdict_name(r.verdict);
    os.width(static_cast<std::streamsize>(width + 2));
    os << r.name << (r.type.empty() ? "-" : r.type) << '\n';
    for (const auto& n : r.notes) os << "         " << n << '\n';
  }
  os << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " disputed, " << counts[3] << " error\n";
  return os.str();
}

}  // namespace nichols
