#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "nichols/analysis.hpp"
#include "nichols/catalog.hpp"
#include "nichols/errors.hpp"

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInput = 2, kBound = 3, kInternal = 4 };

struct Config {
  std::string input;
  std::string fixture_dir = nichols::default_fixture_dir().string();
  std::size_t max_objects = nichols::kDefaultMaxObjects;
  std::size_t max_roots = nichols::kDefaultMaxRoots;
  bool json = false;
  bool skip_31 = false;
  bool full_atlas = false;
};

nichols::AnalysisOptions options_of(const Config& c) {
  return {c.max_objects, c.max_roots, c.skip_31, c.full_atlas};
}

int run_analyze(const Config& c) {
  const auto input = nichols::read_matrix_file(c.input);
  const auto an = nichols::analyze(input, options_of(c));
  if (c.json) {
    std::cout << nichols::report_json(an).dump(2) << '\n';
  } else {
    std::cout << nichols::report_text(an);
  }
  return an.axioms.passed() ? kOk : kInternal;
}

int run_roots(const Config& c) {
  const auto input = nichols::read_matrix_file(c.input);
  const auto r = nichols::analyze_roots(input.matrix, options_of(c));
  if (c.json) {
    std::cout << nichols::roots_json(r, input.form).dump(2) << '\n';
  } else {
    std::cout << nichols::roots_text(r, input.form);
  }
  return kOk;
}

int run_verify(const Config& c) {
  const auto fs = nichols::load_fixtures(c.fixture_dir);
  const auto results = nichols::verify_tables(fs, options_of(c));
  if (c.json) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      out.push_back({{"fixture", r.name}, {"verdict", nichols::verdict_name(r.verdict)}, {"type", r.type},
                     {"notes", r.notes}});
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << nichols::format_results(results);
  }
  return nichols::has_failures(results) ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie algebras of Nichols algebras of diagonal type"};
  app.require_subcommand(1);
  Config c;

  const auto add_common = [&c](CLI::App* sub) {
    sub->add_option("--max-objects", c.max_objects, "bound on the number of groupoid objects")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-roots", c.max_roots, "bound on the number of positive roots")->check(CLI::PositiveNumber);
    sub->add_flag("--json", c.json, "machine-readable output");
    sub->add_flag("--skip-31,--skip_31", c.skip_31, "do not check the root power condition");
    sub->add_flag("--full-atlas", c.full_atlas, "explore every object of the groupoid before analysing");
  };

  auto* analyze = app.add_subcommand("analyze", "full report for a braiding matrix file");
  analyze->add_option("input", c.input, "matrix or diagram file")->required();
  add_common(analyze);

  auto* roots = app.add_subcommand("roots", "positive roots, Cartan roots and N_beta");
  roots->add_option("input", c.input, "matrix or diagram file")->required();
  add_common(roots);

  auto* verify = app.add_subcommand("verify-tables", "check the bundled fixtures against their expectations");
  verify->add_option("--fixtures", c.fixture_dir, "fixture directory");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (analyze->parsed()) return run_analyze(c);
    if (roots->parsed()) return run_roots(c);
    return run_verify(c);
  } catch (const nichols::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const nichols::BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << '\n';
    return kBound;
  } catch (const std::overflow_error& e) {
    std::cerr << "bound exceeded: " << e.what() << '\n';
    return kBound;
  } catch (const nichols::InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kInternal;
  }
}
