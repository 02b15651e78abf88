#include <unistd.h>

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "cube/ccc.hpp"
#include "matrix.hpp"
#include "session.hpp"

namespace {

using namespace cube;
using namespace cube::cli;

int emit(const Reply& r) {
  (r.status == kOk ? std::cout : std::cerr) << r.text;
  return r.status;
}

// Loads files and assumptions ahead of a command. A failure ends the command.
int prepare(Session& s, const std::vector<std::string>& loads, const std::vector<std::string>& assumptions,
            bool lenient) {
  for (const std::string& source : loads) {
    Reply r = s.load(source);
    if (r.status == kUsage || (r.status != kOk && !lenient)) return emit(r);
    if (r.status != kOk) std::cerr << r.text;
  }
  for (const std::string& decl : assumptions) {
    Reply r = s.assume(decl);
    if (r.status != kOk) return emit(r);
  }
  return kOk;
}

int run_check(Session& s, const std::string& input) {
  std::error_code ec;
  if (!input.empty() && std::filesystem::is_regular_file(input, ec)) return emit(s.check_file(input));
  return emit(s.check_expr(input));
}

int run_matrix() {
  const auto actual = typability_matrix();
  const auto expected = expected_matrix();
  std::cout << render_matrix(actual);
  int status = kOk;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    for (std::size_t j = 0; j < kWitnessNames.size(); ++j) {
      if (actual[i].typable[j] == expected[i].typable[j]) continue;
      std::cerr << "mismatch at " << corner_name(actual[i].corner) << '/' << kWitnessNames[j] << ": expected "
                << (expected[i].typable[j] ? 'Y' : 'N') << ", got " << (actual[i].typable[j] ? 'Y' : 'N') << '\n';
      status = kSemantic;
    }
  }
  return status;
}

int run_repl(Session& s) {
  const bool interactive = isatty(STDIN_FILENO) != 0;
  std::string line;
  int last = kOk;
  while (true) {
    if (interactive) std::cout << "cube> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    Reply r = s.execute(line);
    if (r.quit) break;
    last = r.status;
    (r.status == kOk ? std::cout : std::cerr) << r.text << std::flush;
  }
  if (interactive) std::cout << '\n';
  // Piped sessions report the status of their last command.
  return interactive ? kOk : last;
}

int run_ccc_laws(const std::string& path, std::size_t cases, std::uint64_t seed) {
  bool ok = false;
  std::string text = read_file(path, ok);
  if (!ok) {
    std::cerr << "error: cannot read " << path << '\n';
    return kUsage;
  }
  auto p = parse_presentation(text);
  if (!p) {
    std::cerr << path << ": " << p.error() << '\n';
    return kUsage;
  }
  int status = kOk;
  for (const LawResult& law : check_laws(*p, cases, seed)) {
    if (law.passed()) {
      std::cout << "PASS " << law.law << " (" << law.cases << " cases)\n";
    } else {
      std::cout << "FAIL " << law.law << " (" << law.failures << " of " << law.cases << " cases)";
      if (!law.counterexample.empty()) std::cout << ": " << law.counterexample;
      std::cout << '\n';
      status = kSemantic;
    }
  }
  RoundTrip rt = round_trip(*p);
  std::cout << (rt.ok ? "PASS" : "FAIL") << " round-trip";
  if (!rt.detail.empty()) std::cout << ": " << rt.detail;
  std::cout << '\n';
  return rt.ok ? status : kSemantic;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cube: a pure type system checker and evaluator", "cube"};
  app.require_subcommand(1);

  Settings settings;
  std::string strategy = "normal";
  app.add_option("--spec", settings.spec, "type system specification")
      ->check(CLI::IsMember(cube::spec_names()))
      ->capture_default_str();
  app.add_option("--fuel", settings.fuel, "reduction step budget")
      ->envname("CUBE_FUEL")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--strategy", strategy, "cbv, cbn or normal")
      ->check(CLI::IsMember({"cbv", "cbn", "normal"}))
      ->capture_default_str();
  app.add_flag("--trace", settings.trace, "print reduction steps");

  std::vector<std::string> loads, assumptions;
  std::string input;

  auto* check = app.add_subcommand("check", "type-check an expression or a definition file");
  check->fallthrough();
  check->add_option("input", input, "expression, or path to a definition file")->required();
  check->add_option("--load", loads, "definition file or `stdlib` to load first");
  check->add_option("--assume", assumptions, "context entry `x : T`");

  auto* eval = app.add_subcommand("eval", "normalize an expression");
  eval->fallthrough();
  eval->add_option("expr", input, "expression")->required();
  eval->add_option("--load", loads, "definition file or `stdlib` to load first");

  auto* matrix = app.add_subcommand("matrix", "typability of the witness terms across the cube");
  matrix->fallthrough();

  auto* repl = app.add_subcommand("repl", "interactive session");
  repl->fallthrough();
  repl->add_option("--load", loads, "definition file or `stdlib` to load first");

  std::string presentation;
  std::size_t cases = 200;
  std::uint64_t seed = 1;
  auto* ccc = app.add_subcommand("ccc", "Cartesian closed category tools");
  ccc->require_subcommand(1);
  auto* laws = ccc->add_subcommand("laws", "test the CCC laws on random morphisms");
  laws->fallthrough();
  laws->add_option("file", presentation, "presentation file")->required();
  laws->add_option("--cases", cases, "cases per law")->check(CLI::PositiveNumber)->capture_default_str();
  laws->add_option("--seed", seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  settings.strategy = *parse_strategy(strategy);

  Session session(settings);
  if (*check) {
    if (int rc = prepare(session, loads, assumptions, false); rc != kOk) return rc;
    return run_check(session, input);
  }
  if (*eval) {
    if (int rc = prepare(session, loads, {}, true); rc != kOk) return rc;
    return emit(session.eval_expr(input));
  }
  if (*matrix) return run_matrix();
  if (*repl) {
    if (int rc = prepare(session, loads, {}, true); rc != kOk) return rc;
    return run_repl(session);
  }
  if (*laws) return run_ccc_laws(presentation, cases, seed);
  return kUsage;
}
