#include "matrix.hpp"

#include <iomanip>
#include <sstream>

#include "cube/kernel.hpp"
#include "cube/surface.hpp"

namespace cube::cli {

namespace {

struct Witness {
  std::vector<std::pair<const char*, const char*>> context;
  const char* term;
};

const std::array<Witness, 4>& witnesses() {
  static const std::array<Witness, 4> w = {{
      {{{"b", "Star"}}, "\\x:b. x"},
      {{}, "/\\a. \\x:a. x"},
      {{}, "\\a:Star. a -> a"},
      {{{"A", "Star"}, {"P", "A -> Star"}}, "\\n:A. \\p:P n. p"},
  }};
  return w;
}

bool typable(const PtsSpec& spec, const Witness& w) {
  Context ctx;
  ParseEnv env;
  env.allow_free = false;
  for (const auto& [name, type] : w.context) {
    auto parsed = parse_term(type, env);
    if (!parsed) return false;
    ctx.push(name, parsed->term);
    env.scope.push_back(name);
  }
  if (!wf_context(spec, ctx)) return false;
  auto parsed = parse_term(w.term, env);
  return parsed && infer(spec, ctx, parsed->term).has_value();
}

}  // namespace

std::vector<MatrixRow> typability_matrix() {
  std::vector<MatrixRow> rows;
  for (CubeCorner c : kAllCorners) {
    MatrixRow row{c, {}};
    PtsSpec spec = cube_spec(c);
    for (std::size_t i = 0; i < witnesses().size(); ++i) row.typable[i] = typable(spec, witnesses()[i]);
    rows.push_back(row);
  }
  return rows;
}

std::vector<MatrixRow> expected_matrix() {
  // Bits of the corner index select (Box,Star), (Box,Box) and (Star,Box).
  std::vector<MatrixRow> rows;
  for (std::size_t i = 0; i < std::size(kAllCorners); ++i) {
    rows.push_back({kAllCorners[i], {true, (i & 1) != 0, (i & 2) != 0, (i & 4) != 0}});
  }
  return rows;
}

std::string render_matrix(const std::vector<MatrixRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(12) << "corner";
  for (const char* w : kWitnessNames) out << ' ' << std::setw(4) << w;
  out << '\n';
  for (const MatrixRow& r : rows) {
    out << std::setw(12) << corner_name(r.corner);
    for (bool b : r.typable) out << ' ' << std::setw(4) << (b ? "Y" : "N");
    out << '\n';
  }
  std::string s = out.str();
  // Drop the padding at line ends.
  std::string trimmed;
  std::istringstream lines(s);
  for (std::string line; std::getline(lines, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    trimmed += line + '\n';
  }
  return trimmed;
}

}  // namespace cube::cli
