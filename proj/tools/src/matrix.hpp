#ifndef CUBE_TOOLS_MATRIX_HPP
#define CUBE_TOOLS_MATRIX_HPP

#include <array>
#include <string>
#include <vector>

#include "cube/spec.hpp"

namespace cube::cli {

inline constexpr std::array<const char*, 4> kWitnessNames = {"id", "poly", "op", "dep"};

struct MatrixRow {
  CubeCorner corner;
  std::array<bool, 4> typable{};
};

/// Typability of the four witnesses (simply typed identity, polymorphic
/// identity, type operator, dependent family) in every corner of the cube.
std::vector<MatrixRow> typability_matrix();

/// The pattern the corners must produce: each witness is typable exactly
/// in the corners that have its product rule.
std::vector<MatrixRow> expected_matrix();

std::string render_matrix(const std::vector<MatrixRow>& rows);

}  // namespace cube::cli

#endif
