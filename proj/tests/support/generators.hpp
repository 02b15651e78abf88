#ifndef CUBE_TESTS_GENERATORS_HPP
#define CUBE_TESTS_GENERATORS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cube/kernel.hpp"
#include "cube/spec.hpp"
#include "cube/term.hpp"

namespace cube::testing {

using Rng = std::mt19937_64;

// Untyped lambda terms (Var, Lam, App) over `free_count` free indices.
Term random_lambda(Rng& rng, std::uint32_t free_count, int size);

// Arbitrary raw terms over every constructor, not necessarily typable.
Term random_raw_term(Rng& rng, std::uint32_t free_count, int size);

// A well-typed term together with where it lives.
struct TypedCase {
  PtsSpec spec;
  Context ctx;
  Term term;
  Term type;
  std::string source;
};

// Fixed context for a corner: base types, inhabitants and, on the corners
// with (Star, Box), a type family P over A.
Context corner_context(CubeCorner corner);

// Type-directed generator. Uses only the constructions the corner has;
// every candidate is confirmed by the kernel before it is returned.
class TypedGenerator {
 public:
  TypedGenerator(CubeCorner corner, std::uint64_t seed, int budget = 6);

  std::optional<TypedCase> next();
  // Retries until `count` cases are found (or a retry budget is spent).
  std::vector<TypedCase> take(std::size_t count, const std::function<bool(const TypedCase&)>& keep = {});

  std::size_t attempts() const { return attempts_; }
  // Candidates the kernel refused, with the diagnostic. The generator is
  // type directed, so this stays empty unless the kernel is incomplete.
  const std::vector<std::string>& rejected() const { return rejected_; }

 private:
  CubeCorner corner_;
  PtsSpec spec_;
  Context ctx_;
  Rng rng_;
  int budget_;
  std::size_t attempts_ = 0;
  std::vector<std::string> rejected_;
};

}  // namespace cube::testing

#endif
