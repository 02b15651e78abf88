#ifndef CUBE_TESTS_HELPERS_HPP
#define CUBE_TESTS_HELPERS_HPP

#include <gtest/gtest.h>

#include <string>
#include <string_view>
#include <vector>

#include "cube/kernel.hpp"
#include "cube/surface.hpp"

namespace cube::testing {

// Parses `text` with `scope` as the enclosing names; fails the test on error.
inline Term parse(std::string_view text, const std::vector<std::string>& scope = {}) {
  ParseEnv env;
  env.scope = scope;
  env.allow_free = false;
  auto r = parse_term(text, env);
  if (!r) {
    ADD_FAILURE() << r.error().format();
    return Term::star();
  }
  return r->term;
}

// Builds a context from (name, type) pairs in surface syntax.
inline Context context(const std::vector<std::pair<std::string, std::string>>& decls) {
  Context ctx;
  for (const auto& [name, type] : decls) ctx.push(name, parse(type, ctx.names()));
  return ctx;
}

}  // namespace cube::testing

#endif
