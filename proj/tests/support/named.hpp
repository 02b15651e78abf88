#ifndef CUBE_TESTS_NAMED_HPP
#define CUBE_TESTS_NAMED_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cube/term.hpp"

namespace cube::testing {

// Untyped lambda terms with named variables: the textbook representation,
// used as an independent oracle for the de Bruijn machinery.
struct Named {
  enum class Kind { Var, Lam, App } kind;
  std::string name;  // Var, Lam binder
  std::shared_ptr<const Named> left, right;  // Lam body in left; App fun, arg

  static std::shared_ptr<const Named> var(std::string n);
  static std::shared_ptr<const Named> lam(std::string n, std::shared_ptr<const Named> body);
  static std::shared_ptr<const Named> app(std::shared_ptr<const Named> f, std::shared_ptr<const Named> a);
};
using NamedPtr = std::shared_ptr<const Named>;

std::set<std::string> named_free(const NamedPtr& t);

// Capture-avoiding t[x := s], renaming binders with primes when needed.
NamedPtr named_subst(const NamedPtr& t, const std::string& x, const NamedPtr& s);

// De Bruijn to named. `scope` names the free indices, outermost first.
// Binder hints are kept unless keeping one would capture a free reference.
NamedPtr to_named(const Term& t, const std::vector<std::string>& scope);

// Named back to de Bruijn over the same scope; free names not in scope throw.
Term from_named(const NamedPtr& t, const std::vector<std::string>& scope);

std::string named_string(const NamedPtr& t);

}  // namespace cube::testing

#endif
