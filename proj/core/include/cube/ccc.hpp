#ifndef CUBE_CCC_HPP
#define CUBE_CCC_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cube/expected.hpp"
#include "cube/kernel.hpp"
#include "cube/spec.hpp"
#include "cube/term.hpp"

namespace cube {

/// Objects of a free Cartesian closed category. exponential(X, Y) is X^Y,
/// whose points are morphisms Y -> X.
class CatObject {
 public:
  enum class Kind { Terminal, Base, Product, Exponential };

  static CatObject terminal();
  static CatObject base(std::string name);
  static CatObject product(CatObject left, CatObject right);
  static CatObject exponential(CatObject base, CatObject exponent);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  // Product: left and right. Exponential: base (codomain) and exponent (domain).
  const CatObject& left() const { return *left_; }
  const CatObject& right() const { return *right_; }

  std::string to_string() const;
  friend bool operator==(const CatObject& a, const CatObject& b);

 private:
  Kind kind_ = Kind::Terminal;
  std::string name_;
  std::shared_ptr<const CatObject> left_, right_;
};

/// The type interpreting an object: 1 is Unit, products are non-dependent
/// pair types, X^Y is Y -> X, and base objects are constants.
Term object_type(const CatObject& x);

struct UnsupportedType {
  std::string message;
};

/// Inverse of object_type on simple types.
Expected<CatObject, UnsupportedType> syn_object(const Term& tau);

/// A morphism dom -> cod represented by a term with one free variable
/// (index 0) of type object_type(dom).
struct Morphism {
  CatObject dom;
  CatObject cod;
  Term body;

  std::string to_string() const;
};

struct CccError {
  enum class Kind { DomainMismatch, NotAProductDomain, NotAnExponential, Malformed };
  Kind kind;
  std::string message;
};

Morphism identity(const CatObject& x);
/// f ∘ g
Expected<Morphism, CccError> compose(const Morphism& f, const Morphism& g);
Expected<Morphism, CccError> pairing(const Morphism& f, const Morphism& g);
Morphism proj1(const CatObject& x, const CatObject& y);
Morphism proj2(const CatObject& x, const CatObject& y);
Morphism to_terminal(const CatObject& x);
/// f : X × Y -> Z gives curry(f) : X -> Z^Y.
Expected<Morphism, CccError> curry(const Morphism& f);
/// h : X -> Z^Y gives uncurry(h) : X × Y -> Z.
Expected<Morphism, CccError> uncurry(const Morphism& h);
/// eval : Z^Y × Y -> Z.
Morphism apply_morphism(const CatObject& z, const CatObject& y);
/// f × g : X × Y -> X' × Y'.
Morphism product_map(const Morphism& f, const Morphism& g);

struct Generator {
  std::string name;
  CatObject dom;
  CatObject cod;
};

/// A finitely presented CCC: base objects and generating morphisms.
struct Presentation {
  std::vector<std::string> objects;
  std::vector<Generator> generators;
};

/// Reads `object A` and `gen f : A -> B` lines; `--` starts a comment.
/// Object expressions use the type syntax over the declared objects
/// (Unit, A & B, A -> B).
Expected<Presentation, std::string> parse_presentation(std::string_view text);

/// The internal language: the simply typed spec extended with one base type
/// constant per object and one constant per generator.
PtsSpec lang_of(const Presentation& p);

/// Reads a presentation back off a theory's constants.
Expected<Presentation, std::string> syn_of(const PtsSpec& theory);

/// The morphism `x. f x` of a generator.
Morphism generator_morphism(const Generator& g);

/// Kernel check of a morphism's representative in the theory.
Expected<Ok, Diagnostic> check_morphism(const PtsSpec& theory, const Morphism& m);

/// βη-long normal form of a morphism's representative, with surjective
/// pairing and every term of type 1 collapsed to `*`.
Expected<Term, std::string> beta_eta_normal(const Presentation& p, const Morphism& m);

/// βη-equality of morphisms with the same endpoints.
bool morphisms_equal(const Presentation& p, const Morphism& a, const Morphism& b);

/// Random well-typed morphisms over a presentation.
class MorphismGenerator {
 public:
  MorphismGenerator(Presentation p, std::uint64_t seed, std::size_t max_size = 7);

  CatObject object(int depth = 2);
  std::optional<Morphism> morphism(const CatObject& dom, const CatObject& cod);
  // Random endpoints; retries until an inhabited pair is found.
  Morphism any();

 private:
  std::optional<Term> term(const CatObject& target, std::vector<CatObject>& ctx, int size);
  std::optional<Term> eliminate(const Term& head, const CatObject& type, const CatObject& target,
                                std::vector<CatObject>& ctx, int size);

  Presentation p_;
  std::mt19937_64 rng_;
  std::size_t max_size_;
};

struct LawResult {
  std::string law;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string counterexample;

  bool passed() const { return failures == 0 && cases > 0; }
};

/// Category, product, exponential and terminal laws on random morphisms.
std::vector<LawResult> check_laws(const Presentation& p, std::size_t cases_per_law = 200, std::uint64_t seed = 1);

struct RoundTrip {
  bool ok = false;
  std::string detail;
};

/// syn(lang(p)) against p: objects and generators must correspond one to
/// one with matching endpoints, and every generator type must be well formed.
RoundTrip round_trip(const Presentation& p);

/// Every presentation over objects {A} and {A, B} with at most
/// `max_generators` generators between small endpoints.
std::vector<Presentation> small_presentations(std::size_t max_generators = 3);

}  // namespace cube

#endif
