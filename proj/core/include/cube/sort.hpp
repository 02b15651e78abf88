#ifndef CUBE_SORT_HPP
#define CUBE_SORT_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace cube {

/// A sort: the classifier of types.
///
/// `Star` is ⋆ (Prop, the sort of ordinary types). `Box(i)` is □_i, the
/// sort of kinds; plain □ of the cube is `Box(1)`. `Universe(i)` is the
/// predicative universe Type_i (i ≥ 0). `Named` sorts come from user
/// specifications.
class SortId {
 public:
  enum class Kind : std::uint8_t { Star, Box, Universe, Named };

  static SortId star() { return SortId(Kind::Star, 0, {}); }
  static SortId box(std::uint32_t level = 1);
  static SortId universe(std::uint32_t level) { return SortId(Kind::Universe, level, {}); }
  static SortId named(std::string name) { return SortId(Kind::Named, 0, std::move(name)); }

  Kind kind() const { return kind_; }
  std::uint32_t level() const { return level_; }
  const std::string& name() const { return name_; }

  bool is_star() const { return kind_ == Kind::Star; }
  bool is_box() const { return kind_ == Kind::Box; }
  bool is_universe() const { return kind_ == Kind::Universe; }

  // Position in the sort hierarchy: ⋆ and named sorts are 0.
  std::uint32_t rank() const { return kind_ == Kind::Box || kind_ == Kind::Universe ? level_ : 0; }

  std::string to_string() const;

  friend bool operator==(const SortId&, const SortId&) = default;
  friend auto operator<=>(const SortId&, const SortId&) = default;

 private:
  SortId(Kind kind, std::uint32_t level, std::string name)
      : kind_(kind), level_(level), name_(std::move(name)) {}

  Kind kind_;
  std::uint32_t level_;
  std::string name_;
};

}  // namespace cube

#endif
