#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "assocf/tree.hpp"

namespace assocf {

/// An element of the monoid of expansions, generated by the elementary
/// expansions beta^i subject to beta^i beta^j = beta^{j+1} beta^i (i < j).
///
/// Letters are kept in written (composition) order: the last letter is
/// applied first, so "b[4,2]" applies beta^2 and then beta^4. The stored
/// word is always the normal form, in which the letters are non-increasing
/// when read left to right (equivalently, the expansions are applied in
/// non-decreasing index order).
class ExpansionWord {
 public:
  ExpansionWord() = default;
  /// Normalizes an arbitrary written word; letters must be positive.
  explicit ExpansionWord(std::vector<std::size_t> written);

  /// Parses "b[4,2]" (or "b[]"). Throws ParseError.
  static ExpansionWord parse(std::string_view text);

  const std::vector<std::size_t>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::string str() const;

  BinaryTree apply(const BinaryTree& p) const;

  friend bool operator==(const ExpansionWord&, const ExpansionWord&) = default;

 private:
  std::vector<std::size_t> letters_;
};

/// Rewrites a written word with beta^i beta^j -> beta^{j+1} beta^i (i < j)
/// until no rule applies.
std::vector<std::size_t> normalize_letters(std::vector<std::size_t> written);

/// a after b: the normal form of the written word a ++ b.
ExpansionWord monoid_compose(const ExpansionWord& a, const ExpansionWord& b);

/// The canonical word carrying p to r (lowest-index missing vertex expanded
/// first), or nothing when r is not an expansion of p.
std::optional<ExpansionWord> expansion_path(const BinaryTree& r, const BinaryTree& p);

/// (b3, b4) with b3 b1 = b4 b2, computed by joining the images of a right
/// comb large enough that every letter acts non-trivially.
std::pair<ExpansionWord, ExpansionWord> common_left_multiples(const ExpansionWord& b1,
                                                              const ExpansionWord& b2);

}  // namespace assocf
