#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "assocf/magma.hpp"

namespace assocf {

/// A bijection of {1..n}, stored 0-based.
class Permutation {
 public:
  /// Identity on n points.
  explicit Permutation(std::size_t n = 0);
  /// Throws std::invalid_argument unless images is a bijection of {0..n-1}.
  static Permutation from_images(std::vector<int> images);
  /// Cycle notation over 1-based points, e.g. "(1 2 3)(4 5)" or "(1,2)";
  /// "()" is the identity. The degree is at least the largest point.
  /// Throws ParseError.
  static Permutation parse(std::string_view text, std::size_t degree = 0);

  std::size_t degree() const noexcept { return images_.size(); }
  int operator()(int point) const { return images_.at(static_cast<std::size_t>(point)); }
  const std::vector<int>& images() const noexcept { return images_; }

  /// Pads with fixed points.
  Permutation extended(std::size_t n) const;
  Permutation inverse() const;
  bool is_identity() const;
  /// Cycle lengths greater than one, sorted descending.
  std::vector<std::size_t> cycle_type() const;
  /// Compact cycle notation "(1,2,3)(4,5)", "id" for the identity.
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Composite: apply b first, then a.
Permutation compose(const Permutation& a, const Permutation& b);

/// A finite group with its Cayley table; table[i][j] = index of g_i g_j.
struct GroupTable {
  std::vector<Permutation> elements;
  std::vector<std::vector<int>> table;
  int identity = 0;
  std::vector<int> inverse;
};

inline constexpr std::size_t kGroupOrderCap = 10080;

/// Closure of the generators under composition, elements sorted with the
/// identity first. Throws BudgetError past the cap.
GroupTable permutation_group(const std::vector<Permutation>& generators,
                             std::size_t cap = kGroupOrderCap);

/// Checks closure, identity, inverses and (for order <= 60) associativity.
/// Throws std::invalid_argument on failure.
void validate_group(const GroupTable& g);

/// [x,y] = x y x^-1 y^-1 on the group's elements.
Magma commutator_magma(const GroupTable& g);

Magma pre_sl2();
Magma s4_example();
Magma octonion_unit_loop();
/// sl2 basis brackets with coefficients reduced mod 5: 0 and c*e_i for
/// c in {1,2,-2,-1}, i in {-1,0,1}.
Magma sl2_table();
/// Maps each element of sl2_table onto the matching element of pre_sl2
/// (e_{-1} -> a, e_0 -> b, e_1 -> c, scalars and signs forgotten).
std::vector<Element> sl2_to_pre_sl2();
Magma z4();
Magma trivial_magma();
GroupTable s3_group();
GroupTable a5_group();

struct ZooEntry {
  std::string name;
  std::string description;
  std::function<Magma()> build;
};

const std::vector<ZooEntry>& zoo();
/// Throws std::out_of_range for an unknown name.
Magma zoo_magma(std::string_view name);

}  // namespace assocf
