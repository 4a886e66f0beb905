#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "assocf/tree.hpp"

namespace assocf {

/// An element of Thompson's group F, held as its reduced tree pair
/// <source, target>. In the PL model the element maps the source
/// subdivision of [0,1] affinely onto the target subdivision, and the
/// product g*h applies g first, then h.
class FElement {
 public:
  /// The identity <., .>.
  FElement() = default;

  /// Reduces (p, q); throws std::invalid_argument on a leaf-count mismatch.
  static FElement reduce(const BinaryTree& p, const BinaryTree& q);

  const BinaryTree& source() const noexcept { return source_; }
  const BinaryTree& target() const noexcept { return target_; }
  std::size_t leaf_count() const noexcept { return source_.leaf_count(); }
  bool is_identity() const noexcept { return source_.is_leaf(); }

  /// "pair (p) (q)" using the tree literal grammar.
  std::string str() const;
  /// Inverse of str(); also accepts "pair" followed by two tree literals.
  static FElement parse(std::string_view text);

  friend bool operator==(const FElement&, const FElement&) = default;
  friend auto operator<=>(const FElement&, const FElement&) = default;

 private:
  FElement(BinaryTree p, BinaryTree q) : source_(std::move(p)), target_(std::move(q)) {}

  BinaryTree source_;
  BinaryTree target_;
};

inline FElement reduce(const BinaryTree& p, const BinaryTree& q) {
  return FElement::reduce(p, q);
}

FElement multiply(const FElement& g, const FElement& h);
FElement invert(const FElement& g);
FElement power(const FElement& g, std::int64_t exponent);
/// [g,h] = g h g^-1 h^-1.
FElement commutator(const FElement& g, const FElement& h);
/// g^h = h^-1 g h.
FElement conj(const FElement& g, const FElement& h);

/// s_0 (left) and s_1 (right): apply the tree shift to both components.
FElement shift_endo(const FElement& g, Side side);
/// R: componentwise mirror image.
FElement reflect_auto(const FElement& g);

struct Generators {
  FElement x0, x1, x2, c0, c1;
};

/// x0 = <((. .) .), (. (. .))>, the pair encoding the associative law;
/// x1 = s1(x0); x2 = x1^x0; c0 = [x0,x1]; c1 = [c0, s1(c0)].
const Generators& generators();

/// Image in F/F' = Z x Z, with x0 -> (1,0) and x1 -> (0,1).
struct AbelianImage {
  std::int64_t m = 0;
  std::int64_t n = 0;

  friend bool operator==(const AbelianImage&, const AbelianImage&) = default;
  AbelianImage operator+(const AbelianImage& o) const { return {m + o.m, n + o.n}; }
  std::string str() const;
};

/// Computed from the endpoint slopes: with a, b the log2 slopes at 0 and 1,
/// the image is (a, -a-b). Read directly off the first and last leaf depths.
AbelianImage abelianize(const FElement& g);
bool in_commutator_subgroup(const FElement& g);

/// The normal subgroup of F that is the preimage of the subgroup of Z x Z
/// generated by (m,-m) and (0,n). The zero spec (0,0) is the trivial group.
struct NormalSubgroupSpec {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
};

bool normal_membership(const FElement& g, const NormalSubgroupSpec& spec);

/// Evaluates a word over x0, x1, x2, c0, c1 (and "1" for the identity) with
/// integer powers g^-2, conjugation g^h, '*' products, [g,h] commutators and
/// parentheses. Throws ParseError with the offending position.
FElement parse_word(std::string_view text);

}  // namespace assocf

template <>
struct std::hash<assocf::FElement> {
  std::size_t operator()(const assocf::FElement& g) const noexcept {
    std::size_t a = std::hash<assocf::BinaryTree>{}(g.source());
    std::size_t b = std::hash<assocf::BinaryTree>{}(g.target());
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
  }
};
