#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace assocf {

/// Address of a vertex: a word over {0,1}, 0 = left child, 1 = right child.
/// The empty word is the root.
class VertexWord {
 public:
  VertexWord() = default;
  /// Accepts "", "e" or "ε" for the root; otherwise only '0'/'1'.
  static VertexWord parse(std::string_view text);

  const std::string& bits() const noexcept { return bits_; }
  std::size_t length() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  VertexWord child(int side) const;
  std::string str() const;

  auto operator<=>(const VertexWord&) const = default;

 private:
  explicit VertexWord(std::string bits) : bits_(std::move(bits)) {}
  std::string bits_;
};

enum class Side { left = 0, right = 1 };

/// Rooted ordered binary tree, held as its preorder code: '1' for an
/// interior vertex, '0' for a leaf. The code is canonical, so equality,
/// ordering and hashing are those of the string.
class BinaryTree {
 public:
  /// The trivial tree (a single leaf).
  BinaryTree() : code_("0") {}

  static BinaryTree leaf() { return BinaryTree(); }
  static BinaryTree node(const BinaryTree& left, const BinaryTree& right);
  /// Parses the "." / "(L R)" literal format (whitespace-insensitive).
  static BinaryTree parse(std::string_view text);
  /// Builds from a preorder code; throws std::invalid_argument if malformed.
  static BinaryTree from_code(std::string code);
  /// Right comb with n leaves: (. (. (... .))).
  static BinaryTree right_comb(std::size_t leaves);
  /// Complete tree of the given depth (2^depth leaves).
  static BinaryTree complete(std::size_t depth);

  const std::string& code() const noexcept { return code_; }
  std::string str() const;

  bool is_leaf() const noexcept { return code_.size() == 1; }
  BinaryTree left() const;
  BinaryTree right() const;

  std::size_t leaf_count() const noexcept { return (code_.size() + 1) / 2; }
  std::size_t caret_count() const noexcept { return code_.size() / 2; }
  std::size_t depth() const;
  /// Depths of leaves in left-to-right order.
  std::vector<std::size_t> leaf_depths() const;

  auto operator<=>(const BinaryTree&) const = default;

 private:
  explicit BinaryTree(std::string code) : code_(std::move(code)) {}
  std::string code_;
};

/// i-th elementary expansion (1-based); identity when i > leaf_count(p).
BinaryTree expand(const BinaryTree& p, std::size_t i);
/// Inverse of expand: requires leaves i, i+1 to form a free caret.
BinaryTree contract(const BinaryTree& p, std::size_t i);
/// sigma_0 (left) puts p under a new root as the left child; sigma_1 the right.
BinaryTree shift(const BinaryTree& p, Side side);
BinaryTree reflect(const BinaryTree& p);

std::vector<VertexWord> leaf_addresses(const BinaryTree& p);
/// All vertex addresses in preorder.
std::vector<VertexWord> vertex_addresses(const BinaryTree& p);
/// Leaf indices i (1-based) such that leaves i and i+1 are siblings.
std::vector<std::size_t> free_carets(const BinaryTree& p);
/// Throws std::invalid_argument if w does not name a vertex of p.
BinaryTree subtree_at(const BinaryTree& p, const VertexWord& w);
bool has_vertex(const BinaryTree& p, const VertexWord& w);
/// Replaces the subtree at w by replacement.
BinaryTree replace_subtree(const BinaryTree& p, const VertexWord& w,
                           const BinaryTree& replacement);
/// Substitutes trees for the leaves of shape, left to right.
BinaryTree graft(const BinaryTree& shape, const std::vector<BinaryTree>& parts);

/// Least common expansion (union of vertex sets).
BinaryTree join(const BinaryTree& p, const BinaryTree& q);
/// True iff the vertex set of base is contained in that of r.
bool is_expansion_of(const BinaryTree& r, const BinaryTree& base);

inline constexpr std::size_t kDefaultEnumerationCap = 14;

/// All trees with n leaves. Order: by leaf count of the left subtree, then
/// recursively by left subtree, then by right subtree. Throws BudgetError
/// past the cap.
std::vector<BinaryTree> enumerate_trees(std::size_t n,
                                        std::size_t cap = kDefaultEnumerationCap);

}  // namespace assocf

template <>
struct std::hash<assocf::BinaryTree> {
  std::size_t operator()(const assocf::BinaryTree& t) const noexcept {
    return std::hash<std::string>{}(t.code());
  }
};
