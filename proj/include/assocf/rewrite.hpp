#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "assocf/expansion.hpp"
#include "assocf/magma.hpp"
#include "assocf/thompson.hpp"
#include "assocf/tree.hpp"

namespace assocf {

/// A finite set of strongly regular laws presenting a variety.
struct VarietyPresentation {
  std::vector<Law> laws;
};

enum class Direction { forward, backward };

/// One application of a law (or its reverse) at a vertex, with the subtrees
/// substituted for the law's variables.
struct RewriteStep {
  VertexWord vertex;
  std::size_t law = 0;
  Direction direction = Direction::forward;
  std::vector<BinaryTree> substitution;

  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

/// Throws std::invalid_argument when the subtree at the vertex is not the
/// instantiated source side, or the law index is out of range.
BinaryTree apply_step(const BinaryTree& t, const RewriteStep& step, const VarietyPresentation& v);

/// Every single-step rewrite of t: vertices in preorder, then laws in
/// order, forward before backward.
std::vector<std::pair<RewriteStep, BinaryTree>> rewrite_neighbors(const BinaryTree& t,
                                                                  const VarietyPresentation& v);

struct Derivation {
  std::vector<RewriteStep> steps;
  /// trees[0] is the start, trees[k+1] the result of steps[k].
  std::vector<BinaryTree> trees;

  /// Numbered lines "k. at w: lhs -> rhs of law #j" followed by the tree.
  std::string str(const VarietyPresentation& v) const;
};

/// Breadth-first search over T_n. Throws BudgetError when n exceeds the
/// cap and std::invalid_argument on a leaf-count mismatch.
std::optional<Derivation> derivable(const BinaryTree& p, const BinaryTree& q,
                                    const VarietyPresentation& v,
                                    std::size_t cap = kDefaultEnumerationCap);

/// All trees reachable from p.
std::vector<BinaryTree> derivability_class(const BinaryTree& p, const VarietyPresentation& v,
                                           std::size_t cap = kDefaultEnumerationCap);

/// True when every law has sides with equal left-subtree leaf counts, so no
/// derivation changes the root split of a tree.
bool preserves_root_split(const VarietyPresentation& v);

/// Number of leaves in the left subtree (0 for the trivial tree).
std::size_t root_split(const BinaryTree& t);

struct EventualDerivation {
  enum class Kind { holds, fails_all_up_to, separated_by_root_split };
  Kind kind = Kind::fails_all_up_to;
  std::optional<ExpansionWord> at;
  std::optional<Derivation> proof;
  std::size_t budget = 0;
  std::size_t examined = 0;

  std::string str() const;
};

inline constexpr std::size_t kDefaultDerivationBudget = 3;

/// Tries derivable on simultaneous expansions of (p, q) in order of added
/// carets. With use_root_split, a variety that preserves root splits
/// settles pairs whose root splits differ without searching: simultaneous
/// expansion never brings differing splits together.
EventualDerivation eventually_derivable(const BinaryTree& p, const BinaryTree& q,
                                        const VarietyPresentation& v,
                                        std::size_t budget = kDefaultDerivationBudget,
                                        bool use_root_split = false,
                                        std::size_t cap = kDefaultEnumerationCap);

/// s_{e1}( ... s_{ek}(g)) for w = e1...ek, so the pair sits at vertex w.
FElement shift_at_vertex(const FElement& g, const VertexWord& w);

/// Products of at most depth factors shift_at_vertex(k^{+-1}, w), |w| <= depth,
/// sorted and deduplicated. Always contains the identity.
std::vector<FElement> closure_generate(const std::vector<FElement>& k, std::size_t depth);

struct Membership {
  bool in = false;
  EventualDerivation search;

  std::string str() const;
};

/// Membership of g in the smallest shift-invariant subgroup containing k,
/// through eventual derivability in the variety of k's reduced pairs.
/// Negative answers hold only up to the budget.
Membership membership_semidecide(const FElement& g, const std::vector<FElement>& k,
                                 std::size_t budget = kDefaultDerivationBudget,
                                 bool use_root_split = false);

}  // namespace assocf
