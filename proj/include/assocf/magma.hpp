#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "assocf/expansion.hpp"
#include "assocf/tree.hpp"

namespace assocf {

using Element = int;

/// A strongly regular law p = q: variables are the leaves, left to right.
struct Law {
  BinaryTree lhs;
  BinaryTree rhs;

  Law() = default;
  /// Throws std::invalid_argument on a leaf-count mismatch.
  Law(BinaryTree l, BinaryTree r);

  /// "TREE = TREE". Throws ParseError.
  static Law parse(std::string_view text);
  std::string str() const;
  std::size_t arity() const { return lhs.leaf_count(); }
  bool trivial() const { return lhs == rhs; }

  friend bool operator==(const Law&, const Law&) = default;
};

/// The three-variable associative law ((. .) .) = (. (. .)).
Law associative_law();

/// Finite carrier with a binary operation table.
class Magma {
 public:
  /// Throws std::invalid_argument on duplicate or empty names, a table of
  /// the wrong shape, or an entry out of range.
  Magma(std::vector<std::string> names, std::vector<std::vector<Element>> table);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Element e) const { return names_.at(static_cast<std::size_t>(e)); }
  std::optional<Element> find(std::string_view name) const;

  Element op(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * names_.size() + static_cast<std::size_t>(b)];
  }
  const std::vector<Element>& flat_table() const noexcept { return table_; }

  bool simply_perfect() const noexcept { return simply_perfect_; }
  bool associative() const noexcept { return associative_; }
  /// Smallest-index e with e*x = x for all x.
  std::optional<Element> left_identity() const noexcept { return left_identity_; }
  std::optional<Element> right_identity() const noexcept { return right_identity_; }
  std::optional<Element> two_sided_identity() const noexcept;
  /// D_0 = S, D_{k+1} = D_k * D_k, listed until the first repeat.
  const std::vector<std::vector<Element>>& derived_chain() const noexcept { return chain_; }

  friend bool operator==(const Magma& a, const Magma& b) {
    return a.names_ == b.names_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Element> table_;
  bool simply_perfect_ = false;
  bool associative_ = false;
  std::optional<Element> left_identity_;
  std::optional<Element> right_identity_;
  std::vector<std::vector<Element>> chain_;
};

/// Evaluates the n-ary operation of a tree. Throws std::invalid_argument on
/// an arity mismatch or an out-of-range element.
Element evaluate(const Magma& m, const BinaryTree& p, const std::vector<Element>& args);

/// Options shared by the exhaustive sweeps.
struct SweepOptions {
  unsigned threads = 1;
  /// Largest |S|^n an exhaustive sweep may visit.
  std::uint64_t cost_guard = std::uint64_t{1} << 32;
};

struct Satisfaction {
  bool holds = true;
  /// First failing tuple in sweep order (first variable most significant).
  std::optional<std::vector<Element>> counterexample;
};

/// Exhaustive check of m |= law over all |S|^n tuples. Throws BudgetError
/// past the cost guard.
Satisfaction satisfies(const Magma& m, const Law& law, const SweepOptions& opts = {});

/// satisfies(m, b(law)) for a law that already holds; throws
/// std::invalid_argument if it does not.
bool expansion_monotone_check(const Magma& m, const Law& law, const ExpansionWord& b,
                              const SweepOptions& opts = {});

/// Applies the same expansion word to both sides.
Law expand_law(const Law& law, const ExpansionWord& b);

struct EventualResult {
  enum class Kind { holds, fails_all_up_to, decided_by_perfection };
  Kind kind = Kind::fails_all_up_to;
  /// Kind::holds: the expansion at which the law holds on the nose.
  std::optional<ExpansionWord> at;
  std::size_t budget = 0;
  /// Kind::decided_by_perfection: the exact answer.
  bool value = false;
  /// Number of distinct simultaneous expansions checked.
  std::size_t examined = 0;

  std::string str() const;
};

inline constexpr std::size_t kDefaultEventualBudget = 6;

/// Breadth-first search over simultaneous expansions ordered by added
/// carets. Simply perfect magmas are answered exactly from the law itself
/// unless use_perfection is false.
EventualResult satisfies_eventually(const Magma& m, const Law& law,
                                    std::size_t budget = kDefaultEventualBudget,
                                    bool use_perfection = true, const SweepOptions& opts = {});

struct SolvableWitness {
  Element zero = 0;
  /// Complete tree of depth k whose operation is constantly zero.
  BinaryTree tree;
  std::size_t depth = 0;
};

std::optional<SolvableWitness> is_solvable(const Magma& m);

/// Image of the tree operation over all completions of the partial
/// assignment (fixed[i] pins leaf i, 0-based).
std::vector<Element> restricted_image(const Magma& m, const BinaryTree& p,
                                      const std::vector<std::optional<Element>>& fixed);

/// {x : x*u = zero for every u in subset}. Throws std::invalid_argument
/// without a zero.
std::vector<Element> centralizer(const Magma& m, const std::vector<Element>& subset,
                                 std::optional<Element> zero);

struct LawSearchOptions {
  SweepOptions sweep;
  /// Random tuples used to split trees into candidate classes when the
  /// tuple space is too large to fingerprint exactly.
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  /// Tuple spaces up to this size are fingerprinted exhaustively.
  std::uint64_t exact_limit = std::uint64_t{1} << 20;
};

/// All nontrivial laws lhs = rhs in T_n holding in m, with lhs before rhs in
/// enumerate_trees order.
std::vector<Law> search_laws(const Magma& m, std::size_t n, const LawSearchOptions& opts = {});

/// Default law-search arity: 6 for |S| <= 4, 4 for |S| <= 60, else 3.
std::size_t default_arity_cap(std::size_t size);

struct StatusBudgets {
  std::size_t eventual = kDefaultEventualBudget;
  /// 0 selects default_arity_cap.
  std::size_t arity_cap = 0;
  LawSearchOptions search;
};

struct AssocStatus {
  enum class Kind { full_f, trivial_certified, contains_commutator, no_law_up_to, unknown };
  Kind kind = Kind::unknown;
  /// associative | solvable | identity-theorem | fvl-on-the-nose | fvl-at-expansion
  std::string reason;

  std::optional<SolvableWitness> solvable;
  std::optional<Element> identity;
  /// Non-associativity witness (x, y, z).
  std::optional<std::vector<Element>> counterexample;
  std::optional<ExpansionWord> fvl_at;
  /// Law-search bound reached and the laws found (Unknown only).
  std::size_t arity = 0;
  std::vector<Law> laws;
  /// FVL bounded search budget when it was inconclusive.
  std::size_t fvl_budget = 0;

  std::string str() const;
};

std::string to_string(AssocStatus::Kind kind);

/// The law of the commutator [x0,x1] (its reduced tree pair).
Law five_variable_law();

AssocStatus assoc_status(const Magma& m, const StatusBudgets& budgets = {});

}  // namespace assocf
