#pragma once

#include <random>
#include <vector>

#include "assocf/thompson.hpp"
#include "assocf/tree.hpp"

namespace testing {

using Rng = std::mt19937_64;

// Random split of the leaves at every node.
inline assocf::BinaryTree random_tree(Rng& rng, std::size_t leaves) {
  if (leaves <= 1) return assocf::BinaryTree::leaf();
  std::uniform_int_distribution<std::size_t> split(1, leaves - 1);
  std::size_t l = split(rng);
  return assocf::BinaryTree::node(random_tree(rng, l), random_tree(rng, leaves - l));
}

inline assocf::BinaryTree random_tree(Rng& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 9);
  return random_tree(rng, size(rng));
}

// Product of up to max_len letters x0^{+-1}, x1^{+-1}.
inline assocf::FElement random_word(Rng& rng, std::size_t max_len = 20) {
  const auto& g = assocf::generators();
  const assocf::FElement letters[4] = {g.x0, assocf::invert(g.x0), g.x1, assocf::invert(g.x1)};
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> pick(0, 3);
  assocf::FElement out;
  for (std::size_t k = len(rng); k > 0; --k) out = assocf::multiply(out, letters[pick(rng)]);
  return out;
}

inline assocf::FElement random_pair(Rng& rng, std::size_t max_leaves = 8) {
  std::uniform_int_distribution<std::size_t> size(1, max_leaves);
  std::size_t n = size(rng);
  return assocf::reduce(random_tree(rng, n), random_tree(rng, n));
}

// Alternates word-generated elements and random tree pairs.
inline assocf::FElement random_element(Rng& rng) {
  return std::bernoulli_distribution(0.5)(rng) ? random_word(rng) : random_pair(rng);
}

}  // namespace testing
