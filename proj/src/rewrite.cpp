#include "assocf/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "assocf/error.hpp"

namespace assocf {

namespace {

const Law& law_at(const VarietyPresentation& v, std::size_t k) {
  if (k >= v.laws.size())
    throw std::invalid_argument("law #" + std::to_string(k + 1) + " does not exist");
  return v.laws[k];
}

std::pair<const BinaryTree&, const BinaryTree&> sides(const Law& law, Direction d) {
  if (d == Direction::forward) return {law.lhs, law.rhs};
  return {law.rhs, law.lhs};
}

std::optional<std::vector<BinaryTree>> match(const BinaryTree& s, const BinaryTree& pattern) {
  if (!is_expansion_of(s, pattern)) return std::nullopt;
  std::vector<BinaryTree> parts;
  for (const VertexWord& w : leaf_addresses(pattern)) parts.push_back(subtree_at(s, w));
  return parts;
}

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw BudgetError("derivation over T_" + std::to_string(n) + " exceeds the cap of " +
                      std::to_string(cap) + " leaves");
}

}  // namespace

BinaryTree apply_step(const BinaryTree& t, const RewriteStep& step, const VarietyPresentation& v) {
  auto [from, to] = sides(law_at(v, step.law), step.direction);
  if (step.substitution.size() != from.leaf_count())
    throw std::invalid_argument("substitution has the wrong number of parts");
  if (!has_vertex(t, step.vertex))
    throw std::invalid_argument("no vertex " + step.vertex.str() + " in " + t.str());
  if (subtree_at(t, step.vertex) != graft(from, step.substitution))
    throw std::invalid_argument("law side does not match at vertex " + step.vertex.str());
  return replace_subtree(t, step.vertex, graft(to, step.substitution));
}

std::vector<std::pair<RewriteStep, BinaryTree>> rewrite_neighbors(const BinaryTree& t,
                                                                  const VarietyPresentation& v) {
  std::vector<std::pair<RewriteStep, BinaryTree>> out;
  for (const VertexWord& w : vertex_addresses(t)) {
    const BinaryTree s = subtree_at(t, w);
    for (std::size_t k = 0; k < v.laws.size(); ++k) {
      for (Direction d : {Direction::forward, Direction::backward}) {
        auto [from, to] = sides(v.laws[k], d);
        auto parts = match(s, from);
        if (!parts) continue;
        BinaryTree next = replace_subtree(t, w, graft(to, *parts));
        out.emplace_back(RewriteStep{w, k, d, std::move(*parts)}, std::move(next));
      }
    }
  }
  return out;
}

std::string Derivation::str(const VarietyPresentation& v) const {
  std::ostringstream out;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const RewriteStep& s = steps[k];
    const Law& law = law_at(v, s.law);
    auto [from, to] = sides(law, s.direction);
    out << k + 1 << ". at " << s.vertex.str() << ": " << from.str() << " -> " << to.str()
        << " of law #" << s.law + 1 << "\n   " << trees[k + 1].str() << "\n";
  }
  return out.str();
}

std::optional<Derivation> derivable(const BinaryTree& p, const BinaryTree& q,
                                    const VarietyPresentation& v, std::size_t cap) {
  if (p.leaf_count() != q.leaf_count())
    throw std::invalid_argument("trees have different leaf counts");
  check_cap(p.leaf_count(), cap);
  Derivation proof;
  if (p == q) {
    proof.trees.push_back(p);
    return proof;
  }
  std::unordered_map<BinaryTree, std::pair<BinaryTree, RewriteStep>> parent;
  std::deque<BinaryTree> queue{p};
  parent.emplace(p, std::pair{p, RewriteStep{}});
  while (!queue.empty()) {
    BinaryTree t = std::move(queue.front());
    queue.pop_front();
    for (auto& [step, next] : rewrite_neighbors(t, v)) {
      if (parent.count(next)) continue;
      parent.emplace(next, std::pair{t, step});
      if (next == q) {
        std::vector<BinaryTree> trees{q};
        std::vector<RewriteStep> steps;
        for (BinaryTree cur = q; cur != p;) {
          const auto& [prev, s] = parent.at(cur);
          steps.push_back(s);
          cur = prev;
          trees.push_back(cur);
        }
        std::reverse(trees.begin(), trees.end());
        std::reverse(steps.begin(), steps.end());
        proof.trees = std::move(trees);
        proof.steps = std::move(steps);
        return proof;
      }
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

std::vector<BinaryTree> derivability_class(const BinaryTree& p, const VarietyPresentation& v,
                                           std::size_t cap) {
  check_cap(p.leaf_count(), cap);
  std::unordered_set<BinaryTree> seen{p};
  std::deque<BinaryTree> queue{p};
  while (!queue.empty()) {
    BinaryTree t = std::move(queue.front());
    queue.pop_front();
    for (auto& entry : rewrite_neighbors(t, v))
      if (seen.insert(entry.second).second) queue.push_back(entry.second);
  }
  std::vector<BinaryTree> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t root_split(const BinaryTree& t) { return t.is_leaf() ? 0 : t.left().leaf_count(); }

bool preserves_root_split(const VarietyPresentation& v) {
  return std::all_of(v.laws.begin(), v.laws.end(),
                     [](const Law& l) { return root_split(l.lhs) == root_split(l.rhs); });
}

std::string EventualDerivation::str() const {
  switch (kind) {
    case Kind::holds:
      return "Holds(at " + (at ? at->str() : std::string("b[]")) + ")";
    case Kind::fails_all_up_to:
      return "FailsAllUpTo(" + std::to_string(budget) + ")";
    case Kind::separated_by_root_split:
      return "NeverDerivable(root split)";
  }
  return {};
}

EventualDerivation eventually_derivable(const BinaryTree& p, const BinaryTree& q,
                                        const VarietyPresentation& v, std::size_t budget,
                                        bool use_root_split, std::size_t cap) {
  if (p.leaf_count() != q.leaf_count())
    throw std::invalid_argument("trees have different leaf counts");
  EventualDerivation result;
  result.budget = budget;
  if (use_root_split && !p.is_leaf() && root_split(p) != root_split(q) &&
      preserves_root_split(v)) {
    result.kind = EventualDerivation::Kind::separated_by_root_split;
    return result;
  }
  check_cap(p.leaf_count() + budget, cap);
  std::vector<std::pair<BinaryTree, BinaryTree>> level{{p, q}};
  std::unordered_set<std::string> visited{p.code() + "|" + q.code()};
  for (std::size_t added = 0;; ++added) {
    for (const auto& [a, b] : level) {
      ++result.examined;
      if (auto proof = derivable(a, b, v, cap)) {
        result.kind = EventualDerivation::Kind::holds;
        result.at = expansion_path(a, p);
        result.proof = std::move(proof);
        return result;
      }
    }
    if (added == budget) break;
    std::vector<std::pair<BinaryTree, BinaryTree>> next;
    for (const auto& [a, b] : level) {
      for (std::size_t i = 1; i <= a.leaf_count(); ++i) {
        BinaryTree ea = expand(a, i);
        BinaryTree eb = expand(b, i);
        if (visited.insert(ea.code() + "|" + eb.code()).second)
          next.emplace_back(std::move(ea), std::move(eb));
      }
    }
    level = std::move(next);
  }
  result.kind = EventualDerivation::Kind::fails_all_up_to;
  return result;
}

FElement shift_at_vertex(const FElement& g, const VertexWord& w) {
  FElement out = g;
  const std::string& bits = w.bits();
  for (auto it = bits.rbegin(); it != bits.rend(); ++it)
    out = shift_endo(out, *it == '0' ? Side::left : Side::right);
  return out;
}

namespace {

std::vector<VertexWord> words_up_to(std::size_t depth) {
  std::vector<VertexWord> out{VertexWord()};
  for (std::size_t start = 0; start < out.size(); ++start) {
    if (out[start].length() == depth) continue;
    out.push_back(out[start].child(0));
    out.push_back(out[start].child(1));
  }
  return out;
}

}  // namespace

std::vector<FElement> closure_generate(const std::vector<FElement>& k, std::size_t depth) {
  std::vector<FElement> gens;
  {
    std::unordered_set<FElement> seen;
    for (const VertexWord& w : words_up_to(depth)) {
      for (const FElement& g : k) {
        for (const FElement& h : {shift_at_vertex(g, w), shift_at_vertex(invert(g), w)})
          if (seen.insert(h).second) gens.push_back(h);
      }
    }
  }
  std::unordered_set<FElement> all{FElement()};
  std::vector<FElement> frontier{FElement()};
  for (std::size_t len = 0; len < depth; ++len) {
    std::vector<FElement> next;
    for (const FElement& a : frontier)
      for (const FElement& g : gens) {
        FElement prod = multiply(a, g);
        if (all.insert(prod).second) next.push_back(std::move(prod));
      }
    frontier = std::move(next);
  }
  std::vector<FElement> out(all.begin(), all.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string Membership::str() const {
  if (in) return "In(" + search.str() + ")";
  if (search.kind == EventualDerivation::Kind::separated_by_root_split) return "NotIn(root split)";
  return "NotDerivableUpTo(" + std::to_string(search.budget) + ")";
}

Membership membership_semidecide(const FElement& g, const std::vector<FElement>& k,
                                 std::size_t budget, bool use_root_split) {
  VarietyPresentation v;
  for (const FElement& h : k) v.laws.emplace_back(h.source(), h.target());
  Membership m;
  m.search = eventually_derivable(g.source(), g.target(), v, budget, use_root_split);
  m.in = m.search.kind == EventualDerivation::Kind::holds;
  return m;
}

}  // namespace assocf
