#include "assocf/magma.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "assocf/error.hpp"
#include "sweep.hpp"

namespace assocf {

Law::Law(BinaryTree l, BinaryTree r) : lhs(std::move(l)), rhs(std::move(r)) {
  if (lhs.leaf_count() != rhs.leaf_count())
    throw std::invalid_argument("law sides have different leaf counts (" +
                                std::to_string(lhs.leaf_count()) + " vs " +
                                std::to_string(rhs.leaf_count()) + ")");
}

Law Law::parse(std::string_view text) {
  std::size_t eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError("expected '='", text.size());
  if (text.find('=', eq + 1) != std::string_view::npos)
    throw ParseError("more than one '='", text.find('=', eq + 1));
  BinaryTree l;
  BinaryTree r;
  try {
    l = BinaryTree::parse(text.substr(0, eq));
  } catch (const ParseError& e) {
    throw ParseError("left side: bad tree", e.position());
  }
  try {
    r = BinaryTree::parse(text.substr(eq + 1));
  } catch (const ParseError& e) {
    throw ParseError("right side: bad tree", eq + 1 + e.position());
  }
  if (l.leaf_count() != r.leaf_count())
    throw ParseError("sides have " + std::to_string(l.leaf_count()) + " and " +
                         std::to_string(r.leaf_count()) + " leaves",
                     eq);
  return Law(std::move(l), std::move(r));
}

std::string Law::str() const { return lhs.str() + " = " + rhs.str(); }

Law associative_law() {
  return Law(BinaryTree::parse("((. .) .)"), BinaryTree::parse("(. (. .))"));
}

Magma::Magma(std::vector<std::string> names, std::vector<std::vector<Element>> table)
    : names_(std::move(names)) {
  const std::size_t n = names_.size();
  if (n == 0) throw std::invalid_argument("a magma needs at least one element");
  std::set<std::string> seen;
  for (const std::string& s : names_) {
    if (s.empty()) throw std::invalid_argument("empty element name");
    if (!seen.insert(s).second) throw std::invalid_argument("duplicate element name '" + s + "'");
  }
  if (table.size() != n) throw std::invalid_argument("table must have one row per element");
  table_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw std::invalid_argument("row " + std::to_string(i) + " has " +
                                  std::to_string(table[i].size()) + " entries, expected " +
                                  std::to_string(n));
    for (Element e : table[i]) {
      if (e < 0 || static_cast<std::size_t>(e) >= n)
        throw std::invalid_argument("table entry out of range in row " + std::to_string(i));
      table_.push_back(e);
    }
  }

  std::vector<bool> hit(n, false);
  for (Element e : table_) hit[static_cast<std::size_t>(e)] = true;
  simply_perfect_ = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });

  const auto size = static_cast<Element>(n);
  associative_ = true;
  for (Element a = 0; a < size && associative_; ++a)
    for (Element b = 0; b < size && associative_; ++b)
      for (Element c = 0; c < size; ++c)
        if (op(op(a, b), c) != op(a, op(b, c))) {
          associative_ = false;
          break;
        }

  for (Element e = 0; e < size; ++e) {
    bool left = true;
    bool right = true;
    for (Element x = 0; x < size; ++x) {
      left = left && op(e, x) == x;
      right = right && op(x, e) == x;
    }
    if (left && !left_identity_) left_identity_ = e;
    if (right && !right_identity_) right_identity_ = e;
  }

  std::vector<Element> current(n);
  for (std::size_t i = 0; i < n; ++i) current[i] = static_cast<Element>(i);
  chain_.push_back(current);
  while (true) {
    std::vector<bool> in(n, false);
    for (Element a : current)
      for (Element b : current) in[static_cast<std::size_t>(op(a, b))] = true;
    std::vector<Element> next;
    for (std::size_t i = 0; i < n; ++i)
      if (in[i]) next.push_back(static_cast<Element>(i));
    if (next == current) break;
    chain_.push_back(next);
    current = std::move(next);
  }
}

std::optional<Element> Magma::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Element>(i);
  return std::nullopt;
}

std::optional<Element> Magma::two_sided_identity() const noexcept {
  if (left_identity_ && right_identity_ && *left_identity_ == *right_identity_)
    return left_identity_;
  return std::nullopt;
}

Element evaluate(const Magma& m, const BinaryTree& p, const std::vector<Element>& args) {
  if (args.size() != p.leaf_count())
    throw std::invalid_argument("tree has " + std::to_string(p.leaf_count()) +
                                " leaves but " + std::to_string(args.size()) +
                                " arguments were given");
  for (Element e : args)
    if (e < 0 || static_cast<std::size_t>(e) >= m.size())
      throw std::invalid_argument("argument out of range");
  return detail::TreeProgram(p).run(m, args.data());
}

Satisfaction satisfies(const Magma& m, const Law& law, const SweepOptions& opts) {
  if (law.trivial()) return {};
  const std::size_t n = law.arity();
  const std::uint64_t total = detail::tuple_count(m.size(), n, opts.cost_guard);
  detail::TreeProgram lhs(law.lhs);
  detail::TreeProgram rhs(law.rhs);
  std::uint64_t bad = detail::first_failure(
      m.size(), n, total, opts.threads,
      [&](const Element* t) { return lhs.run(m, t) == rhs.run(m, t); });
  if (bad == total) return {};
  std::vector<Element> witness(n);
  detail::decode_tuple(bad, m.size(), witness);
  return {false, std::move(witness)};
}

Law expand_law(const Law& law, const ExpansionWord& b) {
  return Law(b.apply(law.lhs), b.apply(law.rhs));
}

bool expansion_monotone_check(const Magma& m, const Law& law, const ExpansionWord& b,
                              const SweepOptions& opts) {
  if (!satisfies(m, law, opts).holds)
    throw std::invalid_argument("the law does not hold, so there is nothing to expand");
  return satisfies(m, expand_law(law, b), opts).holds;
}

std::string EventualResult::str() const {
  switch (kind) {
    case Kind::holds:
      return "Holds(at " + (at ? at->str() : std::string("b[]")) + ")";
    case Kind::fails_all_up_to:
      return "FailsAllUpTo(" + std::to_string(budget) + ")";
    case Kind::decided_by_perfection:
      return std::string("DecidedByPerfection(") + (value ? "true" : "false") + ")";
  }
  return {};
}

EventualResult satisfies_eventually(const Magma& m, const Law& law, std::size_t budget,
                                    bool use_perfection, const SweepOptions& opts) {
  EventualResult result;
  result.budget = budget;
  if (use_perfection && m.simply_perfect()) {
    result.kind = EventualResult::Kind::decided_by_perfection;
    result.value = satisfies(m, law, opts).holds;
    result.examined = 1;
    return result;
  }
  std::vector<Law> level{law};
  std::unordered_set<std::string> visited{law.lhs.code() + "|" + law.rhs.code()};
  for (std::size_t added = 0;; ++added) {
    for (const Law& candidate : level) {
      ++result.examined;
      if (satisfies(m, candidate, opts).holds) {
        result.kind = EventualResult::Kind::holds;
        result.at = expansion_path(candidate.lhs, law.lhs);
        return result;
      }
    }
    if (added == budget) break;
    std::vector<Law> next;
    for (const Law& candidate : level) {
      for (std::size_t i = 1; i <= candidate.arity(); ++i) {
        Law grown(expand(candidate.lhs, i), expand(candidate.rhs, i));
        if (visited.insert(grown.lhs.code() + "|" + grown.rhs.code()).second)
          next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  result.kind = EventualResult::Kind::fails_all_up_to;
  return result;
}

std::optional<SolvableWitness> is_solvable(const Magma& m) {
  const auto& chain = m.derived_chain();
  for (std::size_t k = 0; k < chain.size(); ++k) {
    if (chain[k].size() == 1) return SolvableWitness{chain[k][0], BinaryTree::complete(k), k};
  }
  return std::nullopt;
}

namespace {

// Image sets combine independently across the two subtrees because their
// leaves are distinct variables.
std::vector<bool> image_of(const Magma& m, const std::string& code, std::size_t& pos,
                           std::size_t& leaf,
                           const std::vector<std::optional<Element>>& fixed) {
  const std::size_t n = m.size();
  if (code[pos++] == '0') {
    std::vector<bool> out(n, fixed[leaf] ? false : true);
    if (fixed[leaf]) out[static_cast<std::size_t>(*fixed[leaf])] = true;
    ++leaf;
    return out;
  }
  std::vector<bool> l = image_of(m, code, pos, leaf, fixed);
  std::vector<bool> r = image_of(m, code, pos, leaf, fixed);
  std::vector<bool> out(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    if (!l[a]) continue;
    for (std::size_t b = 0; b < n; ++b)
      if (r[b]) out[static_cast<std::size_t>(m.op(static_cast<Element>(a), static_cast<Element>(b)))] = true;
  }
  return out;
}

}  // namespace

std::vector<Element> restricted_image(const Magma& m, const BinaryTree& p,
                                      const std::vector<std::optional<Element>>& fixed) {
  std::vector<std::optional<Element>> assignment = fixed;
  if (assignment.size() > p.leaf_count())
    throw std::invalid_argument("more fixed positions than leaves");
  assignment.resize(p.leaf_count());
  for (const auto& e : assignment)
    if (e && (*e < 0 || static_cast<std::size_t>(*e) >= m.size()))
      throw std::invalid_argument("fixed element out of range");
  std::size_t pos = 0;
  std::size_t leaf = 0;
  std::vector<bool> in = image_of(m, p.code(), pos, leaf, assignment);
  std::vector<Element> out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(static_cast<Element>(i));
  return out;
}

std::vector<Element> centralizer(const Magma& m, const std::vector<Element>& subset,
                                 std::optional<Element> zero) {
  if (!zero) throw std::invalid_argument("centralizer needs a designated zero element");
  std::vector<Element> out;
  for (Element x = 0; static_cast<std::size_t>(x) < m.size(); ++x) {
    if (std::all_of(subset.begin(), subset.end(), [&](Element u) { return m.op(x, u) == *zero; }))
      out.push_back(x);
  }
  return out;
}

}  // namespace assocf
