#include "assocf/thompson.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "assocf/error.hpp"
#include "assocf/expansion.hpp"

namespace assocf {

namespace {

std::vector<std::size_t> common_carets(const BinaryTree& p, const BinaryTree& q) {
  std::vector<std::size_t> a = free_carets(p);
  std::vector<std::size_t> b = free_carets(q);
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

FElement FElement::reduce(const BinaryTree& p, const BinaryTree& q) {
  if (p.leaf_count() != q.leaf_count())
    throw std::invalid_argument("tree pair has mismatched leaf counts: " +
                                std::to_string(p.leaf_count()) + " vs " +
                                std::to_string(q.leaf_count()));
  BinaryTree a = p;
  BinaryTree b = q;
  for (auto common = common_carets(a, b); !common.empty(); common = common_carets(a, b)) {
    // Free carets are disjoint, so contracting from the right keeps the
    // remaining indices valid.
    for (auto it = common.rbegin(); it != common.rend(); ++it) {
      a = contract(a, *it);
      b = contract(b, *it);
    }
  }
  return FElement(std::move(a), std::move(b));
}

std::string FElement::str() const {
  return "pair " + source_.str() + " " + target_.str();
}

FElement FElement::parse(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (text.substr(pos, 4) != "pair") throw ParseError("expected 'pair'", pos);
  pos += 4;
  // Split the remainder into two balanced tree literals.
  auto next_literal = [&](std::size_t& at) -> std::string_view {
    while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at]))) ++at;
    if (at >= text.size()) throw ParseError("expected a tree literal", at);
    std::size_t start = at;
    if (text[at] == '.') {
      ++at;
      return text.substr(start, 1);
    }
    if (text[at] != '(') throw ParseError("expected '.' or '('", at);
    int balance = 0;
    do {
      if (text[at] == '(') ++balance;
      if (text[at] == ')') --balance;
      ++at;
    } while (at < text.size() && balance > 0);
    if (balance != 0) throw ParseError("unbalanced tree literal", at);
    return text.substr(start, at - start);
  };
  std::size_t first_at = pos;
  std::string_view first = next_literal(pos);
  std::size_t second_at = pos;
  std::string_view second = next_literal(pos);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw ParseError("trailing input after pair", pos);
  BinaryTree p;
  BinaryTree q;
  try {
    p = BinaryTree::parse(first);
  } catch (const ParseError& e) {
    throw ParseError("bad source tree", first_at + e.position());
  }
  try {
    q = BinaryTree::parse(second);
  } catch (const ParseError& e) {
    throw ParseError("bad target tree", second_at + e.position());
  }
  if (p.leaf_count() != q.leaf_count())
    throw ParseError("tree pair has mismatched leaf counts", second_at);
  return reduce(p, q);
}

FElement multiply(const FElement& g, const FElement& h) {
  const BinaryTree top = join(g.target(), h.source());
  const ExpansionWord left = *expansion_path(top, g.target());
  const ExpansionWord right = *expansion_path(top, h.source());
  return FElement::reduce(left.apply(g.source()), right.apply(h.target()));
}

FElement invert(const FElement& g) { return FElement::reduce(g.target(), g.source()); }

FElement power(const FElement& g, std::int64_t exponent) {
  FElement base = exponent < 0 ? invert(g) : g;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                                 : static_cast<std::uint64_t>(exponent);
  FElement result;
  while (e > 0) {
    if (e & 1U) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1U;
  }
  return result;
}

FElement commutator(const FElement& g, const FElement& h) {
  return multiply(multiply(g, h), multiply(invert(g), invert(h)));
}

FElement conj(const FElement& g, const FElement& h) {
  return multiply(multiply(invert(h), g), h);
}

FElement shift_endo(const FElement& g, Side side) {
  // Shifting never creates a common free caret (the new root has a leaf
  // child on one side and the old root on the other), so this is reduced.
  if (g.is_identity()) return g;
  return FElement::reduce(shift(g.source(), side), shift(g.target(), side));
}

FElement reflect_auto(const FElement& g) {
  return FElement::reduce(reflect(g.source()), reflect(g.target()));
}

const Generators& generators() {
  static const Generators gens = [] {
    Generators out;
    out.x0 = FElement::reduce(BinaryTree::parse("((. .) .)"), BinaryTree::parse("(. (. .))"));
    out.x1 = shift_endo(out.x0, Side::right);
    out.x2 = conj(out.x1, out.x0);
    out.c0 = commutator(out.x0, out.x1);
    out.c1 = commutator(out.c0, shift_endo(out.c0, Side::right));
    return out;
  }();
  return gens;
}

std::string AbelianImage::str() const {
  return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

AbelianImage abelianize(const FElement& g) {
  const auto ds = g.source().leaf_depths();
  const auto dt = g.target().leaf_depths();
  // A leaf interval of length 2^-ds maps onto one of length 2^-dt, so the
  // slope there is 2^(ds - dt).
  const auto initial = static_cast<std::int64_t>(ds.front()) - static_cast<std::int64_t>(dt.front());
  const auto final = static_cast<std::int64_t>(ds.back()) - static_cast<std::int64_t>(dt.back());
  return {initial, -initial - final};
}

bool in_commutator_subgroup(const FElement& g) { return abelianize(g) == AbelianImage{}; }

bool normal_membership(const FElement& g, const NormalSubgroupSpec& spec) {
  if (spec.m == 0 && spec.n == 0) return g.is_identity();
  // Solve a(m,-m) + b(0,n) = (M,N): a*m = M and b*n = M + N.
  const AbelianImage img = abelianize(g);
  const auto m = static_cast<std::int64_t>(spec.m);
  const auto n = static_cast<std::int64_t>(spec.n);
  const bool first = m == 0 ? img.m == 0 : img.m % m == 0;
  const std::int64_t rest = img.m + img.n;
  const bool second = n == 0 ? rest == 0 : rest % n == 0;
  return first && second;
}

}  // namespace assocf
