#include "assocf/expansion.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "assocf/error.hpp"

namespace assocf {

std::vector<std::size_t> normalize_letters(std::vector<std::size_t> w) {
  for (std::size_t letter : w) {
    if (letter == 0) throw std::invalid_argument("expansion indices are 1-based");
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] < w[k + 1]) {
        std::size_t i = w[k];
        std::size_t j = w[k + 1];
        w[k] = j + 1;
        w[k + 1] = i;
        changed = true;
      }
    }
  }
  return w;
}

ExpansionWord::ExpansionWord(std::vector<std::size_t> written)
    : letters_(normalize_letters(std::move(written))) {}

ExpansionWord ExpansionWord::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos >= text.size() || text[pos] != 'b') throw ParseError("expected 'b['", pos);
  ++pos;
  skip();
  if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
  ++pos;
  std::vector<std::size_t> letters;
  skip();
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      skip();
      std::size_t start = pos;
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        ++pos;
      }
      if (pos == start) throw ParseError("expected an index", pos);
      if (value == 0) throw ParseError("expansion indices are 1-based", start);
      letters.push_back(value);
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or ']'", pos);
    }
  }
  skip();
  if (pos != text.size()) throw ParseError("trailing input after expansion word", pos);
  return ExpansionWord(std::move(letters));
}

std::string ExpansionWord::str() const {
  std::string out = "b[";
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(letters_[k]);
  }
  return out + "]";
}

BinaryTree ExpansionWord::apply(const BinaryTree& p) const {
  BinaryTree t = p;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) t = expand(t, *it);
  return t;
}

ExpansionWord monoid_compose(const ExpansionWord& a, const ExpansionWord& b) {
  std::vector<std::size_t> written = a.letters();
  written.insert(written.end(), b.letters().begin(), b.letters().end());
  return ExpansionWord(std::move(written));
}

std::optional<ExpansionWord> expansion_path(const BinaryTree& r, const BinaryTree& p) {
  if (!is_expansion_of(r, p)) return std::nullopt;
  // Walk the leaves of r's code and p's code in parallel: whenever p has a
  // leaf where r has an interior vertex, expand it. Processing leaves left
  // to right yields non-decreasing indices, i.e. the normal form directly.
  std::vector<std::size_t> applied;
  BinaryTree cur = p;
  while (cur != r) {
    std::vector<VertexWord> leaves = leaf_addresses(cur);
    bool progressed = false;
    for (std::size_t k = 0; k < leaves.size(); ++k) {
      if (!subtree_at(r, leaves[k]).is_leaf()) {
        cur = expand(cur, k + 1);
        applied.push_back(k + 1);
        progressed = true;
        break;
      }
    }
    if (!progressed) throw std::logic_error("expansion_path made no progress");
  }
  std::reverse(applied.begin(), applied.end());
  return ExpansionWord(std::move(applied));
}

std::pair<ExpansionWord, ExpansionWord> common_left_multiples(const ExpansionWord& b1,
                                                              const ExpansionWord& b2) {
  std::size_t width = 1;
  for (std::size_t letter : b1.letters()) width = std::max(width, letter);
  for (std::size_t letter : b2.letters()) width = std::max(width, letter);
  const BinaryTree base = BinaryTree::right_comb(width);
  const BinaryTree t1 = b1.apply(base);
  const BinaryTree t2 = b2.apply(base);
  const BinaryTree top = join(t1, t2);
  return {*expansion_path(top, t1), *expansion_path(top, t2)};
}

}  // namespace assocf
