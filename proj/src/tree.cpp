#include "assocf/tree.hpp"

#include <cctype>
#include <stdexcept>

#include "assocf/error.hpp"

namespace assocf {

namespace {

// Position one past the subtree whose code starts at pos.
std::size_t subtree_end(const std::string& code, std::size_t pos) {
  std::size_t pending = 1;
  while (pending > 0) {
    pending += code[pos] == '1' ? 1 : -1;
    ++pos;
  }
  return pos;
}

// [begin, end) of the subtree at w, or npos in begin when w is not a vertex.
std::pair<std::size_t, std::size_t> locate(const std::string& code,
                                           const VertexWord& w) {
  std::size_t pos = 0;
  for (char bit : w.bits()) {
    if (code[pos] == '0') return {std::string::npos, std::string::npos};
    ++pos;
    if (bit == '1') pos = subtree_end(code, pos);
  }
  return {pos, subtree_end(code, pos)};
}

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  std::string parse() {
    std::string code;
    parse_tree(code);
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing input after tree", pos_);
    return code;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void parse_tree(std::string& code) {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of tree literal", pos_);
    if (text_[pos_] == '.') {
      ++pos_;
      code.push_back('0');
      return;
    }
    if (text_[pos_] != '(') throw ParseError("expected '.' or '('", pos_);
    ++pos_;
    code.push_back('1');
    parse_tree(code);
    parse_tree(code);
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != ')')
      throw ParseError("expected ')'", pos_);
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render(const std::string& code, std::size_t& pos, std::string& out) {
  if (code[pos++] == '0') {
    out.push_back('.');
    return;
  }
  out.push_back('(');
  render(code, pos, out);
  out.push_back(' ');
  render(code, pos, out);
  out.push_back(')');
}

void reflect_into(const std::string& code, std::size_t pos, std::string& out) {
  if (code[pos] == '0') {
    out.push_back('0');
    return;
  }
  std::size_t right = subtree_end(code, pos + 1);
  out.push_back('1');
  reflect_into(code, right, out);
  reflect_into(code, pos + 1, out);
}

void join_into(const std::string& a, std::size_t& i, const std::string& b,
               std::size_t& j, std::string& out) {
  if (a[i] == '0') {
    std::size_t end = subtree_end(b, j);
    out.append(b, j, end - j);
    ++i;
    j = end;
    return;
  }
  if (b[j] == '0') {
    std::size_t end = subtree_end(a, i);
    out.append(a, i, end - i);
    i = end;
    ++j;
    return;
  }
  out.push_back('1');
  ++i;
  ++j;
  join_into(a, i, b, j, out);
  join_into(a, i, b, j, out);
}

bool contains(const std::string& big, std::size_t& i, const std::string& small,
              std::size_t& j) {
  if (small[j] == '0') {
    ++j;
    i = subtree_end(big, i);
    return true;
  }
  if (big[i] == '0') return false;
  ++i;
  ++j;
  return contains(big, i, small, j) && contains(big, i, small, j);
}

}  // namespace

VertexWord VertexWord::parse(std::string_view text) {
  if (text.empty() || text == "e" || text == "ε") return VertexWord();
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] != '0' && text[k] != '1')
      throw ParseError("vertex word must be over {0,1}", k);
  }
  return VertexWord(std::string(text));
}

VertexWord VertexWord::child(int side) const {
  return VertexWord(bits_ + (side == 0 ? '0' : '1'));
}

std::string VertexWord::str() const { return bits_.empty() ? "ε" : bits_; }

BinaryTree BinaryTree::node(const BinaryTree& left, const BinaryTree& right) {
  std::string code;
  code.reserve(1 + left.code_.size() + right.code_.size());
  code.push_back('1');
  code += left.code_;
  code += right.code_;
  return BinaryTree(std::move(code));
}

BinaryTree BinaryTree::parse(std::string_view text) {
  return BinaryTree(LiteralParser(text).parse());
}

BinaryTree BinaryTree::from_code(std::string code) {
  if (code.empty()) throw std::invalid_argument("empty tree code");
  std::size_t pending = 1;
  for (std::size_t k = 0; k < code.size(); ++k) {
    if (pending == 0) throw std::invalid_argument("trailing symbols in tree code");
    if (code[k] == '1')
      ++pending;
    else if (code[k] == '0')
      --pending;
    else
      throw std::invalid_argument("tree code must be over {0,1}");
  }
  if (pending != 0) throw std::invalid_argument("incomplete tree code");
  return BinaryTree(std::move(code));
}

BinaryTree BinaryTree::right_comb(std::size_t leaves) {
  if (leaves == 0) throw std::invalid_argument("a tree has at least one leaf");
  std::string code;
  for (std::size_t k = 1; k < leaves; ++k) code += "10";
  code.push_back('0');
  return BinaryTree(std::move(code));
}

BinaryTree BinaryTree::complete(std::size_t depth) {
  BinaryTree t;
  for (std::size_t k = 0; k < depth; ++k) t = node(t, t);
  return t;
}

std::string BinaryTree::str() const {
  std::string out;
  std::size_t pos = 0;
  render(code_, pos, out);
  return out;
}

BinaryTree BinaryTree::left() const {
  if (is_leaf()) throw std::invalid_argument("a leaf has no children");
  return BinaryTree(code_.substr(1, subtree_end(code_, 1) - 1));
}

BinaryTree BinaryTree::right() const {
  if (is_leaf()) throw std::invalid_argument("a leaf has no children");
  return BinaryTree(code_.substr(subtree_end(code_, 1)));
}

std::size_t BinaryTree::depth() const {
  std::size_t best = 0;
  for (std::size_t d : leaf_depths()) best = std::max(best, d);
  return best;
}

std::vector<std::size_t> BinaryTree::leaf_depths() const {
  // Preorder walk with an explicit stack of pending child depths.
  std::vector<std::size_t> depths;
  std::vector<std::size_t> stack{0};
  for (char c : code_) {
    std::size_t d = stack.back();
    stack.pop_back();
    if (c == '1') {
      stack.push_back(d + 1);
      stack.push_back(d + 1);
    } else {
      depths.push_back(d);
    }
  }
  return depths;
}

BinaryTree expand(const BinaryTree& p, std::size_t i) {
  if (i == 0) throw std::invalid_argument("expansion index is 1-based");
  if (i > p.leaf_count()) return p;
  std::string code = p.code();
  std::size_t seen = 0;
  for (std::size_t k = 0; k < code.size(); ++k) {
    if (code[k] == '0' && ++seen == i) {
      code.replace(k, 1, "100");
      break;
    }
  }
  return BinaryTree::from_code(std::move(code));
}

BinaryTree contract(const BinaryTree& p, std::size_t i) {
  const std::string& code = p.code();
  std::size_t seen = 0;
  for (std::size_t k = 0; k < code.size(); ++k) {
    if (code[k] != '0') continue;
    if (++seen == i) {
      if (k == 0 || code[k - 1] != '1' || k + 1 >= code.size() || code[k + 1] != '0')
        throw std::invalid_argument("leaves " + std::to_string(i) + ", " +
                                    std::to_string(i + 1) + " are not a free caret");
      std::string out = code;
      out.replace(k - 1, 3, "0");
      return BinaryTree::from_code(std::move(out));
    }
  }
  throw std::invalid_argument("leaf index out of range");
}

BinaryTree shift(const BinaryTree& p, Side side) {
  return side == Side::right ? BinaryTree::node(BinaryTree::leaf(), p)
                             : BinaryTree::node(p, BinaryTree::leaf());
}

BinaryTree reflect(const BinaryTree& p) {
  std::string out;
  out.reserve(p.code().size());
  reflect_into(p.code(), 0, out);
  return BinaryTree::from_code(std::move(out));
}

std::vector<VertexWord> leaf_addresses(const BinaryTree& p) {
  std::vector<VertexWord> out;
  for (const VertexWord& w : vertex_addresses(p)) {
    if (subtree_at(p, w).is_leaf()) out.push_back(w);
  }
  return out;
}

std::vector<VertexWord> vertex_addresses(const BinaryTree& p) {
  std::vector<VertexWord> out;
  std::vector<VertexWord> stack{VertexWord()};
  for (char c : p.code()) {
    VertexWord w = stack.back();
    stack.pop_back();
    if (c == '1') {
      stack.push_back(w.child(1));
      stack.push_back(w.child(0));
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<std::size_t> free_carets(const BinaryTree& p) {
  // A free caret is the code fragment "100"; its first leaf index is the
  // number of leaves before it plus one.
  std::vector<std::size_t> out;
  const std::string& code = p.code();
  std::size_t leaves_before = 0;
  for (std::size_t k = 0; k < code.size(); ++k) {
    if (code[k] == '1' && k + 2 < code.size() && code[k + 1] == '0' && code[k + 2] == '0')
      out.push_back(leaves_before + 1);
    if (code[k] == '0') ++leaves_before;
  }
  return out;
}

BinaryTree subtree_at(const BinaryTree& p, const VertexWord& w) {
  auto [begin, end] = locate(p.code(), w);
  if (begin == std::string::npos)
    throw std::invalid_argument("vertex " + w.str() + " is not in the tree");
  return BinaryTree::from_code(p.code().substr(begin, end - begin));
}

bool has_vertex(const BinaryTree& p, const VertexWord& w) {
  return locate(p.code(), w).first != std::string::npos;
}

BinaryTree replace_subtree(const BinaryTree& p, const VertexWord& w,
                           const BinaryTree& replacement) {
  auto [begin, end] = locate(p.code(), w);
  if (begin == std::string::npos)
    throw std::invalid_argument("vertex " + w.str() + " is not in the tree");
  std::string code = p.code();
  code.replace(begin, end - begin, replacement.code());
  return BinaryTree::from_code(std::move(code));
}

BinaryTree graft(const BinaryTree& shape, const std::vector<BinaryTree>& parts) {
  if (parts.size() != shape.leaf_count())
    throw std::invalid_argument("graft needs one tree per leaf");
  std::string code;
  std::size_t next = 0;
  for (char c : shape.code()) {
    if (c == '1')
      code.push_back('1');
    else
      code += parts[next++].code();
  }
  return BinaryTree::from_code(std::move(code));
}

BinaryTree join(const BinaryTree& p, const BinaryTree& q) {
  std::string out;
  std::size_t i = 0;
  std::size_t j = 0;
  join_into(p.code(), i, q.code(), j, out);
  return BinaryTree::from_code(std::move(out));
}

bool is_expansion_of(const BinaryTree& r, const BinaryTree& base) {
  std::size_t i = 0;
  std::size_t j = 0;
  return contains(r.code(), i, base.code(), j);
}

std::vector<BinaryTree> enumerate_trees(std::size_t n, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("a tree has at least one leaf");
  if (n > cap)
    throw BudgetError("tree enumeration capped at " + std::to_string(cap) +
                      " leaves, requested " + std::to_string(n));
  std::vector<std::vector<BinaryTree>> by_size(n + 1);
  by_size[1].push_back(BinaryTree::leaf());
  for (std::size_t size = 2; size <= n; ++size) {
    auto& out = by_size[size];
    for (std::size_t k = 1; k < size; ++k) {
      for (const auto& l : by_size[k])
        for (const auto& r : by_size[size - k]) out.push_back(BinaryTree::node(l, r));
    }
  }
  return std::move(by_size[n]);
}

}  // namespace assocf
