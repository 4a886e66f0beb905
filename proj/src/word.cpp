#include <cctype>
#include <cstdint>
#include <string>

#include "assocf/error.hpp"
#include "assocf/thompson.hpp"

namespace assocf {

namespace {

// word    := factor ('*' factor)*
// factor  := primary ('^' (integer | primary))*
// primary := name | '[' word ',' word ']' | '(' word ')'
class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  FElement parse() {
    FElement g = word();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
    return g;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  FElement word() {
    FElement g = factor();
    while (accept('*')) g = multiply(g, factor());
    return g;
  }

  FElement factor() {
    FElement g = primary();
    while (accept('^')) {
      skip();
      if (pos_ < text_.size() &&
          (text_[pos_] == '-' || std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
        g = power(g, integer());
      } else {
        g = conj(g, primary());
      }
    }
    return g;
  }

  std::int64_t integer() {
    bool negative = false;
    if (text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    std::size_t start = pos_;
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError("exponent too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected an integer exponent", pos_);
    return negative ? -value : value;
  }

  FElement primary() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of word", pos_);
    if (accept('(')) {
      FElement g = word();
      expect(')');
      return g;
    }
    if (accept('[')) {
      FElement g = word();
      expect(',');
      FElement h = word();
      expect(']');
      return commutator(g, h);
    }
    const Generators& gens = generators();
    std::string_view rest = text_.substr(pos_);
    if (rest.substr(0, 1) == "1") {
      ++pos_;
      return FElement();
    }
    struct Named {
      std::string_view name;
      const FElement* element;
    };
    const Named names[] = {{"x0", &gens.x0}, {"x1", &gens.x1}, {"x2", &gens.x2},
                           {"c0", &gens.c0}, {"c1", &gens.c1}};
    for (const Named& n : names) {
      if (rest.substr(0, n.name.size()) == n.name) {
        pos_ += n.name.size();
        return *n.element;
      }
    }
    throw ParseError("unknown generator", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FElement parse_word(std::string_view text) { return WordParser(text).parse(); }

}  // namespace assocf
