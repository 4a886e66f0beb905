#include "assocf/dyadic.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "assocf/error.hpp"

namespace assocf {

namespace {

constexpr int kMaxExponent = 62;

std::int64_t checked_shift(std::int64_t v, int k) {
  if (v == 0 || k == 0) return v;
  std::int64_t out = 0;
  if (k >= 63 || __builtin_mul_overflow(v, std::int64_t{1} << k, &out))
    throw std::overflow_error("dyadic numerator overflow");
  return out;
}

int trailing_zeros(std::int64_t v) {
  return __builtin_ctzll(static_cast<unsigned long long>(v < 0 ? -v : v));
}

}  // namespace

Dyadic::Dyadic(std::int64_t numerator, int exponent) : num_(numerator), exp_(exponent) {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  // Negative exponents fold into the numerator.
  if (exp_ < 0) {
    num_ = checked_shift(num_, -exp_);
    exp_ = 0;
  }
  int strip = std::min(trailing_zeros(num_), exp_);
  num_ >>= strip;
  exp_ -= strip;
  if (exp_ > kMaxExponent) throw std::overflow_error("dyadic exponent overflow");
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  int e = std::max(exp_, o.exp_);
  std::int64_t a = checked_shift(num_, e - exp_);
  std::int64_t b = checked_shift(o.num_, e - o.exp_);
  std::int64_t sum = 0;
  if (__builtin_add_overflow(a, b, &sum)) throw std::overflow_error("dyadic sum overflow");
  return Dyadic(sum, e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

Dyadic Dyadic::scaled(int k) const { return Dyadic(num_, exp_ - k); }

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int e = std::max(a.exp_, b.exp_);
  return checked_shift(a.num_, e - a.exp_) <=> checked_shift(b.num_, e - b.exp_);
}

std::string Dyadic::str() const {
  return std::to_string(num_) + "/2^" + std::to_string(exp_);
}

Dyadic Dyadic::parse(std::string_view text) {
  std::size_t pos = 0;
  auto integer = [&](bool allow_sign) {
    bool negative = false;
    if (allow_sign && pos < text.size() && text[pos] == '-') {
      negative = true;
      ++pos;
    }
    std::size_t start = pos;
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, text[pos] - '0', &v))
        throw ParseError("integer too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected digits", pos);
    return negative ? -v : v;
  };
  std::int64_t num = integer(true);
  if (pos == text.size()) return Dyadic(num, 0);
  if (text.substr(pos, 3) != "/2^") throw ParseError("expected '/2^'", pos);
  pos += 3;
  std::size_t exp_at = pos;
  std::int64_t e = integer(false);
  if (pos != text.size()) throw ParseError("trailing input after dyadic", pos);
  if (e > kMaxExponent) throw ParseError("exponent too large", exp_at);
  return Dyadic(num, static_cast<int>(e));
}

std::string Dyadic::decimal(std::int64_t scale) const {
  // value*scale = q + r/2^e with 0 <= r < 2^e; each fraction digit is exact.
  std::int64_t v = 0;
  if (__builtin_mul_overflow(num_, scale, &v)) throw std::overflow_error("decimal overflow");
  bool negative = v < 0;
  std::uint64_t mag = negative ? static_cast<std::uint64_t>(-v) : static_cast<std::uint64_t>(v);
  std::uint64_t den = std::uint64_t{1} << exp_;
  std::string out = (negative ? "-" : "") + std::to_string(mag / den);
  std::uint64_t rem = mag % den;
  if (rem == 0) return out;
  out += '.';
  unsigned __int128 r = rem;
  while (r != 0) {
    r *= 10;
    out += static_cast<char>('0' + static_cast<int>(r / den));
    r %= den;
  }
  return out;
}

int log2_ratio(const Dyadic& a, const Dyadic& b) {
  if (a.numerator() <= 0 || b.numerator() <= 0)
    throw std::domain_error("log2_ratio needs positive arguments");
  std::int64_t na = a.numerator();
  std::int64_t nb = b.numerator();
  int sa = trailing_zeros(na);
  int sb = trailing_zeros(nb);
  if ((na >> sa) != (nb >> sb)) throw std::domain_error("ratio is not a power of two");
  return (sb - b.exponent()) - (sa - a.exponent());
}

}  // namespace assocf
