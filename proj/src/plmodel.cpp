#include "assocf/plmodel.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "assocf/error.hpp"

namespace assocf {

namespace {

const Dyadic kZero = Dyadic::integer(0);
const Dyadic kOne = Dyadic::integer(1);

// Left endpoints and depths of the leaf intervals of a tree.
std::vector<std::pair<Dyadic, int>> leaf_intervals(const BinaryTree& t) {
  std::vector<std::pair<Dyadic, int>> out;
  for (const VertexWord& w : leaf_addresses(t)) {
    Dyadic start;
    int depth = 0;
    for (char bit : w.bits()) {
      ++depth;
      if (bit == '1') start = start + Dyadic::half_power(depth);
    }
    out.emplace_back(start, depth);
  }
  return out;
}

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
  return log2_ratio(b.x - a.x, b.y - a.y) == log2_ratio(c.x - b.x, c.y - b.y);
}

// Standard dyadic interval [index/2^level, (index+1)/2^level].
struct Interval {
  int level;
  std::int64_t index;
};

class Subdivider {
 public:
  explicit Subdivider(const PLMap& f) : f_(f) {}

  // Subdivides [index/2^level, ...] until every piece maps linearly onto a
  // standard dyadic interval. Splitting only when forced gives the reduced
  // pair: two sibling pieces that both map onto siblings would have been a
  // single piece.
  void run(int level, std::int64_t index) {
    if (level > 62) throw std::overflow_error("subdivision too deep");
    const Dyadic a(index, level);
    const Dyadic b(index + 1, level);
    if (auto image = linear_image(a, b, level)) {
      domain_.push_back('0');
      images_.push_back(*image);
      return;
    }
    domain_.push_back('1');
    run(level + 1, 2 * index);
    run(level + 1, 2 * index + 1);
  }

  std::string& domain() { return domain_; }
  const std::vector<Interval>& images() const { return images_; }

 private:
  std::optional<Interval> linear_image(const Dyadic& a, const Dyadic& b, int level) const {
    const auto& pts = f_.breakpoints();
    for (const Breakpoint& p : pts) {
      if (a < p.x && p.x < b) return std::nullopt;
    }
    // Linear on [a,b]: find its segment.
    std::size_t seg = 0;
    while (!(pts[seg].x <= a && b <= pts[seg + 1].x)) ++seg;
    const int slope = f_.slope_exponent(seg);
    const int image_level = level - slope;
    if (image_level < 0) return std::nullopt;
    const Dyadic fa = f_(a);
    if (fa.exponent() > image_level) return std::nullopt;
    return Interval{image_level, fa.scaled(image_level).numerator()};
  }

  const PLMap& f_;
  std::string domain_;
  std::vector<Interval> images_;
};

void build_range(const std::vector<Interval>& pieces, std::size_t& next, int level,
                 std::int64_t index, std::string& code) {
  if (next >= pieces.size()) throw std::logic_error("range subdivision ran out of pieces");
  const Interval& piece = pieces[next];
  if (piece.level == level) {
    if (piece.index != index) throw std::logic_error("range pieces do not tile [0,1]");
    code.push_back('0');
    ++next;
    return;
  }
  code.push_back('1');
  build_range(pieces, next, level + 1, 2 * index, code);
  build_range(pieces, next, level + 1, 2 * index + 1, code);
}

}  // namespace

PLMap::PLMap() : points_{{kZero, kZero}, {kOne, kOne}} {}

PLMap::PLMap(std::vector<Breakpoint> points) {
  if (points.size() < 2) throw std::invalid_argument("a PL map needs at least two breakpoints");
  if (!(points.front() == Breakpoint{kZero, kZero}) || !(points.back() == Breakpoint{kOne, kOne}))
    throw std::invalid_argument("a PL map must fix 0 and 1");
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    if (!(points[k].x < points[k + 1].x) || !(points[k].y < points[k + 1].y))
      throw std::invalid_argument("breakpoints must be strictly increasing in x and y");
    try {
      (void)log2_ratio(points[k + 1].x - points[k].x, points[k + 1].y - points[k].y);
    } catch (const std::domain_error&) {
      throw std::invalid_argument("segment " + std::to_string(k) +
                                  " has a slope that is not a power of two");
    }
  }
  points_.push_back(points.front());
  for (std::size_t k = 1; k + 1 < points.size(); ++k) {
    if (!collinear(points_.back(), points[k], points[k + 1])) points_.push_back(points[k]);
  }
  points_.push_back(points.back());
}

PLMap PLMap::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto token = [&](char stop) {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != stop)
      ++pos;
    return std::pair{text.substr(start, pos - start), start};
  };
  auto dyadic = [&](std::pair<std::string_view, std::size_t> tok) {
    try {
      return Dyadic::parse(tok.first);
    } catch (const ParseError& e) {
      throw ParseError("bad dyadic", tok.second + e.position());
    }
  };
  skip();
  if (text.substr(pos, 2) != "pl") throw ParseError("expected 'pl'", pos);
  pos += 2;
  std::vector<Breakpoint> points;
  while (true) {
    skip();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    Dyadic x = dyadic(token('-'));
    skip();
    if (text.substr(pos, 2) != "->") throw ParseError("expected '->'", pos);
    pos += 2;
    Dyadic y = dyadic(token(')'));
    skip();
    if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
    ++pos;
    points.push_back({x, y});
  }
  try {
    return PLMap(std::move(points));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), text.size());
  }
}

int PLMap::slope_exponent(std::size_t segment) const {
  return log2_ratio(points_.at(segment + 1).x - points_[segment].x,
                    points_[segment + 1].y - points_[segment].y);
}

Dyadic PLMap::operator()(const Dyadic& x) const {
  if (x < kZero || kOne < x) throw std::domain_error("PL maps act on [0,1]");
  auto it = std::upper_bound(points_.begin(), points_.end(), x,
                             [](const Dyadic& v, const Breakpoint& b) { return v < b.x; });
  std::size_t seg = it == points_.end() ? points_.size() - 2
                                        : static_cast<std::size_t>(it - points_.begin()) - 1;
  return points_[seg].y + (x - points_[seg].x).scaled(slope_exponent(seg));
}

PLMap PLMap::inverse() const {
  std::vector<Breakpoint> swapped;
  swapped.reserve(points_.size());
  for (const Breakpoint& p : points_) swapped.push_back({p.y, p.x});
  return PLMap(std::move(swapped));
}

std::string PLMap::str() const {
  std::string out = "pl";
  for (const Breakpoint& p : points_) out += " (" + p.x.str() + " -> " + p.y.str() + ")";
  return out;
}

std::string PLMap::svg(int size_log2) const {
  const int size = 1 << size_log2;
  const int margin = 16;
  const int full = size + 2 * margin;
  // Exact screen coordinates; screen y grows downward.
  auto sx = [&](const Dyadic& x) {
    return (Dyadic::integer(margin) + x.scaled(size_log2)).decimal();
  };
  auto sy = [&](const Dyadic& y) {
    return (Dyadic::integer(margin + size) - y.scaled(size_log2)).decimal();
  };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << full << "\" height=\"" << full
      << "\" viewBox=\"0 0 " << full << ' ' << full << "\">\n";
  out << "  <rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << size
      << "\" height=\"" << size << "\" fill=\"none\" stroke=\"#999\"/>\n";
  out << "  <line x1=\"" << margin << "\" y1=\"" << margin + size << "\" x2=\"" << margin + size
      << "\" y2=\"" << margin << "\" stroke=\"#ccc\" stroke-dasharray=\"4 4\"/>\n";
  out << "  <polyline fill=\"none\" stroke=\"#c00\" stroke-width=\"2\" points=\"";
  for (std::size_t k = 0; k < points_.size(); ++k) {
    out << (k ? " " : "") << sx(points_[k].x) << ',' << sy(points_[k].y);
  }
  out << "\"/>\n";
  for (std::size_t k = 1; k + 1 < points_.size(); ++k) {
    out << "  <circle cx=\"" << sx(points_[k].x) << "\" cy=\"" << sy(points_[k].y)
        << "\" r=\"3\" fill=\"#c00\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

PLMap to_pl(const FElement& g) {
  const auto src = leaf_intervals(g.source());
  const auto dst = leaf_intervals(g.target());
  std::vector<Breakpoint> points;
  points.reserve(src.size() + 1);
  for (std::size_t k = 0; k < src.size(); ++k) points.push_back({src[k].first, dst[k].first});
  points.push_back({kOne, kOne});
  return PLMap(std::move(points));
}

FElement from_pl(const PLMap& f) {
  Subdivider sub(f);
  sub.run(0, 0);
  std::string range;
  std::size_t next = 0;
  build_range(sub.images(), next, 0, 0, range);
  return FElement::reduce(BinaryTree::from_code(std::move(sub.domain())),
                          BinaryTree::from_code(std::move(range)));
}

PLMap compose_pl(const PLMap& f, const PLMap& g) {
  std::vector<Dyadic> xs;
  for (const Breakpoint& p : g.breakpoints()) xs.push_back(p.x);
  const PLMap g_inv = g.inverse();
  for (const Breakpoint& p : f.breakpoints()) xs.push_back(g_inv(p.x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Breakpoint> points;
  points.reserve(xs.size());
  for (const Dyadic& x : xs) points.push_back({x, f(g(x))});
  return PLMap(std::move(points));
}

Support support_interval(const FElement& g) {
  const PLMap f = to_pl(g);
  const auto& pts = f.breakpoints();
  std::optional<std::size_t> first;
  std::size_t last = 0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const bool identity_here = pts[k].x == pts[k].y && f.slope_exponent(k) == 0;
    if (identity_here) continue;
    if (!first) first = k;
    last = k;
  }
  if (!first) return {kZero, kZero};
  return {pts[*first].x, pts[last + 1].x};
}

bool in_Fk(const FElement& g, int k) {
  if (k < 2) throw std::invalid_argument("F_k is defined for k >= 2");
  const Support s = support_interval(g);
  if (s.empty()) return true;
  const Dyadic edge = Dyadic::half_power(k);
  return edge <= s.lo && s.hi <= kOne - edge;
}

namespace {

bool is_half_power(const Dyadic& v) { return v.numerator() == 1 && v.exponent() >= 1; }

bool maps_halfpowers_into_set(const PLMap& f) {
  // Below the first interior breakpoint x1 the map is x -> 2^a x. For
  // 2^-n <= x1 (guaranteed once n >= exponent of x1) the image 2^(a-n) is
  // in the set iff n >= a + 1. So checking n up to
  //   N0 = max breakpoint exponent + |a| + 1
  // covers every n that is not settled by that linear tail.
  int max_exponent = 0;
  for (const Breakpoint& p : f.breakpoints()) max_exponent = std::max(max_exponent, p.x.exponent());
  const int a = f.initial_slope_exponent();
  const int cutoff = max_exponent + std::abs(a) + 1;
  for (int n = 1; n <= cutoff; ++n) {
    if (!is_half_power(f(Dyadic::half_power(n)))) return false;
  }
  return true;
}

}  // namespace

bool stabilizes_halfpowers(const FElement& g) {
  const PLMap f = to_pl(g);
  return maps_halfpowers_into_set(f) && maps_halfpowers_into_set(f.inverse());
}

}  // namespace assocf
