#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "assocf/dyadic.hpp"
#include "assocf/thompson.hpp"

namespace assocf {

struct Breakpoint {
  Dyadic x;
  Dyadic y;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Increasing piecewise-linear homeomorphism of [0,1] with dyadic
/// breakpoints and power-of-two slopes, stored with the minimal breakpoint
/// list (no breakpoint collinear with its neighbours).
class PLMap {
 public:
  /// The identity map.
  PLMap();
  /// Validates and prunes; throws std::invalid_argument when the points do
  /// not describe such a map.
  explicit PLMap(std::vector<Breakpoint> points);

  static PLMap identity() { return PLMap(); }
  /// "pl (x0/2^e0 -> y0/2^f0) ...". Throws ParseError.
  static PLMap parse(std::string_view text);

  const std::vector<Breakpoint>& breakpoints() const noexcept { return points_; }
  /// log2 of the slope on segment k (between breakpoints k and k+1).
  int slope_exponent(std::size_t segment) const;
  int initial_slope_exponent() const { return slope_exponent(0); }
  int final_slope_exponent() const { return slope_exponent(points_.size() - 2); }
  bool is_identity() const noexcept { return points_.size() == 2; }

  Dyadic operator()(const Dyadic& x) const;
  PLMap inverse() const;

  std::string str() const;
  /// Standalone SVG drawing of the graph over a 2^size_log2 pixel square.
  std::string svg(int size_log2 = 9) const;

  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  std::vector<Breakpoint> points_;
};

PLMap to_pl(const FElement& g);
/// Throws std::invalid_argument if the map does not come from F (it always
/// does once constructed as a PLMap).
FElement from_pl(const PLMap& f);

/// f after g.
PLMap compose_pl(const PLMap& f, const PLMap& g);
inline Dyadic eval_pl(const PLMap& f, const Dyadic& x) { return f(x); }

/// Smallest closed interval outside which g is the identity; the identity
/// itself has the degenerate support [0,0].
struct Support {
  Dyadic lo;
  Dyadic hi;
  bool empty() const { return lo == hi; }
};

Support support_interval(const FElement& g);
/// Membership in F_k: support inside [2^-k, 1 - 2^-k]. Requires k >= 2.
bool in_Fk(const FElement& g, int k);
/// Whether g maps {2^-n : n >= 1} bijectively onto itself.
bool stabilizes_halfpowers(const FElement& g);

}  // namespace assocf
