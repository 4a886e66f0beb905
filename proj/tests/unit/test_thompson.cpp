#include "assocf/error.hpp"
#include "assocf/plmodel.hpp"
#include "assocf/thompson.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace assocf;

namespace {

BinaryTree T(const char* s) { return BinaryTree::parse(s); }
const Generators& G() { return generators(); }
FElement s0(const FElement& g) { return shift_endo(g, Side::left); }
FElement s1(const FElement& g) { return shift_endo(g, Side::right); }

// Contracts common free carets in random order until none remain.
FElement random_reduction(BinaryTree p, BinaryTree q, testing::Rng& rng) {
  while (true) {
    std::vector<std::size_t> common;
    auto fp = free_carets(p);
    auto fq = free_carets(q);
    std::set_intersection(fp.begin(), fp.end(), fq.begin(), fq.end(), std::back_inserter(common));
    if (common.empty()) return FElement::parse("pair " + p.str() + " " + q.str());
    std::size_t i = common[std::uniform_int_distribution<std::size_t>(0, common.size() - 1)(rng)];
    p = contract(p, i);
    q = contract(q, i);
  }
}

// Exponent sums of x0 and x1 in a random word, tracked alongside the product.
struct Tracked {
  FElement g;
  std::int64_t e0 = 0;
  std::int64_t e1 = 0;
};

Tracked tracked_word(testing::Rng& rng) {
  std::uniform_int_distribution<int> len(0, 20);
  std::uniform_int_distribution<int> pick(0, 3);
  Tracked t;
  for (int k = len(rng); k > 0; --k) {
    switch (pick(rng)) {
      case 0: t.g = multiply(t.g, G().x0); ++t.e0; break;
      case 1: t.g = multiply(t.g, invert(G().x0)); --t.e0; break;
      case 2: t.g = multiply(t.g, G().x1); ++t.e1; break;
      default: t.g = multiply(t.g, invert(G().x1)); --t.e1; break;
    }
  }
  return t;
}

}  // namespace

TEST_CASE("generators") {
  CHECK(G().x0 == FElement::parse("pair ((. .) .) (. (. .))"));
  CHECK(G().x0.leaf_count() == 3);
  CHECK(G().x1.leaf_count() == 4);
  CHECK(G().c0.leaf_count() == 5);
  CHECK(s1(G().x0) == G().x1);
  CHECK(G().c0 == commutator(G().x0, G().x1));
  CHECK(G().c1 == commutator(G().c0, s1(G().c0)));
}

TEST_CASE("generator identities under the shift endomorphisms") {
  const auto& g = G();
  CHECK(s1(g.x1) == g.x2);
  CHECK(conj(g.x1, g.x0) == g.x2);
  CHECK(s0(g.x0) == conj(multiply(g.x0, invert(g.x1)), invert(g.x0)));
  CHECK(s0(g.x1) == conj(multiply(g.x1, invert(g.x2)), invert(multiply(g.x0, g.x1))));
  testing::Rng rng(31);
  for (int k = 0; k < 100; ++k) {
    FElement h = testing::random_element(rng);
    CHECK(reflect_auto(reflect_auto(h)) == h);
    CHECK(reflect_auto(s1(reflect_auto(h))) == s0(h));
  }
}

TEST_CASE("reduce") {
  BinaryTree p = T("((. .) (. .))");
  CHECK(reduce(p, p).is_identity());
  CHECK_THROWS_AS(reduce(T("(. .)"), T(".")), std::invalid_argument);
  // x0 expanded twice at matching indices reduces back to the 3-leaf pair.
  BinaryTree a = expand(expand(G().x0.source(), 2), 4);
  BinaryTree b = expand(expand(G().x0.target(), 2), 4);
  CHECK(reduce(a, b) == G().x0);
  testing::Rng rng(37);
  for (int k = 0; k < 200; ++k) {
    std::size_t n = 1 + k % 7;
    BinaryTree x = testing::random_tree(rng, n);
    BinaryTree y = testing::random_tree(rng, n);
    std::size_t i = 1 + static_cast<std::size_t>(k) % n;
    CHECK(reduce(expand(x, i), expand(y, i)) == reduce(x, y));
    CHECK(random_reduction(x, y, rng) == reduce(x, y));
    CHECK(random_reduction(x, y, rng) == random_reduction(x, y, rng));
  }
}

TEST_CASE("multiplication") {
  const auto& g = G();
  CHECK(multiply(g.x0, FElement()) == g.x0);
  CHECK(multiply(g.x0, invert(g.x0)).is_identity());
  CHECK(multiply(invert(g.x0), g.x0).is_identity());
  CHECK(invert(FElement()).is_identity());
  // Hand composition of the x0 map with itself: 4t, 2t+1/4, t/2+5/8, t/4+3/4.
  CHECK(multiply(g.x0, g.x0) == FElement::parse("pair (((. .) .) .) (. (. (. .)))"));
  CHECK(to_pl(multiply(g.x0, g.x0)) ==
        PLMap::parse("pl (0 -> 0) (1/2^3 -> 1/2^1) (1/2^2 -> 3/2^2) (1/2^1 -> 7/2^3) (1 -> 1)"));
  CHECK(power(g.x0, 2) == multiply(g.x0, g.x0));
  CHECK(power(g.x0, -3) == invert(multiply(g.x0, multiply(g.x0, g.x0))));
  CHECK(power(g.x1, 0).is_identity());
  CHECK(commutator(g.x1, g.x1).is_identity());

  testing::Rng rng(41);
  for (int k = 0; k < 1000; ++k) {
    FElement a = testing::random_word(rng);
    FElement b = testing::random_word(rng);
    FElement c = testing::random_word(rng);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, invert(a)).is_identity());
    CHECK(invert(invert(a)) == a);
  }
}

TEST_CASE("shift endomorphisms are injective homomorphisms") {
  testing::Rng rng(43);
  for (int k = 0; k < 500; ++k) {
    FElement a = testing::random_element(rng);
    FElement b = testing::random_element(rng);
    for (Side side : {Side::left, Side::right}) {
      CHECK(shift_endo(multiply(a, b), side) ==
            multiply(shift_endo(a, side), shift_endo(b, side)));
      if (a != b) CHECK(shift_endo(a, side) != shift_endo(b, side));
      FElement s = shift_endo(a, side);
      CHECK(reduce(s.source(), s.target()) == s);
    }
  }
  CHECK(s0(FElement()).is_identity());
  CHECK(s1(FElement()).is_identity());
}

TEST_CASE("abelianization") {
  const auto& g = G();
  CHECK(abelianize(FElement()) == AbelianImage{0, 0});
  CHECK(abelianize(g.x0) == AbelianImage{1, 0});
  CHECK(abelianize(g.x1) == AbelianImage{0, 1});
  CHECK(abelianize(g.c0) == AbelianImage{0, 0});
  CHECK(in_commutator_subgroup(g.c0));
  CHECK(in_commutator_subgroup(FElement()));
  CHECK_FALSE(in_commutator_subgroup(g.x0));
  testing::Rng rng(47);
  for (int k = 0; k < 1000; ++k) {
    Tracked t = tracked_word(rng);
    CHECK(abelianize(t.g) == AbelianImage{t.e0, t.e1});
    FElement h = testing::random_element(rng);
    AbelianImage ab = abelianize(h);
    CHECK(abelianize(multiply(t.g, h)) == abelianize(t.g) + ab);
    CHECK(abelianize(s0(h)) == AbelianImage{ab.m, -ab.m});
    CHECK(abelianize(s1(h)) == AbelianImage{0, ab.m + ab.n});
    PLMap f = to_pl(h);
    bool flat = f.initial_slope_exponent() == 0 && f.final_slope_exponent() == 0;
    CHECK(in_commutator_subgroup(h) == flat);
  }
}

TEST_CASE("normal subgroups") {
  const auto& g = G();
  CHECK(normal_membership(g.x0, {1, 1}));
  CHECK_FALSE(normal_membership(g.x0, {2, 1}));
  CHECK(normal_membership(FElement(), {0, 0}));
  CHECK_FALSE(normal_membership(g.c0, {0, 0}));
  testing::Rng rng(53);
  std::uniform_int_distribution<std::uint64_t> small(0, 5);
  for (int k = 0; k < 1000; ++k) {
    FElement h = testing::random_element(rng);
    NormalSubgroupSpec spec{small(rng), small(rng)};
    if (spec.m == 0 && spec.n == 0) spec.n = 1;
    AbelianImage ab = abelianize(h);
    bool solvable = false;
    for (std::int64_t a = -45; a <= 45 && !solvable; ++a)
      for (std::int64_t b = -45; b <= 45 && !solvable; ++b)
        solvable = a * static_cast<std::int64_t>(spec.m) == ab.m &&
                   -a * static_cast<std::int64_t>(spec.m) + b * static_cast<std::int64_t>(spec.n) == ab.n;
    CHECK(normal_membership(h, spec) == solvable);
    if (ab == AbelianImage{0, 0}) CHECK(normal_membership(h, spec));
  }
}

TEST_CASE("words") {
  const auto& g = G();
  CHECK(parse_word("x0*x0^-1").is_identity());
  CHECK(parse_word("[x0,x1]") == g.c0);
  CHECK(parse_word("x1^x0") == g.x2);
  CHECK(parse_word("c1") == g.c1);
  CHECK(parse_word(" (x0 * x1)^2 ") == multiply(multiply(g.x0, g.x1), multiply(g.x0, g.x1)));
  CHECK(parse_word("1") == FElement());
  CHECK_THROWS_AS(parse_word("x3"), ParseError);
  CHECK_THROWS_AS(parse_word("[x0,x1"), ParseError);
  try {
    parse_word("x0 * y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK(FElement::parse(g.c0.str()) == g.c0);
}
