#include <algorithm>
#include <set>

#include "assocf/error.hpp"
#include "assocf/plmodel.hpp"
#include "assocf/rewrite.hpp"
#include "assocf/zoo.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace assocf;

namespace {

BinaryTree T(const char* s) { return BinaryTree::parse(s); }

const Law kX1Law = Law::parse("(. ((. .) .)) = (. (. (. .)))");
const VarietyPresentation kAssoc{{associative_law()}};
const VarietyPresentation kX1{{kX1Law}};

const BinaryTree kR1 = expand(T("((. .) (. .))"), 4);
const BinaryTree kR2 = expand(T("((. .) (. .))"), 2);

std::vector<BinaryTree> leaves(std::size_t n) { return std::vector<BinaryTree>(n, BinaryTree::leaf()); }

// Places t at vertex w of an otherwise bare spine.
BinaryTree at_vertex(const std::string& w, const BinaryTree& t) {
  if (w.empty()) return t;
  BinaryTree inner = at_vertex(w.substr(1), t);
  return w[0] == '1' ? BinaryTree::node(BinaryTree::leaf(), inner)
                     : BinaryTree::node(inner, BinaryTree::leaf());
}

void replay(const Derivation& d, const VarietyPresentation& v) {
  REQUIRE(d.trees.size() == d.steps.size() + 1);
  for (std::size_t k = 0; k < d.steps.size(); ++k)
    CHECK(apply_step(d.trees[k], d.steps[k], v) == d.trees[k + 1]);
}

}  // namespace

TEST_CASE("apply_step") {
  RewriteStep s{VertexWord(), 0, Direction::forward, leaves(3)};
  CHECK(apply_step(T("((. .) .)"), s, kAssoc) == T("(. (. .))"));
  s.direction = Direction::backward;
  CHECK(apply_step(T("(. (. .))"), s, kAssoc) == T("((. .) .)"));
  CHECK_THROWS_AS(apply_step(T("((. .) .)"), s, kAssoc), std::invalid_argument);

  RewriteStep graft_step{VertexWord(), 0, Direction::forward, {T("(. .)"), BinaryTree::leaf(), T("((. .) .)")}};
  CHECK(apply_step(T("(((. .) .) ((. .) .))"), graft_step, kAssoc) == T("((. .) (. ((. .) .)))"));

  RewriteStep x1_step{VertexWord::parse("1"), 0, Direction::forward, leaves(4)};
  CHECK(apply_step(T("(. (. ((. .) .)))"), x1_step, kX1) == T("(. (. (. (. .))))"));
  x1_step.law = 1;
  CHECK_THROWS_AS(apply_step(T("(. (. ((. .) .)))"), x1_step, kX1), std::invalid_argument);
}

TEST_CASE("associativity connects every bracketing") {
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42};
  for (std::size_t n = 1; n <= 6; ++n) {
    auto all = enumerate_trees(n);
    CHECK(derivability_class(all.front(), kAssoc).size() == catalan[n - 1]);
    CHECK(all.size() == catalan[n - 1]);
  }
  auto d = derivable(T("(((. .) .) (. .))"), T("(. ((. .) (. .)))"), kAssoc);
  REQUIRE(d);
  replay(*d, kAssoc);
  CHECK(derivable(T("((. .) .)"), T("((. .) .)"), kAssoc)->steps.empty());
  CHECK_THROWS_AS(derivable(T("(. .)"), T("((. .) .)"), kAssoc), std::invalid_argument);
  CHECK_THROWS_AS(derivable(BinaryTree::right_comb(20), BinaryTree::right_comb(20), kAssoc),
                  BudgetError);
}

TEST_CASE("derivability is an equivalence") {
  testing::Rng rng(97);
  auto cls = derivability_class(T("(. ((. .) (. .)))"), kX1);
  REQUIRE(cls.size() > 2);
  std::uniform_int_distribution<std::size_t> pick(0, cls.size() - 1);
  for (int k = 0; k < 30; ++k) {
    const BinaryTree& a = cls[pick(rng)];
    const BinaryTree& b = cls[pick(rng)];
    const BinaryTree& c = cls[pick(rng)];
    auto ab = derivable(a, b, kX1);
    auto ba = derivable(b, a, kX1);
    auto bc = derivable(b, c, kX1);
    REQUIRE(ab);
    REQUIRE(ba);
    REQUIRE(bc);
    replay(*ab, kX1);
    CHECK(derivable(a, c, kX1));
  }
  std::set<BinaryTree> all(cls.begin(), cls.end());
  for (const BinaryTree& t : enumerate_trees(5))
    CHECK(derivable(T("(. ((. .) (. .)))"), t, kX1).has_value() == (all.count(t) == 1));
}

TEST_CASE("derivations are sound in models") {
  std::vector<Magma> models;
  for (const ZooEntry& e : zoo())
    if (e.name != "a5_commutator" && e.name != "octonion_unit_loop") models.push_back(e.build());
  std::vector<VarietyPresentation> varieties{kAssoc, kX1, {{five_variable_law()}}};
  for (const VarietyPresentation& v : varieties) {
    for (const Magma& m : models) {
      bool model = std::all_of(v.laws.begin(), v.laws.end(),
                               [&](const Law& law) { return satisfies(m, law).holds; });
      if (!model) continue;
      for (std::size_t n = 3; n <= 5; ++n)
        for (const BinaryTree& t : enumerate_trees(n))
          for (const BinaryTree& u : derivability_class(t, v))
            CHECK(satisfies(m, Law(t, u)).holds);
    }
  }
}

TEST_CASE("example pair under the x1-law") {
  CHECK(kR1 == T("((. .) (. (. .)))"));
  CHECK(kR2 == T("((. (. .)) (. .))"));
  CHECK_FALSE(derivable(kR1, kR2, kX1));
  for (std::size_t i = 1; i <= 5; ++i)
    CHECK_FALSE(derivable(expand(kR1, i), expand(kR2, i), kX1));
  auto ev = eventually_derivable(kR1, kR2, kX1, 3);
  CHECK(ev.kind == EventualDerivation::Kind::fails_all_up_to);
  CHECK(ev.str() == "FailsAllUpTo(3)");

  CHECK(preserves_root_split(kX1));
  CHECK_FALSE(preserves_root_split(kAssoc));
  CHECK(root_split(kR1) == 2);
  CHECK(root_split(kR2) == 3);
  auto cert = eventually_derivable(kR1, kR2, kX1, 3, true);
  CHECK(cert.kind == EventualDerivation::Kind::separated_by_root_split);
  // Without the certificate property the flag is ignored.
  auto assoc = eventually_derivable(kR1, kR2, kAssoc, 3, true);
  CHECK(assoc.kind == EventualDerivation::Kind::holds);
  CHECK(assoc.at->empty());

  auto self = eventually_derivable(kX1Law.lhs, kX1Law.rhs, kX1);
  REQUIRE(self.kind == EventualDerivation::Kind::holds);
  CHECK(self.at->empty());
  CHECK(self.proof->steps.size() == 1);

  FElement g = reduce(kR1, kR2);
  CHECK_FALSE(stabilizes_halfpowers(g));
  Membership mem = membership_semidecide(g, {generators().x1});
  CHECK_FALSE(mem.in);
  CHECK(mem.str() == "NotDerivableUpTo(3)");
}

TEST_CASE("eventual derivation reaches an expansion") {
  Law law(T("((. .) (. .))"), T("(. ((. .) .))"));
  VarietyPresentation v{{law}};
  auto e = eventually_derivable(expand(law.lhs, 1), expand(law.rhs, 1), v, 2);
  REQUIRE(e.kind == EventualDerivation::Kind::holds);
  REQUIRE(e.proof);
  replay(*e.proof, v);
  CHECK(e.proof->trees.front() == e.at->apply(expand(law.lhs, 1)));
  CHECK(e.proof->trees.back() == e.at->apply(expand(law.rhs, 1)));
}

TEST_CASE("shift_at_vertex") {
  const auto& g = generators();
  CHECK(shift_at_vertex(g.x0, VertexWord()) == g.x0);
  CHECK(shift_at_vertex(g.x0, VertexWord::parse("1")) == g.x1);
  CHECK(shift_at_vertex(g.x0, VertexWord::parse("10")) ==
        shift_endo(shift_endo(g.x0, Side::left), Side::right));
  testing::Rng rng(101);
  for (const char* w : {"0", "1", "10", "01", "110", "0101"}) {
    for (int k = 0; k < 20; ++k) {
      FElement h = testing::random_element(rng);
      CHECK(shift_at_vertex(h, VertexWord::parse(w)) ==
            reduce(at_vertex(w, h.source()), at_vertex(w, h.target())));
    }
  }
}

TEST_CASE("closure_generate") {
  const auto& g = generators();
  CHECK(closure_generate({}, 3) == std::vector<FElement>{FElement()});
  auto x1 = closure_generate({g.x1}, 3);
  CHECK(std::is_sorted(x1.begin(), x1.end()));
  CHECK(std::adjacent_find(x1.begin(), x1.end()) == x1.end());
  for (std::size_t d = 1; d <= 3; ++d)
    for (const FElement& h : closure_generate({g.x1}, d)) CHECK(stabilizes_halfpowers(h));
  CHECK(std::find(x1.begin(), x1.end(), reduce(kR1, kR2)) == x1.end());

  auto c = closure_generate({g.c0}, 2);
  for (const FElement& h : c) CHECK(in_commutator_subgroup(h));
  // c1 is a product of two depth-2 members.
  FElement s1c0 = shift_endo(g.c0, Side::right);
  FElement a = multiply(g.c0, s1c0);
  FElement b = multiply(invert(g.c0), invert(s1c0));
  CHECK(std::binary_search(c.begin(), c.end(), a));
  CHECK(std::binary_search(c.begin(), c.end(), b));
  CHECK(multiply(a, b) == g.c1);
}

TEST_CASE("membership") {
  const auto& g = generators();
  auto id = membership_semidecide(FElement(), {g.x1});
  CHECK(id.in);
  CHECK(id.search.proof->steps.empty());
  for (const char* w : {"0", "1", "01"}) {
    auto m = membership_semidecide(shift_at_vertex(g.x1, VertexWord::parse(w)), {g.x1});
    CHECK(m.in);
    REQUIRE(m.search.proof);
  }
  CHECK(membership_semidecide(g.x2, {g.x1}).in);
  CHECK(membership_semidecide(g.c1, {g.c0}).in);
  CHECK(membership_semidecide(reduce(kR1, kR2), {g.x1}, 3, true).search.kind ==
        EventualDerivation::Kind::separated_by_root_split);
}

TEST_CASE("positive results are shift invariant") {
  testing::Rng rng(103);
  std::vector<Magma> models{s4_example(), zoo_magma("s3_commutator"), z4(), trivial_magma()};
  for (const Magma& m : models) {
    int positive = 0;
    for (int k = 0; k < 200 && positive < 50; ++k) {
      FElement g = testing::random_pair(rng, 6);
      Law law(g.source(), g.target());
      auto r = satisfies_eventually(m, law, 2);
      bool ok = r.kind == EventualResult::Kind::holds ||
                (r.kind == EventualResult::Kind::decided_by_perfection && r.value);
      if (!ok) continue;
      ++positive;
      for (Side s : {Side::left, Side::right}) {
        FElement h = shift_endo(g, s);
        auto rs = satisfies_eventually(m, Law(h.source(), h.target()), 3);
        CHECK((rs.kind == EventualResult::Kind::holds ||
               (rs.kind == EventualResult::Kind::decided_by_perfection && rs.value)));
      }
    }
    CHECK(positive > 0);
  }
  for (const char* w : {"0", "1"}) {
    auto m = membership_semidecide(shift_at_vertex(generators().x2, VertexWord::parse(w)),
                                   {generators().x1});
    CHECK(m.in);
  }
}
