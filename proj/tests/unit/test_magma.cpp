#include <algorithm>
#include <map>
#include <set>

#include "assocf/error.hpp"
#include "assocf/magma.hpp"
#include "assocf/zoo.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace assocf;

namespace {

BinaryTree T(const char* s) { return BinaryTree::parse(s); }
Law L(const char* s) { return Law::parse(s); }

Element el(const Magma& m, const char* name) { return *m.find(name); }

const Law kX1Law = Law::parse("(. ((. .) .)) = (. (. (. .)))");

bool has_law(const std::vector<Law>& laws, const Law& law) {
  Law flipped(law.rhs, law.lhs);
  return std::find(laws.begin(), laws.end(), law) != laws.end() ||
         std::find(laws.begin(), laws.end(), flipped) != laws.end();
}

// Image of the tree operation by evaluating every tuple.
std::set<Element> brute_image(const Magma& m, const BinaryTree& t) {
  std::set<Element> out;
  std::vector<Element> args(t.leaf_count(), 0);
  while (true) {
    out.insert(evaluate(m, t, args));
    std::size_t k = args.size();
    while (k > 0 && static_cast<std::size_t>(++args[k - 1]) == m.size()) args[--k] = 0;
    if (k == 0) return out;
  }
}

std::vector<Magma> small_zoo() {
  return {pre_sl2(), s4_example(), zoo_magma("s3_commutator"), z4(), trivial_magma()};
}

}  // namespace

TEST_CASE("laws") {
  CHECK(L("((. .) .) = (. (. .))") == associative_law());
  CHECK(L("((. .) .) = (. (. .))").str() == "((. .) .) = (. (. .))");
  CHECK_THROWS_AS(L("(. .) = ."), ParseError);
  CHECK_THROWS_AS(L("(. .)"), ParseError);
  CHECK_THROWS_AS(L("(. .) = (. x)"), ParseError);
  CHECK_THROWS_AS(Law(T("(. .)"), T(".")), std::invalid_argument);
}

TEST_CASE("magma validation") {
  CHECK_THROWS_AS(Magma({"a", "a"}, {{0, 0}, {0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Magma({"a", "b"}, {{0, 2}, {0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Magma({"a", "b"}, {{0}, {0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Magma({}, {}), std::invalid_argument);
}

TEST_CASE("evaluate") {
  Magma pre = pre_sl2();
  Magma s4 = s4_example();
  CHECK(evaluate(pre, T("."), {el(pre, "c")}) == el(pre, "c"));
  CHECK(evaluate(pre, T("(. .)"), {el(pre, "a"), el(pre, "b")}) == el(pre, "a"));
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y)
      CHECK(evaluate(s4, T("((. .) .)"), {x, y, el(s4, "a")}) == el(s4, "b"));
  CHECK_THROWS_AS(evaluate(pre, T("(. .)"), {0}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(pre, T("(. .)"), {0, 7}), std::invalid_argument);
}

TEST_CASE("satisfies") {
  Magma s4 = s4_example();
  CHECK(satisfies(s4, Law(T("(. (. .))"), T("(. (. .))"))).holds);
  CHECK(satisfies(s4, kX1Law).holds);
  Satisfaction assoc = satisfies(s4, associative_law());
  REQUIRE_FALSE(assoc.holds);
  const auto& t = *assoc.counterexample;
  CHECK(t == std::vector<Element>{el(s4, "1"), el(s4, "1"), el(s4, "a")});
  CHECK(evaluate(s4, T("((. .) .)"), t) == el(s4, "b"));
  CHECK(evaluate(s4, T("(. (. .))"), t) == el(s4, "c"));

  // Same first counterexample whatever the worker count.
  Magma a5 = zoo_magma("a5_commutator");
  Law l = L("((. .) (. .)) = (. (. (. .)))");
  auto one = satisfies(a5, l, {1});
  auto many = satisfies(a5, l, {4});
  CHECK(one.counterexample == many.counterexample);
  Law swapped(l.rhs, l.lhs);
  CHECK(satisfies(a5, swapped).holds == one.holds);
  CHECK_THROWS_AS(satisfies(a5, l, {1, 1000}), BudgetError);
}

TEST_CASE("expansion monotonicity") {
  Magma s4 = s4_example();
  CHECK(expansion_monotone_check(s4, kX1Law, ExpansionWord({1})));
  CHECK(expansion_monotone_check(z4(), associative_law(), ExpansionWord({3, 1})));
  CHECK_THROWS_AS(expansion_monotone_check(s4, associative_law(), ExpansionWord({1})),
                  std::invalid_argument);
  testing::Rng rng(73);
  std::uniform_int_distribution<std::size_t> letter(1, 5);
  for (const Magma& m : small_zoo()) {
    for (const Law& law : search_laws(m, 4)) {
      for (int k = 0; k < 3; ++k) {
        ExpansionWord b({letter(rng), letter(rng)});
        CHECK(expansion_monotone_check(m, law, b));
      }
    }
  }
}

TEST_CASE("eventual satisfaction") {
  Magma pre = pre_sl2();
  auto r = satisfies_eventually(pre, associative_law(), 3);
  CHECK(r.kind == EventualResult::Kind::decided_by_perfection);
  CHECK_FALSE(r.value);
  auto searched = satisfies_eventually(pre, associative_law(), 3, false);
  CHECK(searched.kind == EventualResult::Kind::fails_all_up_to);
  CHECK(searched.str() == "FailsAllUpTo(3)");

  Magma s3 = zoo_magma("s3_commutator");
  for (const Law& law : {associative_law(), kX1Law, five_variable_law(),
                         L("((. .) (. .)) = (. ((. .) .))")}) {
    auto ev = satisfies_eventually(s3, law, 4);
    REQUIRE(ev.kind == EventualResult::Kind::holds);
    CHECK(satisfies(s3, expand_law(law, *ev.at)).holds);
  }

  // On a simply perfect magma no expansion of a failing law holds.
  testing::Rng rng(79);
  for (const Magma& m : {pre_sl2(), s4_example()}) {
    REQUIRE(m.simply_perfect());
    for (int k = 0; k < 50; ++k) {
      std::size_t n = 3 + static_cast<std::size_t>(k) % 3;
      Law law(testing::random_tree(rng, n), testing::random_tree(rng, n));
      bool direct = satisfies(m, law).holds;
      CHECK(satisfies_eventually(m, law, 2).value == direct);
      auto bounded = satisfies_eventually(m, law, 2, false);
      CHECK((bounded.kind == EventualResult::Kind::holds) == direct);
    }
  }
}

TEST_CASE("derived chain and solvability") {
  auto sizes = [](const Magma& m) {
    std::vector<std::size_t> out;
    for (const auto& d : m.derived_chain()) out.push_back(d.size());
    return out;
  };
  CHECK(sizes(zoo_magma("s3_commutator")) == std::vector<std::size_t>{6, 3, 1});
  CHECK(sizes(pre_sl2()) == std::vector<std::size_t>{4});
  CHECK_FALSE(is_solvable(pre_sl2()));
  auto trivial = is_solvable(trivial_magma());
  REQUIRE(trivial);
  CHECK(trivial->depth == 0);
  auto s3 = is_solvable(zoo_magma("s3_commutator"));
  REQUIRE(s3);
  CHECK(s3->depth == 2);
  CHECK(s3->tree == BinaryTree::complete(2));

  // Constant-image trees exist exactly when the chain reaches a singleton.
  for (const Magma& m : small_zoo()) {
    bool constant = false;
    for (std::size_t n = 1; n <= 6 && !constant; ++n)
      for (const BinaryTree& t : enumerate_trees(n))
        if (brute_image(m, t).size() == 1) constant = true;
    CHECK(constant == is_solvable(m).has_value());
  }
}

TEST_CASE("sandwich property of the derived chain") {
  testing::Rng rng(83);
  std::vector<Magma> magmas = small_zoo();
  magmas.push_back(sl2_table());
  for (int k = 0; k < 300; ++k) {
    const Magma& m = magmas[static_cast<std::size_t>(k) % magmas.size()];
    BinaryTree t = testing::random_tree(rng, 1 + static_cast<std::size_t>(k) % (m.size() > 6 ? 4 : 6));
    auto depths = t.leaf_depths();
    auto chain_at = [&](std::size_t d) {
      const auto& chain = m.derived_chain();
      const auto& set = chain[std::min(d, chain.size() - 1)];
      return std::set<Element>(set.begin(), set.end());
    };
    std::set<Element> img = brute_image(m, t);
    std::set<Element> inner = chain_at(*std::max_element(depths.begin(), depths.end()));
    std::set<Element> outer = chain_at(*std::min_element(depths.begin(), depths.end()));
    CHECK(std::includes(img.begin(), img.end(), inner.begin(), inner.end()));
    CHECK(std::includes(outer.begin(), outer.end(), img.begin(), img.end()));
    CHECK(restricted_image(m, t, {}) == std::vector<Element>(img.begin(), img.end()));
  }
}

TEST_CASE("restricted images") {
  Magma pre = pre_sl2();
  CHECK(restricted_image(pre, T("(. .)"), {el(pre, "b"), el(pre, "c")}) ==
        std::vector<Element>{el(pre, "c")});
  CHECK(restricted_image(pre, T("(. .)"), {std::nullopt, el(pre, "a")}) ==
        std::vector<Element>{el(pre, "0"), el(pre, "a"), el(pre, "b")});

  GroupTable a5 = a5_group();
  Magma m = commutator_magma(a5);
  std::map<std::vector<std::size_t>, std::size_t> by_type;
  for (std::size_t v = 0; v < a5.elements.size(); ++v) {
    auto image = restricted_image(m, T("(. .)"), {std::nullopt, static_cast<Element>(v)});
    std::set<Element> direct;
    for (Element x = 0; x < 60; ++x) direct.insert(m.op(x, static_cast<Element>(v)));
    CHECK(image == std::vector<Element>(direct.begin(), direct.end()));
    by_type[a5.elements[v].cycle_type()] = image.size();
  }
  // The image is a translate of the conjugacy class of the fixed element.
  CHECK(by_type[{5}] == 12);
  CHECK(by_type[{3}] == 20);
  CHECK(by_type[{2, 2}] == 15);
  CHECK(by_type[{}] == 1);
}

TEST_CASE("centralizers") {
  Magma pre = pre_sl2();
  Element zero = el(pre, "0");
  CHECK(centralizer(pre, {el(pre, "a"), el(pre, "b")}, zero) == std::vector<Element>{zero});
  CHECK(centralizer(pre, {el(pre, "a")}, zero) == std::vector<Element>{zero, el(pre, "a")});
  CHECK(centralizer(pre, {}, zero).size() == 4);
  CHECK_THROWS_AS(centralizer(pre, {1}, std::nullopt), std::invalid_argument);
}

TEST_CASE("law search") {
  Magma pre = pre_sl2();
  for (std::size_t n = 3; n <= 6; ++n) CHECK(search_laws(pre, n).empty());
  auto s4 = search_laws(s4_example(), 4);
  CHECK(has_law(s4, kX1Law));
  auto z = search_laws(z4(), 4);
  CHECK(z.size() == 10);
  for (const Law& law : z) CHECK(satisfies(z4(), law).holds);

  // Sampled fingerprints agree with the exhaustive ones.
  LawSearchOptions sampled;
  sampled.exact_limit = 0;
  sampled.samples = 2000;
  CHECK(search_laws(s4_example(), 5, sampled) == search_laws(s4_example(), 5));
  sampled.sweep.threads = 3;
  CHECK(search_laws(s4_example(), 5, sampled) == search_laws(s4_example(), 5));
  CHECK(default_arity_cap(4) == 6);
  CHECK(default_arity_cap(60) == 4);
}

TEST_CASE("assoc status") {
  auto s3 = assoc_status(zoo_magma("s3_commutator"));
  CHECK(s3.str() == "FullF(solvable)");
  REQUIRE(s3.solvable);
  Magma s3m = zoo_magma("s3_commutator");
  testing::Rng rng(89);
  std::uniform_int_distribution<Element> pick(0, 5);
  for (int k = 0; k < 1000; ++k) {
    std::vector<Element> args(s3.solvable->tree.leaf_count());
    for (auto& a : args) a = pick(rng);
    CHECK(evaluate(s3m, s3.solvable->tree, args) == s3.solvable->zero);
  }

  CHECK(assoc_status(z4()).str() == "FullF(associative)");

  Magma oct = octonion_unit_loop();
  auto o = assoc_status(oct);
  CHECK(o.str() == "TrivialCertified(identity-theorem)");
  REQUIRE(o.identity);
  CHECK(oct.name(*o.identity) == "e0");
  REQUIRE(o.counterexample);
  const auto& t = *o.counterexample;
  CHECK(oct.op(oct.op(t[0], t[1]), t[2]) != oct.op(t[0], oct.op(t[1], t[2])));

  auto s4 = assoc_status(s4_example());
  CHECK(s4.kind == AssocStatus::Kind::unknown);
  CHECK(s4.arity == 6);
  CHECK(has_law(s4.laws, kX1Law));

  auto pre = assoc_status(pre_sl2());
  CHECK(pre.str() == "NoLawUpTo(6)");
}

