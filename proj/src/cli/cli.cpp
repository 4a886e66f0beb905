#include "assocf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "assocf/error.hpp"
#include "assocf/formats.hpp"
#include "assocf/json_io.hpp"
#include "assocf/zoo.hpp"

namespace assocf::cli {

namespace {

struct Report {
  int code = kExitOk;
  std::string text;
  json payload;
  std::vector<std::string> diagnostics;
};

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::uint64_t cost_guard = std::uint64_t{1} << 32;
};

FElement parse_element(const std::string& text) {
  std::string_view v = text;
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
  if (v.substr(0, 4) == "pair") return FElement::parse(text);
  return parse_word(text);
}

std::string tuple_str(const Magma& m, const std::vector<Element>& t) {
  std::string out = "(";
  for (std::size_t k = 0; k < t.size(); ++k) out += (k ? ", " : "") + m.name(t[k]);
  return out + ")";
}

json tuple_json(const Magma& m, const std::vector<Element>& t) {
  json out = json::array();
  for (Element e : t) out.push_back(m.name(e));
  return out;
}

Element element_named(const Magma& m, const std::string& name) {
  auto e = m.find(name);
  if (!e) throw FormatError("unknown element '" + name + "'", 0);
  return *e;
}

ExpansionWord parse_expansion(const std::string& text) {
  if (!text.empty() && text[0] == 'b') return ExpansionWord::parse(text);
  std::size_t used = 0;
  long long i = 0;
  try {
    i = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an index or b[...]", 0);
  }
  if (used != text.size() || i <= 0) throw ParseError("expected a positive index", 0);
  return ExpansionWord({static_cast<std::size_t>(i)});
}

class Runner {
 public:
  Runner() : app_("Thompson's group F, tree pairs and the laws of finite bracket algebras") {
    app_.require_subcommand(1);
    app_.fallthrough();
    app_.add_flag("--json", g_.json, "Structured output");
    app_.add_option("--seed", g_.seed, "Seed for randomized phases")->capture_default_str();
    app_.add_option("--threads", g_.threads, "Workers for exhaustive sweeps")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    app_.add_option("--cost-guard", g_.cost_guard, "Largest tuple space swept exhaustively")
        ->capture_default_str();
    tree_commands();
    f_commands();
    magma_commands();
    variety_commands();
    zoo_commands();
  }

  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    std::reverse(args.begin(), args.end());
    try {
      app_.parse(args);
    } catch (const CLI::CallForHelp&) {
      out << app_.help();
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out << app_.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err << "usage error: " << e.what() << "\n";
      return kExitUsage;
    }
    Report report;
    std::string error;
    try {
      report = action_();
    } catch (const BudgetError& e) {
      report.code = kExitBudget;
      error = e.what();
    } catch (const ParseError& e) {
      report.code = kExitFormat;
      error = e.what();
    } catch (const FormatError& e) {
      report.code = kExitFormat;
      error = e.what();
    } catch (const std::out_of_range& e) {
      report.code = kExitUsage;
      error = e.what();
    } catch (const std::exception& e) {
      report.code = kExitFormat;
      error = e.what();
    }
    if (g_.json) {
      if (!error.empty()) report.diagnostics.push_back(error);
      json envelope{{"status", error.empty() ? "ok" : "error"},
                    {"command", command_},
                    {"payload", report.payload},
                    {"diagnostics", report.diagnostics}};
      out << envelope.dump(2) << "\n";
    } else {
      out << report.text;
      for (const std::string& d : report.diagnostics) err << d << "\n";
      if (!error.empty()) err << "error: " << error << "\n";
    }
    return report.code;
  }

 private:
  CLI::App* command(CLI::App* parent, const std::string& name, const std::string& help,
                    std::function<Report()> body) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    sub->callback([this, sub, parent, body] {
      command_ = parent->get_name() + " " + sub->get_name();
      action_ = body;
    });
    return sub;
  }

  CLI::App* group(const std::string& name, const std::string& help) {
    CLI::App* sub = app_.add_subcommand(name, help);
    sub->require_subcommand(1);
    sub->fallthrough();
    return sub;
  }

  SweepOptions sweep() const { return {g_.threads, g_.cost_guard}; }

  void tree_commands() {
    CLI::App* tree = group("tree", "Binary trees");
    auto* parse = command(tree, "parse", "Normalize a tree literal", [this] {
      BinaryTree t = BinaryTree::parse(a_);
      Report r;
      json addrs = json::array();
      for (const VertexWord& w : leaf_addresses(t)) addrs.push_back(w.str());
      r.payload = {{"tree", t.str()},
                   {"leaves", t.leaf_count()},
                   {"depth", t.depth()},
                   {"leaf_addresses", addrs},
                   {"free_carets", free_carets(t)}};
      r.text = t.str() + "\n";
      return r;
    });
    parse->add_option("tree", a_, "Tree literal")->required();

    auto* ex = command(tree, "expand", "Apply an index or expansion word b[...]", [this] {
      BinaryTree t = parse_expansion(b_).apply(BinaryTree::parse(a_));
      return Report{kExitOk, t.str() + "\n", {{"tree", t.str()}}, {}};
    });
    ex->add_option("tree", a_)->required();
    ex->add_option("expansion", b_)->required();

    auto* sh = command(tree, "shift", "Graft under a new root", [this] {
      BinaryTree t = shift(BinaryTree::parse(a_), b_ == "left" || b_ == "0" ? Side::left : Side::right);
      return Report{kExitOk, t.str() + "\n", {{"tree", t.str()}}, {}};
    });
    sh->add_option("tree", a_)->required();
    sh->add_option("side", b_)->required()->check(CLI::IsMember({"left", "right", "0", "1"}));

    auto* rf = command(tree, "reflect", "Mirror image", [this] {
      BinaryTree t = reflect(BinaryTree::parse(a_));
      return Report{kExitOk, t.str() + "\n", {{"tree", t.str()}}, {}};
    });
    rf->add_option("tree", a_)->required();

    auto* jn = command(tree, "join", "Least common expansion", [this] {
      BinaryTree t = join(BinaryTree::parse(a_), BinaryTree::parse(b_));
      return Report{kExitOk, t.str() + "\n", {{"tree", t.str()}}, {}};
    });
    jn->add_option("p", a_)->required();
    jn->add_option("q", b_)->required();

    auto* en = command(tree, "enumerate", "All trees with n leaves", [this] {
      Report r;
      json list = json::array();
      for (const BinaryTree& t : enumerate_trees(n_)) {
        r.text += t.str() + "\n";
        list.push_back(t.str());
      }
      r.payload = {{"leaves", n_}, {"trees", list}};
      return r;
    });
    en->add_option("n", n_)->required()->check(CLI::PositiveNumber);
  }

  void f_commands() {
    CLI::App* f = group("f", "Elements of Thompson's group F");
    auto element_report = [](const FElement& g) {
      return Report{kExitOk, g.str() + "\n", to_json(g), {}};
    };

    auto* mul = command(f, "mul", "Product of elements, left to right", [this, element_report] {
      FElement g;
      for (const std::string& s : list_) g = multiply(g, parse_element(s));
      return element_report(g);
    });
    mul->add_option("elements", list_, "Words or \"pair (p) (q)\"")->required();

    auto* inv = command(f, "inv", "Inverse", [this, element_report] {
      return element_report(invert(parse_element(a_)));
    });
    inv->add_option("element", a_)->required();

    auto* word = command(f, "word", "Evaluate a word", [this, element_report] {
      FElement g = parse_element(a_);
      if (!flag_) return element_report(g);
      AbelianImage ab = abelianize(g);
      return Report{kExitOk, ab.str() + "\n", to_json(ab), {}};
    });
    word->add_option("word", a_)->required();
    word->add_flag("--ab", flag_, "Print the abelianization instead");

    auto* ab = command(f, "ab", "Image in Z x Z", [this] {
      AbelianImage img = abelianize(parse_element(a_));
      return Report{kExitOk, img.str() + "\n", to_json(img), {}};
    });
    ab->add_option("element", a_)->required();

    auto* pl = command(f, "pl", "Piecewise-linear model", [this] {
      FElement g = parse_element(a_);
      PLMap map = to_pl(g);
      Report r{kExitOk, map.str() + "\n", to_json(map), {}};
      Support s = support_interval(g);
      r.payload["support"] = {s.lo.str(), s.hi.str()};
      r.payload["stabilizes_halfpowers"] = stabilizes_halfpowers(g);
      if (!path_.empty()) {
        std::ofstream svg(path_);
        if (!svg) throw std::runtime_error("cannot write '" + path_ + "'");
        svg << map.svg();
        r.diagnostics.push_back("wrote " + path_);
      }
      return r;
    });
    pl->add_option("element", a_)->required();
    pl->add_option("--svg", path_, "Write an SVG graph to this file");

    auto* red = command(f, "reduce", "Reduce a tree pair", [this, element_report] {
      return element_report(FElement::reduce(BinaryTree::parse(a_), BinaryTree::parse(b_)));
    });
    red->add_option("p", a_)->required();
    red->add_option("q", b_)->required();

    auto* sh = command(f, "shifts", "s0, s1 and the reflection", [this] {
      FElement g = parse_element(a_);
      FElement s0 = shift_endo(g, Side::left);
      FElement s1 = shift_endo(g, Side::right);
      FElement r = reflect_auto(g);
      return Report{kExitOk,
                    "s0 " + s0.str() + "\ns1 " + s1.str() + "\nR  " + r.str() + "\n",
                    {{"s0", to_json(s0)}, {"s1", to_json(s1)}, {"R", to_json(r)}},
                    {}};
    });
    sh->add_option("element", a_)->required();

    auto* nm = command(f, "normal-member", "Membership in the normal subgroup (m, n)", [this] {
      FElement g = parse_element(a_);
      bool in = normal_membership(g, {m_, n2_});
      return Report{kExitOk, std::string(in ? "true" : "false") + "\n",
                    {{"member", in}, {"ab", to_json(abelianize(g))}},
                    {}};
    });
    nm->add_option("element", a_)->required();
    nm->add_option("m", m_)->required();
    nm->add_option("n", n2_)->required();
  }

  void magma_commands() {
    CLI::App* mg = group("magma", "Finite bracket algebras");

    auto* check = command(mg, "check", "Exhaustive law check", [this] {
      Magma m = load_magma(path_);
      Law law = Law::parse(a_);
      Satisfaction s = satisfies(m, law, sweep());
      Report r;
      r.payload = {{"law", to_json(law)}, {"holds", s.holds}};
      if (s.holds) {
        r.text = "holds\n";
      } else {
        r.text = "fails at " + tuple_str(m, *s.counterexample) + "\n";
        r.payload["counterexample"] = tuple_json(m, *s.counterexample);
      }
      return r;
    });
    check->add_option("file", path_)->required();
    check->add_option("law", a_, "\"TREE = TREE\"")->required();

    auto* ev = command(mg, "eventual", "Search simultaneous expansions", [this] {
      Magma m = load_magma(path_);
      Law law = Law::parse(a_);
      EventualResult res = satisfies_eventually(m, law, budget_, !flag_, sweep());
      Report r{kExitOk, res.str() + "\n", to_json(res), {}};
      if (res.kind == EventualResult::Kind::fails_all_up_to) r.code = kExitBudget;
      return r;
    });
    ev->add_option("file", path_)->required();
    ev->add_option("law", a_)->required();
    ev->add_option("--budget", budget_, "Largest number of added carets")->capture_default_str();
    ev->add_flag("--no-perfection", flag_, "Search even when the magma is simply perfect");

    auto* sol = command(mg, "solvable", "Derived chain and solvability witness", [this] {
      Magma m = load_magma(path_);
      Report r;
      json chain = json::array();
      std::string sizes;
      for (const auto& d : m.derived_chain()) {
        chain.push_back(tuple_json(m, d));
        sizes += (sizes.empty() ? "" : ", ") + std::to_string(d.size());
      }
      r.payload["chain"] = chain;
      r.text = "chain sizes [" + sizes + "]\n";
      if (auto w = is_solvable(m)) {
        r.payload["solvable"] = true;
        r.payload["witness"] = {{"zero", m.name(w->zero)}, {"depth", w->depth}, {"tree", w->tree.str()}};
        r.text += "solvable: depth " + std::to_string(w->depth) + " tree " + w->tree.str() +
                  " is constantly " + m.name(w->zero) + "\n";
      } else {
        r.payload["solvable"] = false;
        r.text += "not solvable\n";
      }
      return r;
    });
    sol->add_option("file", path_)->required();

    auto* st = command(mg, "status", "Classify Assoc(S)", [this] {
      Magma m = load_magma(path_);
      StatusBudgets b;
      b.eventual = budget_;
      b.arity_cap = arity_cap_;
      b.search.sweep = sweep();
      b.search.seed = g_.seed;
      AssocStatus s = assoc_status(m, b);
      Report r{kExitOk, s.str() + "\n", to_json(s, m), {}};
      if (s.solvable)
        r.text += "witness " + s.solvable->tree.str() + " = " + m.name(s.solvable->zero) + "\n";
      if (s.identity) r.text += "identity " + m.name(*s.identity) + "\n";
      if (s.counterexample) r.text += "non-associative at " + tuple_str(m, *s.counterexample) + "\n";
      for (const Law& law : s.laws) r.text += "law " + law.str() + "\n";
      return r;
    });
    st->add_option("file", path_)->required();
    st->add_option("--budget", budget_, "Added carets for the eventual FVL search")
        ->capture_default_str();
    st->add_option("--arity-cap", arity_cap_, "Law-search arity (0: by size)")
        ->capture_default_str();

    auto* se = command(mg, "search", "All laws of a given arity", [this] {
      Magma m = load_magma(path_);
      LawSearchOptions o;
      o.sweep = sweep();
      o.seed = g_.seed;
      Report r;
      r.payload["arity"] = n_;
      r.payload["laws"] = json::array();
      for (const Law& law : search_laws(m, n_, o)) {
        r.text += law.str() + "\n";
        r.payload["laws"].push_back(to_json(law));
      }
      return r;
    });
    se->add_option("file", path_)->required();
    se->add_option("n", n_)->required()->check(CLI::PositiveNumber);

    auto* ce = command(mg, "centralizer", "{x : [x,u] = zero for all u}", [this] {
      Magma m = load_magma(path_);
      std::vector<Element> subset;
      for (const std::string& s : list_) subset.push_back(element_named(m, s));
      std::optional<Element> zero;
      if (!a_.empty()) zero = element_named(m, a_);
      std::vector<Element> c = centralizer(m, subset, zero);
      return Report{kExitOk, tuple_str(m, c) + "\n", {{"centralizer", tuple_json(m, c)}}, {}};
    });
    ce->add_option("file", path_)->required();
    ce->add_option("elements", list_);
    ce->add_option("--zero", a_, "The zero element")->required();

    auto* im = command(mg, "image", "Image of a tree with some leaves fixed", [this] {
      Magma m = load_magma(path_);
      BinaryTree t = BinaryTree::parse(a_);
      std::vector<std::optional<Element>> fixed(t.leaf_count());
      for (const std::string& spec : list_) {
        auto eq = spec.find('=');
        if (eq == std::string::npos) throw ParseError("expected i=name", 0);
        std::size_t i = std::stoul(spec.substr(0, eq));
        if (i == 0 || i > t.leaf_count()) throw ParseError("leaf index out of range", 0);
        fixed[i - 1] = element_named(m, spec.substr(eq + 1));
      }
      std::vector<Element> img = restricted_image(m, t, fixed);
      return Report{kExitOk, tuple_str(m, img) + "\n",
                    {{"image", tuple_json(m, img)}, {"size", img.size()}},
                    {}};
    });
    im->add_option("file", path_)->required();
    im->add_option("tree", a_)->required();
    im->add_option("--fix", list_, "1-based leaf=element");
  }

  void variety_commands() {
    CLI::App* va = group("variety", "Derivability under strongly regular laws");

    auto* de = command(va, "derivable", "Rewrite p to q", [this] {
      VarietyPresentation v = load_variety(path_);
      BinaryTree p = BinaryTree::parse(a_);
      BinaryTree q = BinaryTree::parse(b_);
      Report r;
      if (derive_budget_ == 0 && !flag_) {
        auto proof = derivable(p, q, v);
        r.payload["derivable"] = proof.has_value();
        if (proof) {
          r.payload["proof"] = to_json(*proof);
          r.text = "derivable in " + std::to_string(proof->steps.size()) + " steps\n" + proof->str(v);
        } else {
          r.text = "not derivable at " + std::to_string(p.leaf_count()) + " leaves\n";
        }
        return r;
      }
      EventualDerivation res = eventually_derivable(p, q, v, derive_budget_, flag_);
      r.payload = to_json(res);
      r.text = res.str() + "\n";
      if (res.proof) r.text += res.proof->str(v);
      if (res.kind == EventualDerivation::Kind::fails_all_up_to) r.code = kExitBudget;
      return r;
    });
    de->add_option("file", path_)->required();
    de->add_option("p", a_)->required();
    de->add_option("q", b_)->required();
    de->add_option("--budget", derive_budget_, "Also try simultaneous expansions up to this many carets");
    de->add_flag("--root-split", flag_, "Use the root-split certificate when it applies");

    auto* me = command(va, "member", "Bounded membership in a shift-invariant subgroup", [this] {
      std::vector<FElement> k;
      for (const std::string& s : list_) k.push_back(parse_element(s));
      Membership res = membership_semidecide(parse_element(a_), k, member_budget_, flag_);
      Report r{kExitOk, res.str() + "\n", to_json(res.search), {}};
      r.payload["in"] = res.in;
      if (res.search.proof) {
        VarietyPresentation v;
        for (const FElement& h : k) v.laws.emplace_back(h.source(), h.target());
        r.text += res.search.proof->str(v);
      }
      if (!res.in && res.search.kind == EventualDerivation::Kind::fails_all_up_to) r.code = kExitBudget;
      return r;
    });
    me->add_option("element", a_)->required();
    me->add_option("--gen", list_, "Generators of K")->required();
    me->add_option("--budget", member_budget_, "Added carets")->capture_default_str();
    me->add_flag("--root-split", flag_);

    auto* cl = command(va, "closure", "Bounded shift-invariant closure", [this] {
      std::vector<FElement> k;
      for (const std::string& s : list_) k.push_back(parse_element(s));
      Report r;
      r.payload["depth"] = depth_;
      r.payload["elements"] = json::array();
      for (const FElement& g : closure_generate(k, depth_)) {
        r.text += g.str() + "\n";
        r.payload["elements"].push_back(to_json(g));
      }
      return r;
    });
    cl->add_option("--gen", list_)->required();
    cl->add_option("--depth", depth_)->capture_default_str();
  }

  void zoo_commands() {
    CLI::App* zo = group("zoo", "Built-in algebras");
    command(zo, "list", "Names of built-in magmas", [] {
      Report r;
      r.payload = json::array();
      for (const ZooEntry& e : zoo()) {
        r.text += e.name + "  " + e.description + "\n";
        r.payload.push_back({{"name", e.name}, {"description", e.description}});
      }
      return r;
    });
    auto* em = command(zo, "emit", "Write a built-in magma in the table format", [this] {
      Magma m = zoo_magma(a_);
      std::string text = emit_magma(m);
      Report r{kExitOk, text, to_json(m), {}};
      if (!path_.empty()) {
        std::ofstream file(path_);
        if (!file) throw std::runtime_error("cannot write '" + path_ + "'");
        file << text;
        r.text.clear();
        r.diagnostics.push_back("wrote " + path_);
      }
      return r;
    });
    em->add_option("name", a_)->required();
    em->add_option("-o,--output", path_, "Output file");
  }

  CLI::App app_;
  Globals g_;
  std::string command_;
  std::function<Report()> action_;

  std::string a_;
  std::string b_;
  std::string path_;
  std::vector<std::string> list_;
  bool flag_ = false;
  std::size_t n_ = 0;
  std::uint64_t m_ = 0;
  std::uint64_t n2_ = 0;
  std::size_t budget_ = kDefaultEventualBudget;
  std::size_t derive_budget_ = 0;
  std::size_t member_budget_ = kDefaultDerivationBudget;
  std::size_t arity_cap_ = 0;
  std::size_t depth_ = 2;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner;
  return runner.run(args, out, err);
}

}  // namespace assocf::cli
