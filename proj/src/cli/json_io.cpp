#include "assocf/json_io.hpp"

#include <algorithm>

#include "assocf/error.hpp"

namespace assocf {

json to_json(const BinaryTree& t) { return t.str(); }

json to_json(const FElement& g) {
  return {{"source", g.source().str()}, {"target", g.target().str()}, {"leaves", g.leaf_count()}};
}

json to_json(const PLMap& f) {
  json points = json::array();
  for (const Breakpoint& b : f.breakpoints()) points.push_back({b.x.str(), b.y.str()});
  return {{"breakpoints", points}};
}

json to_json(const Law& law) { return {{"lhs", law.lhs.str()}, {"rhs", law.rhs.str()}}; }

json to_json(const Magma& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j)
      row.push_back(m.name(m.op(static_cast<Element>(i), static_cast<Element>(j))));
    rows.push_back(row);
  }
  return {{"elements", m.names()}, {"table", rows}};
}

json to_json(const AbelianImage& a) { return {{"m", a.m}, {"n", a.n}}; }

json to_json(const EventualResult& r) {
  json j{{"result", r.str()}, {"budget", r.budget}, {"examined", r.examined}};
  switch (r.kind) {
    case EventualResult::Kind::holds:
      j["kind"] = "Holds";
      j["at"] = r.at ? r.at->str() : "b[]";
      break;
    case EventualResult::Kind::fails_all_up_to:
      j["kind"] = "FailsAllUpTo";
      break;
    case EventualResult::Kind::decided_by_perfection:
      j["kind"] = "DecidedByPerfection";
      j["value"] = r.value;
      break;
  }
  return j;
}

json to_json(const AssocStatus& s, const Magma& m) {
  json j{{"kind", to_string(s.kind)}, {"summary", s.str()}};
  if (!s.reason.empty()) j["reason"] = s.reason;
  if (s.solvable) {
    j["witness"] = {{"zero", m.name(s.solvable->zero)},
                    {"depth", s.solvable->depth},
                    {"tree", s.solvable->tree.str()}};
  }
  if (s.identity) j["identity"] = m.name(*s.identity);
  if (s.counterexample) {
    json tuple = json::array();
    for (Element e : *s.counterexample) tuple.push_back(m.name(e));
    j["counterexample"] = tuple;
  }
  if (s.fvl_at) j["fvl_at"] = s.fvl_at->str();
  if (s.kind == AssocStatus::Kind::no_law_up_to || s.kind == AssocStatus::Kind::unknown) {
    j["arity"] = s.arity;
    j["fvl_budget"] = s.fvl_budget;
    json laws = json::array();
    for (const Law& law : s.laws) laws.push_back(to_json(law));
    j["laws"] = laws;
  }
  return j;
}

json to_json(const Derivation& d) {
  json steps = json::array();
  for (std::size_t k = 0; k < d.steps.size(); ++k) {
    const RewriteStep& s = d.steps[k];
    json subst = json::array();
    for (const BinaryTree& t : s.substitution) subst.push_back(t.str());
    steps.push_back({{"vertex", s.vertex.str()},
                     {"law", s.law + 1},
                     {"direction", s.direction == Direction::forward ? "forward" : "backward"},
                     {"substitution", subst},
                     {"result", d.trees[k + 1].str()}});
  }
  return {{"start", d.trees.front().str()}, {"steps", steps}};
}

json to_json(const EventualDerivation& r) {
  json j{{"result", r.str()}, {"budget", r.budget}, {"examined", r.examined}};
  switch (r.kind) {
    case EventualDerivation::Kind::holds:
      j["kind"] = "Holds";
      j["at"] = r.at ? r.at->str() : "b[]";
      if (r.proof) j["proof"] = to_json(*r.proof);
      break;
    case EventualDerivation::Kind::fails_all_up_to:
      j["kind"] = "FailsAllUpTo";
      break;
    case EventualDerivation::Kind::separated_by_root_split:
      j["kind"] = "NeverDerivable";
      break;
  }
  return j;
}

BinaryTree tree_from_json(const json& j) { return BinaryTree::parse(j.get<std::string>()); }

FElement element_from_json(const json& j) {
  return FElement::reduce(BinaryTree::parse(j.at("source").get<std::string>()),
                          BinaryTree::parse(j.at("target").get<std::string>()));
}

PLMap plmap_from_json(const json& j) {
  std::vector<Breakpoint> points;
  for (const json& p : j.at("breakpoints"))
    points.push_back({Dyadic::parse(p.at(0).get<std::string>()),
                      Dyadic::parse(p.at(1).get<std::string>())});
  return PLMap(std::move(points));
}

Law law_from_json(const json& j) {
  return Law(BinaryTree::parse(j.at("lhs").get<std::string>()),
             BinaryTree::parse(j.at("rhs").get<std::string>()));
}

Magma magma_from_json(const json& j) {
  std::vector<std::string> names = j.at("elements").get<std::vector<std::string>>();
  std::vector<std::vector<Element>> table;
  for (const json& row : j.at("table")) {
    std::vector<Element> out;
    for (const json& cell : row) {
      auto name = cell.get<std::string>();
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) throw ParseError("unknown element '" + name + "'", 0);
      out.push_back(static_cast<Element>(it - names.begin()));
    }
    table.push_back(std::move(out));
  }
  return Magma(std::move(names), std::move(table));
}

AbelianImage abelian_from_json(const json& j) {
  return {j.at("m").get<std::int64_t>(), j.at("n").get<std::int64_t>()};
}

}  // namespace assocf
