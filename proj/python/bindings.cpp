#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "assocf/error.hpp"
#include "assocf/formats.hpp"
#include "assocf/magma.hpp"
#include "assocf/plmodel.hpp"
#include "assocf/rewrite.hpp"
#include "assocf/thompson.hpp"
#include "assocf/zoo.hpp"

namespace py = pybind11;
using namespace assocf;

namespace {

Side side_of(const std::string& s) {
  if (s == "left" || s == "0") return Side::left;
  if (s == "right" || s == "1") return Side::right;
  throw py::value_error("side must be 'left' or 'right'");
}

FElement element_of(const std::string& text) {
  return text.rfind("pair", 0) == 0 ? FElement::parse(text) : parse_word(text);
}

py::dict eventual_dict(const EventualResult& r) {
  py::dict d;
  d["result"] = r.str();
  d["budget"] = r.budget;
  d["examined"] = r.examined;
  d["holds"] = r.kind == EventualResult::Kind::holds ||
               (r.kind == EventualResult::Kind::decided_by_perfection && r.value);
  d["at"] = r.at ? py::object(py::str(r.at->str())) : py::object(py::none());
  return d;
}

py::dict status_dict(const AssocStatus& s, const Magma& m) {
  py::dict d;
  d["kind"] = to_string(s.kind);
  d["reason"] = s.reason;
  d["summary"] = s.str();
  py::list laws;
  for (const Law& law : s.laws) laws.append(law.str());
  d["laws"] = laws;
  if (s.solvable) d["witness"] = py::make_tuple(s.solvable->tree.str(), m.name(s.solvable->zero));
  if (s.identity) d["identity"] = m.name(*s.identity);
  return d;
}

}  // namespace

PYBIND11_MODULE(_assocf, m) {
  m.doc() = "Thompson's group F and finite bracket algebras";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<BinaryTree>(m, "Tree")
      .def(py::init([](const std::string& s) { return BinaryTree::parse(s); }), py::arg("literal") = ".")
      .def_property_readonly("leaves", &BinaryTree::leaf_count)
      .def_property_readonly("depth", &BinaryTree::depth)
      .def("expand", [](const BinaryTree& t, std::size_t i) { return expand(t, i); })
      .def("shift", [](const BinaryTree& t, const std::string& s) { return shift(t, side_of(s)); })
      .def("reflect", [](const BinaryTree& t) { return reflect(t); })
      .def("join", [](const BinaryTree& t, const BinaryTree& u) { return join(t, u); })
      .def("__str__", &BinaryTree::str)
      .def("__repr__", [](const BinaryTree& t) { return "Tree('" + t.str() + "')"; })
      .def("__eq__", [](const BinaryTree& a, const BinaryTree& b) { return a == b; })
      .def("__hash__", [](const BinaryTree& t) { return std::hash<BinaryTree>{}(t); });

  m.def("enumerate_trees", [](std::size_t n) { return enumerate_trees(n); }, py::arg("n"));

  py::class_<FElement>(m, "Element")
      .def(py::init([](const std::string& s) { return element_of(s); }), py::arg("text") = "1")
      .def_static("from_pair", [](const BinaryTree& p, const BinaryTree& q) { return reduce(p, q); })
      .def_property_readonly("source", &FElement::source)
      .def_property_readonly("target", &FElement::target)
      .def_property_readonly("leaves", &FElement::leaf_count)
      .def("is_identity", &FElement::is_identity)
      .def("__mul__", [](const FElement& a, const FElement& b) { return multiply(a, b); })
      .def("__pow__", [](const FElement& a, std::int64_t k) { return power(a, k); })
      .def("inverse", [](const FElement& a) { return invert(a); })
      .def("shift", [](const FElement& a, const std::string& s) { return shift_endo(a, side_of(s)); })
      .def("reflect", [](const FElement& a) { return reflect_auto(a); })
      .def("abelianize", [](const FElement& a) {
        AbelianImage ab = abelianize(a);
        return py::make_tuple(ab.m, ab.n);
      })
      .def("pl", [](const FElement& a) { return to_pl(a).str(); })
      .def("svg", [](const FElement& a, int size_log2) { return to_pl(a).svg(size_log2); },
           py::arg("size_log2") = 9)
      .def("__call__", [](const FElement& a, const std::string& x) {
        return to_pl(a)(Dyadic::parse(x)).str();
      })
      .def("support", [](const FElement& a) {
        Support s = support_interval(a);
        return py::make_tuple(s.lo.str(), s.hi.str());
      })
      .def("stabilizes_halfpowers", [](const FElement& a) { return stabilizes_halfpowers(a); })
      .def("normal_member", [](const FElement& a, std::uint64_t mm, std::uint64_t n) {
        return normal_membership(a, {mm, n});
      })
      .def("__str__", &FElement::str)
      .def("__repr__", [](const FElement& a) { return "Element('" + a.str() + "')"; })
      .def("__eq__", [](const FElement& a, const FElement& b) { return a == b; })
      .def("__hash__", [](const FElement& a) { return std::hash<FElement>{}(a); });

  m.def("commutator", [](const FElement& a, const FElement& b) { return commutator(a, b); });

  py::class_<Magma>(m, "Magma")
      .def(py::init<std::vector<std::string>, std::vector<std::vector<Element>>>(),
           py::arg("names"), py::arg("table"))
      .def_static("parse", [](const std::string& text) { return parse_magma(text); })
      .def_static("load", &load_magma)
      .def_static("zoo", [](const std::string& name) { return zoo_magma(name); })
      .def_property_readonly("names", &Magma::names)
      .def_property_readonly("size", &Magma::size)
      .def_property_readonly("simply_perfect", &Magma::simply_perfect)
      .def_property_readonly("associative", &Magma::associative)
      .def("op", [](const Magma& mg, const std::string& a, const std::string& b) {
        auto x = mg.find(a), y = mg.find(b);
        if (!x || !y) throw py::key_error("unknown element");
        return mg.name(mg.op(*x, *y));
      })
      .def("emit", [](const Magma& mg) { return emit_magma(mg); })
      .def("satisfies", [](const Magma& mg, const std::string& law, unsigned threads) {
        return satisfies(mg, Law::parse(law), {threads}).holds;
      }, py::arg("law"), py::arg("threads") = 1)
      .def("eventually", [](const Magma& mg, const std::string& law, std::size_t budget, bool perfection) {
        return eventual_dict(satisfies_eventually(mg, Law::parse(law), budget, perfection));
      }, py::arg("law"), py::arg("budget") = kDefaultEventualBudget, py::arg("use_perfection") = true)
      .def("derived_chain_sizes", [](const Magma& mg) {
        std::vector<std::size_t> out;
        for (const auto& d : mg.derived_chain()) out.push_back(d.size());
        return out;
      })
      .def("search_laws", [](const Magma& mg, std::size_t n) {
        std::vector<std::string> out;
        for (const Law& law : search_laws(mg, n)) out.push_back(law.str());
        return out;
      })
      .def("status", [](const Magma& mg) { return status_dict(assoc_status(mg), mg); });

  m.def("zoo_names", [] {
    std::vector<std::string> out;
    for (const ZooEntry& e : zoo()) out.push_back(e.name);
    return out;
  });

  m.def("derivable", [](const std::string& p, const std::string& q, const std::vector<std::string>& laws) {
    VarietyPresentation v;
    for (const std::string& l : laws) v.laws.push_back(Law::parse(l));
    auto d = derivable(BinaryTree::parse(p), BinaryTree::parse(q), v);
    return d ? py::object(py::int_(d->steps.size())) : py::object(py::none());
  }, py::arg("p"), py::arg("q"), py::arg("laws"));

  m.def("member", [](const FElement& g, const std::vector<FElement>& gens, std::size_t budget) {
    return membership_semidecide(g, gens, budget).str();
  }, py::arg("g"), py::arg("generators"), py::arg("budget") = kDefaultDerivationBudget);

  m.def("closure", [](const std::vector<FElement>& gens, std::size_t depth) {
    return closure_generate(gens, depth);
  }, py::arg("generators"), py::arg("depth"));
}
