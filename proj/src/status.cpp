#include <algorithm>

#include "assocf/error.hpp"
#include "assocf/magma.hpp"
#include "assocf/thompson.hpp"
#include "sweep.hpp"

namespace assocf {

std::string to_string(AssocStatus::Kind kind) {
  switch (kind) {
    case AssocStatus::Kind::full_f:
      return "FullF";
    case AssocStatus::Kind::trivial_certified:
      return "TrivialCertified";
    case AssocStatus::Kind::contains_commutator:
      return "ContainsCommutator";
    case AssocStatus::Kind::no_law_up_to:
      return "NoLawUpTo";
    case AssocStatus::Kind::unknown:
      return "Unknown";
  }
  return {};
}

std::string AssocStatus::str() const {
  switch (kind) {
    case Kind::no_law_up_to:
      return "NoLawUpTo(" + std::to_string(arity) + ")";
    case Kind::unknown:
      return "Unknown(arity<=" + std::to_string(arity) + ", " + std::to_string(laws.size()) +
             " laws)";
    default:
      return to_string(kind) + "(" + reason + ")";
  }
}

Law five_variable_law() {
  const FElement& c0 = generators().c0;
  return Law(c0.source(), c0.target());
}

namespace {

bool affordable(const Magma& m, std::size_t n, std::uint64_t guard) {
  try {
    detail::tuple_count(m.size(), n, guard);
    return true;
  } catch (const BudgetError&) {
    return false;
  }
}

}  // namespace

AssocStatus assoc_status(const Magma& m, const StatusBudgets& budgets) {
  AssocStatus status;
  const SweepOptions& sweep = budgets.search.sweep;

  if (m.associative()) {
    status.kind = AssocStatus::Kind::full_f;
    status.reason = "associative";
    return status;
  }
  if (auto witness = is_solvable(m)) {
    status.kind = AssocStatus::Kind::full_f;
    status.reason = "solvable";
    status.solvable = witness;
    return status;
  }
  if (auto e = m.two_sided_identity()) {
    status.kind = AssocStatus::Kind::trivial_certified;
    status.reason = "identity-theorem";
    status.identity = e;
    status.counterexample = satisfies(m, associative_law(), sweep).counterexample;
    return status;
  }

  const Law fvl = five_variable_law();
  std::size_t budget = budgets.eventual;
  while (budget > 0 && !affordable(m, fvl.arity() + budget, sweep.cost_guard)) --budget;
  EventualResult ev = satisfies_eventually(m, fvl, budget, true, sweep);
  if (ev.kind == EventualResult::Kind::holds ||
      (ev.kind == EventualResult::Kind::decided_by_perfection && ev.value)) {
    status.kind = AssocStatus::Kind::contains_commutator;
    if (ev.at && !ev.at->empty()) {
      status.reason = "fvl-at-expansion";
      status.fvl_at = ev.at;
    } else {
      status.reason = "fvl-on-the-nose";
    }
    return status;
  }
  status.fvl_budget = ev.kind == EventualResult::Kind::fails_all_up_to ? budget : 0;

  const std::size_t cap = budgets.arity_cap ? budgets.arity_cap : default_arity_cap(m.size());
  std::size_t reached = 0;
  for (std::size_t n = 3; n <= cap; ++n) {
    if (!affordable(m, n, sweep.cost_guard)) break;
    std::vector<Law> found = search_laws(m, n, budgets.search);
    status.laws.insert(status.laws.end(), found.begin(), found.end());
    reached = n;
  }
  status.arity = reached;
  status.kind = status.laws.empty() ? AssocStatus::Kind::no_law_up_to : AssocStatus::Kind::unknown;
  return status;
}

}  // namespace assocf
