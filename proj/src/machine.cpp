#include "mindswap/machine.hpp"

namespace mindswap
{

MachineState new_state(std::set<Label> roster, bool strict)
{
  if (roster.empty())
    throw InvalidRosterError("roster must name at least one body");
  if (roster.contains(0))
    throw InvalidRosterError("body labels must be positive");
  MachineState s;
  s.roster_ = std::move(roster);
  s.strict_ = strict;
  return s;
}

MachineState state_from_assignment(Permutation assignment,
                                   std::set<Transposition> used,
                                   std::set<Label> roster)
{
  for (Label x : assignment.support())
    roster.insert(x);
  for (auto const &t : used) {
    roster.insert(t.a());
    roster.insert(t.b());
  }
  MachineState s;
  s.assignment_ = std::move(assignment);
  s.used_ = std::move(used);
  s.roster_ = std::move(roster);
  return s;
}

MachineState apply_swap(MachineState const &s, Transposition t)
{
  if (s.used_.contains(t))
    throw PairReusedError(t);
  MachineState next = s;
  for (Label x : {t.a(), t.b()}) {
    if (!next.roster_.contains(x)) {
      if (s.strict_)
        throw UnknownBodyError(x);
      next.roster_.insert(x);
    }
  }
  next.used_.insert(t);
  next.assignment_ = compose(Permutation::from_transposition(t), s.assignment_);
  return next;
}

MachineState replay(SwapSequence const &log, std::set<Label> roster, bool strict)
{
  auto chrono = log.as(Order::Chronological);
  if (roster.empty()) {
    for (auto const &t : chrono.swaps) {
      roster.insert(t.a());
      roster.insert(t.b());
    }
    if (roster.empty())
      roster.insert(1);
  }
  MachineState s = new_state(std::move(roster), strict);
  for (std::size_t i = 0; i < chrono.swaps.size(); ++i) {
    try {
      s = apply_swap(s, chrono.swaps[i]);
    } catch (PairReusedError const &e) {
      throw PairReusedError(e.pair(), i);
    }
  }
  return s;
}

PlanVerdict validate_plan(MachineState const &s, SwapSequence const &plan)
{
  auto chrono = plan.as(Order::Chronological);
  PlanVerdict v;
  v.length = chrono.size();
  if (!s.restored())
    v.budget = min_undo_count(decompose(s.assignment())).M;

  std::set<Transposition> used = s.used_pairs();
  Permutation a = s.assignment();
  for (std::size_t i = 0; i < chrono.swaps.size(); ++i) {
    auto t = chrono.swaps[i];
    if (!used.insert(t).second)
      v.violations.push_back({i, t, s.used_pairs().contains(t)});
    a = compose(Permutation::from_transposition(t), a);
  }
  v.restored = a.is_identity();
  v.at_budget = v.budget && *v.budget == v.length;
  return v;
}

} // namespace mindswap
