#ifndef MINDSWAP_MACHINE_HPP
#define MINDSWAP_MACHINE_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "mindswap/perm.hpp"
#include "mindswap/undo.hpp"

namespace mindswap
{

// Two-body mind-switch machine that refuses to run twice on the same pair.
// States are values: every transition returns a new state.
class MachineState
{
public:
  // assignment() maps each mind to the body it currently occupies; it is the
  // product notation of the reversed swap log.
  Permutation const &assignment() const { return assignment_; }
  std::set<Transposition> const &used_pairs() const { return used_; }
  std::set<Label> const &roster() const { return roster_; }
  bool strict() const { return strict_; }

  // Label of the mind currently in `body`.
  Label mind_in(Label body) const { return inverse(assignment_)(body); }

  bool restored() const { return assignment_.is_identity(); }

  friend MachineState new_state(std::set<Label> roster, bool strict);
  friend MachineState state_from_assignment(Permutation assignment,
                                            std::set<Transposition> used,
                                            std::set<Label> roster);
  friend MachineState apply_swap(MachineState const &s, Transposition t);

private:
  Permutation assignment_;
  std::set<Transposition> used_;
  std::set<Label> roster_;
  bool strict_ = false;
};

// Throws InvalidRosterError on an empty roster. In strict mode swaps naming
// bodies off the roster are rejected instead of enrolling them.
MachineState new_state(std::set<Label> roster, bool strict = false);

// A state that already holds `assignment` with `used` pairs spent, without
// a recorded log. The roster is widened to cover both.
MachineState state_from_assignment(Permutation assignment,
                                   std::set<Transposition> used,
                                   std::set<Label> roster = {});

// Throws PairReusedError or, in strict mode, UnknownBodyError.
MachineState apply_swap(MachineState const &s, Transposition t);

// Folds apply_swap over a chronological log; PairReusedError carries the
// zero-based index of the offending swap.
MachineState replay(SwapSequence const &log, std::set<Label> roster = {},
                    bool strict = false);

struct PlanViolation
{
  std::size_t index;  // zero-based position in the plan
  Transposition pair;
  bool reused_from_history;
};

struct PlanVerdict
{
  std::vector<PlanViolation> violations;
  bool restored = false;
  std::size_t length = 0;
  std::optional<std::size_t> budget;  // M for the state's assignment
  bool at_budget = false;

  bool fresh() const { return violations.empty(); }
  bool valid() const { return fresh() && restored; }
};

PlanVerdict validate_plan(MachineState const &s, SwapSequence const &plan);

} // namespace mindswap

#endif // MINDSWAP_MACHINE_HPP
