#ifndef MINDSWAP_UNDO_HPP
#define MINDSWAP_UNDO_HPP

#include <cstddef>
#include <set>
#include <vector>

#include "mindswap/perm.hpp"

namespace mindswap
{

// Minimum number of distinct transpositions, none equal to a 2-cycle factor
// of P, whose product is P.
struct UndoBudget
{
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t r = 0;
  std::size_t M = 0;
  unsigned epsilon = 0;
  std::size_t helpers_required = 0;
};

struct FactorizationResult
{
  SwapSequence factors{{}, Order::ProductNotation};
  Permutation target;
  std::set<Transposition> forbidden;
  std::set<Label> helpers_used;
};

enum class PlanMode { Theorem, History };

struct RestorationPlan
{
  SwapSequence plan{{}, Order::Chronological};
  PlanMode mode = PlanMode::Theorem;
  UndoBudget budget;
  std::set<Label> helpers_used;
  // True when the plan came from the constructive templates rather than
  // from search.
  bool constructed = true;
};

inline unsigned epsilon(std::size_t r) { return r % 2 == 0 ? 0u : 1u; }

UndoBudget min_undo_count(CycleDecomposition const &d);
std::size_t classic_min_count(CycleDecomposition const &d);

// Deterministic minimum-length factorization of p into distinct
// transpositions avoiding p's own 2-cycles. Only the n = 2 case draws on
// helper_pool (the first two labels outside the support).
FactorizationResult construct_factorization(Permutation const &p,
                                            std::vector<Label> const &helper_pool = {});

struct RestorationOptions
{
  PlanMode mode = PlanMode::Theorem;
  std::vector<Label> helper_pool;
  // History search depth cap; 0 means M + 4.
  std::size_t max_depth = 0;
};

// history must be Chronological. The returned plan, applied after history,
// restores every body.
RestorationPlan make_restoration_plan(SwapSequence const &history,
                                      RestorationOptions const &options);

// Smallest positive labels outside the support of p.
std::vector<Label> default_helpers(Permutation const &p, std::size_t count = 2);

} // namespace mindswap

#endif // MINDSWAP_UNDO_HPP
