#include "mindswap/undo.hpp"

#include <algorithm>

#include "mindswap/oracle.hpp"

namespace mindswap
{

UndoBudget min_undo_count(CycleDecomposition const &d)
{
  if (d.empty())
    throw NothingToUndoError();
  UndoBudget b;
  b.n = d.n;
  b.m = d.m;
  b.r = d.r;
  b.epsilon = epsilon(d.r);
  if (d.n == 2) {
    b.M = 5;
    b.helpers_required = 2;
  } else {
    b.M = d.n - d.m + d.r + b.epsilon;
  }
  return b;
}

std::size_t classic_min_count(CycleDecomposition const &d)
{
  if (d.empty())
    throw NothingToUndoError();
  return d.n - d.m;
}

std::vector<Label> default_helpers(Permutation const &p, std::size_t count)
{
  std::vector<Label> out;
  for (Label x = 1; out.size() < count; ++x) {
    if (p(x) == x)
      out.push_back(x);
  }
  return out;
}

namespace
{

using Factors = std::vector<Transposition>;

// (c1 c2 ... cl) = (c1 c2)(c2 c3)...(c_{l-1} c_l)
void plain_cycle(Cycle const &c, Factors &out)
{
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    out.emplace_back(c[i], c[i + 1]);
}

// (a b)(c1 ... cl) = (b c1)(a cl)(a c_{l-1})...(a c1)(b cl)
void two_cycle_with_long(Transposition ab, Cycle const &c, Factors &out)
{
  Label a = ab.a(), b = ab.b();
  out.emplace_back(b, c.front());
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    out.emplace_back(a, *it);
  out.emplace_back(b, c.back());
}

// (a b)(c d) = (b d)(a c)(b c)(a d)
void two_two_cycles(Transposition ab, Transposition cd, Factors &out)
{
  Label a = ab.a(), b = ab.b(), c = cd.a(), d = cd.b();
  out.emplace_back(b, d);
  out.emplace_back(a, c);
  out.emplace_back(b, c);
  out.emplace_back(a, d);
}

// (a b)(c d)(e f) = (a e)(b e)(c e)(d f)(d e)(a f)(a c)
void three_two_cycles(Transposition ab, Transposition cd, Transposition ef,
                      Factors &out)
{
  Label a = ab.a(), b = ab.b(), c = cd.a(), d = cd.b(), e = ef.a(), f = ef.b();
  out.emplace_back(a, e);
  out.emplace_back(b, e);
  out.emplace_back(c, e);
  out.emplace_back(d, f);
  out.emplace_back(d, e);
  out.emplace_back(a, f);
  out.emplace_back(a, c);
}

// (a b) = (c d)(b c)(a d)(a c)(b d) with helpers c, d
void lone_two_cycle(Transposition ab, Label c, Label d, Factors &out)
{
  Label a = ab.a(), b = ab.b();
  out.emplace_back(c, d);
  out.emplace_back(b, c);
  out.emplace_back(a, d);
  out.emplace_back(a, c);
  out.emplace_back(b, d);
}

} // namespace

FactorizationResult construct_factorization(Permutation const &p,
                                            std::vector<Label> const &helper_pool)
{
  auto d = decompose(p);
  if (d.empty())
    throw NothingToUndoError();

  auto twos = d.two_cycles();
  auto longs = d.long_cycles();

  FactorizationResult result;
  result.target = p;
  result.forbidden = {twos.begin(), twos.end()};
  Factors &out = result.factors.swaps;

  if (d.n == 2) {
    std::vector<Label> helpers;
    for (Label h : helper_pool) {
      if (h == 0 || p(h) != h)
        continue;
      if (std::find(helpers.begin(), helpers.end(), h) != helpers.end())
        continue;
      helpers.push_back(h);
      if (helpers.size() == 2)
        break;
    }
    if (helpers.size() < 2)
      throw NeedHelpersError(2);
    lone_two_cycle(twos.front(), helpers[0], helpers[1], out);
    result.helpers_used = {helpers[0], helpers[1]};
    return result;
  }

  std::size_t next_long = 0;
  if (d.r == 1) {
    // n > 2 with a single 2-cycle means a long cycle exists.
    two_cycle_with_long(twos.front(), longs.front(), out);
    next_long = 1;
  } else if (d.r >= 2) {
    std::size_t i = 0;
    if (d.r % 2 == 1) {
      three_two_cycles(twos[0], twos[1], twos[2], out);
      i = 3;
    }
    for (; i + 1 < twos.size(); i += 2)
      two_two_cycles(twos[i], twos[i + 1], out);
  }
  for (std::size_t k = next_long; k < longs.size(); ++k)
    plain_cycle(longs[k], out);
  return result;
}

namespace
{

bool avoids(SwapSequence const &plan, std::set<Transposition> const &used)
{
  return std::none_of(plan.swaps.begin(), plan.swaps.end(),
                      [&](Transposition t) { return used.contains(t); });
}

} // namespace

RestorationPlan make_restoration_plan(SwapSequence const &history,
                                      RestorationOptions const &options)
{
  auto log = history.as(Order::Chronological);
  std::set<Transposition> used;
  if (options.mode == PlanMode::History) {
    for (std::size_t i = 0; i < log.swaps.size(); ++i) {
      if (!used.insert(log.swaps[i]).second)
        throw PairReusedError(log.swaps[i], i);
    }
  }

  Permutation p = product(log);
  auto d = decompose(p);
  if (d.empty())
    throw NothingToUndoError();

  RestorationPlan out;
  out.mode = options.mode;
  out.budget = min_undo_count(d);

  std::vector<Label> pool = options.helper_pool;
  if (pool.empty())
    pool = default_helpers(p);

  // Reading Q's product-notation factors left to right in time composes to
  // Q^-1 = P^-1.
  auto to_plan = [](FactorizationResult const &f) {
    return SwapSequence{f.factors.swaps, Order::Chronological};
  };

  std::optional<FactorizationResult> built;
  try {
    built = construct_factorization(p, pool);
  } catch (NeedHelpersError const &) {
    if (options.mode == PlanMode::Theorem)
      throw;
  }

  if (options.mode == PlanMode::Theorem) {
    out.plan = to_plan(*built);
    out.helpers_used = built->helpers_used;
    return out;
  }

  if (built) {
    auto plan = to_plan(*built);
    if (avoids(plan, used)) {
      out.plan = std::move(plan);
      out.helpers_used = built->helpers_used;
      return out;
    }
  }

  // Search over the support plus helpers. Without an explicit pool, widen
  // the helper set one fresh label at a time up to the universe cap.
  std::vector<std::vector<Label>> attempts;
  if (!options.helper_pool.empty()) {
    attempts.push_back(options.helper_pool);
  } else {
    std::size_t room = kUniverseCap > p.support_size() ? kUniverseCap - p.support_size() : 0;
    auto extra = default_helpers(p, room);
    for (std::size_t k = std::min<std::size_t>(2, room); k <= room; ++k)
      attempts.emplace_back(extra.begin(), extra.begin() + k);
  }

  std::size_t max_depth = options.max_depth ? options.max_depth : out.budget.M + 4;
  std::optional<FactorizationResult> found;
  for (auto const &helpers : attempts) {
    SearchProblem problem;
    problem.target = p;
    problem.universe = p.support();
    for (Label h : helpers) {
      if (h != 0)
        problem.universe.insert(h);
    }
    if (problem.universe.size() > kUniverseCap)
      throw SearchBudgetExceededError(
          "history search needs " + std::to_string(problem.universe.size()) +
          " bodies, above the cap of " + std::to_string(kUniverseCap));
    for (auto const &t : used) {
      if (problem.universe.contains(t.a()) && problem.universe.contains(t.b()))
        problem.forbidden.insert(t);
    }
    problem.max_depth = max_depth;
    auto outcome = brute_force_min(problem);
    if (outcome) {
      found = std::move(outcome.found);
      break;
    }
  }
  if (!found)
    throw SearchBudgetExceededError(
        "no restoration plan avoiding the history within " + std::to_string(max_depth) +
        " swaps");
  out.plan = to_plan(*found);
  out.helpers_used = found->helpers_used;
  out.constructed = false;
  return out;
}

} // namespace mindswap
