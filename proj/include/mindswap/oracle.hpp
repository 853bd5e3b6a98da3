#ifndef MINDSWAP_ORACLE_HPP
#define MINDSWAP_ORACLE_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "mindswap/perm.hpp"
#include "mindswap/undo.hpp"

namespace mindswap
{

inline constexpr std::size_t kUniverseCap = 8;

struct SearchProblem
{
  Permutation target;
  std::set<Label> universe;
  std::set<Transposition> forbidden;
  bool allow_repeats = false;
  std::size_t max_depth = 12;
  // Node expansions before giving up; 0 is unlimited.
  std::uint64_t node_budget = 0;
};

struct SearchOutcome
{
  std::optional<FactorizationResult> found;
  // Deepest length fully explored without finding a solution.
  std::optional<std::size_t> explored_depth;
  std::uint64_t nodes = 0;
  bool budget_exhausted = false;

  explicit operator bool() const { return found.has_value(); }
};

// Iterative deepening over the length, restricted to the target's parity,
// pruned by the classic n - m bound on what is left to build. The returned
// sequence (ProductNotation) is the lexicographically least among the
// shortest solutions. Throws InvalidProblemError on malformed problems.
SearchOutcome brute_force_min(SearchProblem const &problem);

// Forbidden set of the theorem: the 2-cycle factors of p.
std::set<Transposition> own_two_cycles(Permutation const &p);

// Universe used when certifying p: its support, plus `extra` fresh labels
// (two helpers are always added when the support has size 2).
std::set<Label> certify_universe(Permutation const &p, std::size_t extra = 0);

struct CertifyOptions
{
  std::size_t n_max = 4;
  // 0 means exhaustive over every permutation of {1..n_max}.
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  // Every k-th instance is re-searched with one and two extra labels to
  // confirm outsiders never shorten the minimum; 0 disables.
  std::size_t outsider_stride = 0;
  // Zero is unlimited.
  std::chrono::steady_clock::duration time_budget{0};
  unsigned threads = 0;
  bool keep_results = false;
};

struct CertifyMismatch
{
  Permutation target;
  std::size_t expected = 0;
  std::optional<std::size_t> found;
  std::size_t extra_labels = 0;
};

struct CertifyReport
{
  std::size_t n_max = 0;
  bool exhaustive = true;
  bool complete = true;
  std::size_t checked = 0;
  std::size_t outsider_checked = 0;
  std::vector<CertifyMismatch> mismatches;
  std::vector<FactorizationResult> results;
  std::chrono::milliseconds elapsed{0};
};

CertifyReport certify_formula(CertifyOptions const &options);

struct EntryGraph
{
  std::vector<Label> vertices;
  std::vector<Transposition> edges;  // one per factor, multiplicity kept
  std::vector<std::vector<Label>> components;

  std::size_t edges_within(std::vector<Label> const &component) const;
};

EntryGraph factorization_graph(SwapSequence const &seq);

} // namespace mindswap

#endif // MINDSWAP_ORACLE_HPP
