#include "mindswap/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

namespace mindswap
{

namespace
{

using Index = std::uint8_t;
using Small = std::array<Index, kUniverseCap>;

struct Pair
{
  Index i;
  Index j;
};

class Searcher
{
public:
  explicit Searcher(SearchProblem const &problem)
  : problem_(problem), labels_(problem.universe.begin(), problem.universe.end())
  {
    k_ = labels_.size();
    for (std::size_t i = 0; i < kUniverseCap; ++i)
      remaining_[i] = static_cast<Index>(i);
    for (std::size_t i = 0; i < k_; ++i) {
      Label image = problem.target(labels_[i]);
      remaining_[i] = static_cast<Index>(index_of(image));
    }

    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = i + 1; j < k_; ++j) {
        if (!problem.forbidden.contains(Transposition(labels_[i], labels_[j])))
          pairs_.push_back({static_cast<Index>(i), static_cast<Index>(j)});
      }
    }

    // Labels outside the target's support that no forbidden pair mentions
    // can be relabeled among themselves freely.
    helper_rank_.fill(-1);
    int rank = 0;
    for (std::size_t i = 0; i < k_; ++i) {
      Label x = labels_[i];
      if (problem.target(x) != x)
        continue;
      bool constrained = std::any_of(problem.forbidden.begin(), problem.forbidden.end(),
                                     [x](Transposition t) { return t.touches(x); });
      if (!constrained)
        helper_rank_[i] = rank++;
    }
  }

  SearchOutcome run()
  {
    SearchOutcome outcome;
    std::size_t start = lower_bound(remaining_);
    for (std::size_t depth = start; depth <= problem_.max_depth; depth += 2) {
      path_.clear();
      used_mask_ = 0;
      helpers_seen_ = 0;
      if (dfs(remaining_, depth)) {
        outcome.found = build_result();
        break;
      }
      if (aborted_) {
        outcome.budget_exhausted = true;
        break;
      }
      outcome.explored_depth = depth;
    }
    outcome.nodes = nodes_;
    return outcome;
  }

private:
  std::size_t index_of(Label x) const
  {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), x);
    return static_cast<std::size_t>(it - labels_.begin());
  }

  // n - m over the universe: fewest transpositions reaching `perm`.
  std::size_t lower_bound(Small const &perm) const
  {
    std::uint32_t seen = 0;
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < k_; ++i) {
      if (seen >> i & 1u)
        continue;
      ++cycles;
      for (std::size_t x = i; !(seen >> x & 1u); x = perm[x])
        seen |= 1u << x;
    }
    return k_ - cycles;
  }

  // Fresh interchangeable helpers must enter in ascending order.
  bool helper_order_ok(Pair p, int &fresh) const
  {
    int ri = helper_rank_[p.i], rj = helper_rank_[p.j];
    bool fi = ri >= helpers_seen_, fj = rj >= helpers_seen_;
    fresh = int(fi) + int(fj);
    if (fi && fj)
      return ri == helpers_seen_ && rj == helpers_seen_ + 1;
    if (fi)
      return ri == helpers_seen_;
    if (fj)
      return rj == helpers_seen_;
    return true;
  }

  bool dfs(Small const &rem, std::size_t budget)
  {
    if (budget == 0)
      return lower_bound(rem) == 0;
    if (problem_.node_budget && nodes_ >= problem_.node_budget) {
      aborted_ = true;
      return false;
    }
    ++nodes_;

    for (std::size_t idx = 0; idx < pairs_.size(); ++idx) {
      if (!problem_.allow_repeats && (used_mask_ >> idx & 1u))
        continue;
      Pair p = pairs_[idx];
      int fresh = 0;
      if (!helper_order_ok(p, fresh))
        continue;

      // rem' = t o rem
      Small next = rem;
      for (std::size_t x = 0; x < k_; ++x) {
        if (next[x] == p.i)
          next[x] = p.j;
        else if (next[x] == p.j)
          next[x] = p.i;
      }
      if (lower_bound(next) > budget - 1)
        continue;

      path_.push_back(idx);
      used_mask_ |= std::uint64_t{1} << idx;
      helpers_seen_ += fresh;
      if (dfs(next, budget - 1))
        return true;
      helpers_seen_ -= fresh;
      used_mask_ &= ~(std::uint64_t{1} << idx);
      path_.pop_back();
      if (aborted_)
        return false;
    }
    return false;
  }

  FactorizationResult build_result() const
  {
    FactorizationResult r;
    r.target = problem_.target;
    r.forbidden = problem_.forbidden;
    for (std::size_t idx : path_) {
      Transposition t(labels_[pairs_[idx].i], labels_[pairs_[idx].j]);
      r.factors.swaps.push_back(t);
      for (Label x : {t.a(), t.b()}) {
        if (problem_.target(x) == x)
          r.helpers_used.insert(x);
      }
    }
    return r;
  }

  SearchProblem const &problem_;
  std::vector<Label> labels_;
  std::size_t k_ = 0;
  Small remaining_{};
  std::vector<Pair> pairs_;
  std::array<int, kUniverseCap> helper_rank_{};

  std::vector<std::size_t> path_;
  std::uint64_t used_mask_ = 0;
  int helpers_seen_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

void validate(SearchProblem const &problem)
{
  if (problem.max_depth < 1)
    throw InvalidProblemError("max_depth must be at least 1");
  if (problem.universe.size() > kUniverseCap)
    throw InvalidProblemError("universe has " + std::to_string(problem.universe.size()) +
                              " labels, cap is " + std::to_string(kUniverseCap));
  if (problem.universe.contains(0))
    throw InvalidProblemError("labels must be positive");
  for (Label x : problem.target.support()) {
    if (!problem.universe.contains(x))
      throw InvalidProblemError("target moves " + std::to_string(x) +
                                " which is outside the universe");
  }
  for (auto const &t : problem.forbidden) {
    if (!problem.universe.contains(t.a()) || !problem.universe.contains(t.b()))
      throw InvalidProblemError("forbidden pair " + to_string(t) +
                                " is outside the universe");
  }
}

} // namespace

SearchOutcome brute_force_min(SearchProblem const &problem)
{
  validate(problem);
  return Searcher(problem).run();
}

std::set<Transposition> own_two_cycles(Permutation const &p)
{
  auto twos = decompose(p).two_cycles();
  return {twos.begin(), twos.end()};
}

std::set<Label> certify_universe(Permutation const &p, std::size_t extra)
{
  auto universe = p.support();
  std::size_t add = extra + (universe.size() == 2 ? 2 : 0);
  for (Label h : default_helpers(p, add))
    universe.insert(h);
  return universe;
}

namespace
{

std::vector<Permutation> certify_instances(CertifyOptions const &options)
{
  std::vector<Label> base(options.n_max);
  std::iota(base.begin(), base.end(), Label{1});
  auto to_perm = [&](std::vector<Label> const &images) {
    std::map<Label, Label> m;
    for (std::size_t i = 0; i < images.size(); ++i)
      m.emplace(base[i], images[i]);
    return Permutation(std::move(m));
  };

  std::vector<Permutation> out;
  if (options.samples == 0) {
    auto images = base;
    while (std::next_permutation(images.begin(), images.end()))
      out.push_back(to_perm(images));
  } else {
    std::mt19937_64 rng(options.seed);
    auto images = base;
    while (out.size() < options.samples) {
      std::shuffle(images.begin(), images.end(), rng);
      auto p = to_perm(images);
      if (!p.is_identity())
        out.push_back(std::move(p));
    }
  }
  return out;
}

// Re-checks a search result from scratch: product, distinctness, avoidance.
bool admissible(FactorizationResult const &r)
{
  std::set<Transposition> seen;
  for (auto const &t : r.factors.swaps) {
    if (r.forbidden.contains(t) || !seen.insert(t).second)
      return false;
  }
  return product(r.factors) == r.target;
}

} // namespace

CertifyReport certify_formula(CertifyOptions const &options)
{
  auto t0 = std::chrono::steady_clock::now();
  CertifyReport report;
  report.n_max = options.n_max;
  report.exhaustive = options.samples == 0;
  if (options.n_max < 2)
    return report;

  auto instances = certify_instances(options);
  std::vector<std::optional<FactorizationResult>> results(instances.size());
  std::vector<CertifyMismatch> mismatches;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> checked{0};
  std::atomic<std::size_t> outsider_checked{0};
  std::atomic<bool> out_of_time{false};

  auto check = [&](Permutation const &p, std::size_t extra, std::size_t expected)
      -> std::optional<FactorizationResult> {
    SearchProblem problem;
    problem.target = p;
    problem.universe = certify_universe(p, extra);
    problem.forbidden = own_two_cycles(p);
    problem.max_depth = expected + 2;
    auto outcome = brute_force_min(problem);
    std::optional<std::size_t> len;
    if (outcome && admissible(*outcome.found))
      len = outcome.found->factors.size();
    if (len != expected) {
      std::lock_guard lock(mu);
      mismatches.push_back({p, expected, len, extra});
    }
    return std::move(outcome.found);
  };

  auto worker = [&] {
    for (;;) {
      if (options.time_budget.count() > 0 &&
          std::chrono::steady_clock::now() - t0 > options.time_budget) {
        out_of_time = true;
        return;
      }
      std::size_t i = next++;
      if (i >= instances.size())
        return;
      auto const &p = instances[i];
      std::size_t expected = min_undo_count(decompose(p)).M;
      results[i] = check(p, 0, expected);
      ++checked;
      if (options.outsider_stride && i % options.outsider_stride == 0) {
        std::size_t base = certify_universe(p).size();
        for (std::size_t extra = 1; extra <= 2 && base + extra <= kUniverseCap; ++extra) {
          check(p, extra, expected);
          ++outsider_checked;
        }
      }
    }
  };

  unsigned threads = options.threads ? options.threads
                                     : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(instances.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t)
      pool.emplace_back(worker);
    worker();
  }

  report.checked = checked;
  report.outsider_checked = outsider_checked;
  report.complete = !out_of_time && report.checked == instances.size();
  std::sort(mismatches.begin(), mismatches.end(), [](auto const &x, auto const &y) {
    return std::pair(to_string(x.target), x.extra_labels) <
           std::pair(to_string(y.target), y.extra_labels);
  });
  report.mismatches = std::move(mismatches);
  if (options.keep_results) {
    for (auto &r : results) {
      if (r)
        report.results.push_back(std::move(*r));
    }
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  return report;
}

std::size_t EntryGraph::edges_within(std::vector<Label> const &component) const
{
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [&](Transposition t) {
        return std::binary_search(component.begin(), component.end(), t.a());
      }));
}

EntryGraph factorization_graph(SwapSequence const &seq)
{
  EntryGraph g;
  g.edges = seq.swaps;
  std::set<Label> verts;
  for (auto const &t : seq.swaps) {
    verts.insert(t.a());
    verts.insert(t.b());
  }
  g.vertices.assign(verts.begin(), verts.end());

  std::vector<std::size_t> parent(g.vertices.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  auto idx = [&](Label x) {
    return static_cast<std::size_t>(
        std::lower_bound(g.vertices.begin(), g.vertices.end(), x) - g.vertices.begin());
  };
  for (auto const &t : seq.swaps) {
    auto ra = find(idx(t.a())), rb = find(idx(t.b()));
    if (ra != rb)
      parent[std::max(ra, rb)] = std::min(ra, rb);
  }

  std::map<std::size_t, std::vector<Label>> groups;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    groups[find(i)].push_back(g.vertices[i]);
  for (auto &kv : groups)
    g.components.push_back(std::move(kv.second));
  return g;
}

} // namespace mindswap
