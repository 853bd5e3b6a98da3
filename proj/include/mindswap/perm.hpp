#ifndef MINDSWAP_PERM_HPP
#define MINDSWAP_PERM_HPP

#include <cstddef>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mindswap/errors.hpp"
#include "mindswap/types.hpp"

namespace mindswap
{

using Cycle = std::vector<Label>;

// Finite bijection on positive labels, identity outside the stored support.
// Fixed points are never stored.
class Permutation
{
public:
  Permutation() = default;

  // Takes an explicit label -> label map; fixed points are dropped. Throws
  // std::invalid_argument if the map is not a bijection on its keys.
  explicit Permutation(std::map<Label, Label> mapping);

  static Permutation identity() { return {}; }
  static Permutation from_transposition(Transposition t);

  Label operator()(Label x) const;

  bool is_identity() const { return map_.empty(); }
  std::set<Label> support() const;
  std::size_t support_size() const { return map_.size(); }
  std::map<Label, Label> const &mapping() const { return map_; }

  friend bool operator==(Permutation const &, Permutation const &) = default;

private:
  std::map<Label, Label> map_;
};

enum class Parity { Even, Odd };

struct CycleDecomposition
{
  std::vector<Cycle> cycles;  // canonical: rotated min-first, sorted by min
  std::size_t n = 0;          // total entries
  std::size_t m = 0;          // number of cycles
  std::size_t r = 0;          // number of 2-cycles

  bool empty() const { return cycles.empty(); }
  std::vector<Transposition> two_cycles() const;
  std::vector<Cycle> long_cycles() const;

  friend bool operator==(CycleDecomposition const &, CycleDecomposition const &) = default;
};

// ProductNotation: the rightmost factor acts first (function composition).
// Chronological: the first factor acts first. The two are list reversals of
// each other.
enum class Order { Chronological, ProductNotation };

struct SwapSequence
{
  std::vector<Transposition> swaps;
  Order order;

  std::size_t size() const { return swaps.size(); }
  bool empty() const { return swaps.empty(); }

  // Same permutation, other convention.
  SwapSequence as(Order target) const;

  friend bool operator==(SwapSequence const &, SwapSequence const &) = default;
};

Permutation from_cycles(std::vector<Cycle> const &cycles);

// x -> f(g(x))
Permutation compose(Permutation const &f, Permutation const &g);
Permutation inverse(Permutation const &p);
Label apply(Permutation const &p, Label x);

CycleDecomposition decompose(Permutation const &p);
Parity parity(Permutation const &p);

Permutation product(SwapSequence const &seq);
SwapSequence inverse(SwapSequence const &seq);

Permutation parse_cycles(std::string_view text);
std::string to_string(Permutation const &p);
std::string to_string(Transposition t);
std::string to_string(SwapSequence const &seq);
std::string to_string(Parity p);

std::ostream &operator<<(std::ostream &os, Permutation const &p);
std::ostream &operator<<(std::ostream &os, Transposition t);

} // namespace mindswap

#endif // MINDSWAP_PERM_HPP
