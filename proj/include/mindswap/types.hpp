#ifndef MINDSWAP_TYPES_HPP
#define MINDSWAP_TYPES_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>

namespace mindswap
{

// Body labels are positive integers; 0 is never a valid label.
using Label = std::uint32_t;

// Unordered pair of distinct labels, stored with a < b.
class Transposition
{
public:
  Transposition(Label x, Label y)
  : a_(std::min(x, y)), b_(std::max(x, y))
  {
    if (x == y)
      throw std::invalid_argument("transposition needs two distinct labels");
    if (a_ == 0)
      throw std::invalid_argument("labels must be positive");
  }

  Label a() const { return a_; }
  Label b() const { return b_; }

  bool touches(Label x) const { return x == a_ || x == b_; }

  Label apply(Label x) const
  {
    if (x == a_) return b_;
    if (x == b_) return a_;
    return x;
  }

  friend auto operator<=>(Transposition const &, Transposition const &) = default;

private:
  Label a_;
  Label b_;
};

} // namespace mindswap

template<>
struct std::hash<mindswap::Transposition>
{
  std::size_t operator()(mindswap::Transposition const &t) const noexcept
  {
    return (std::size_t{t.a()} << 32) ^ std::size_t{t.b()};
  }
};

#endif // MINDSWAP_TYPES_HPP
