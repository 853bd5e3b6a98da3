#include "mindswap/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace mindswap
{

Permutation::Permutation(std::map<Label, Label> mapping)
{
  std::set<Label> values;
  for (auto const &[k, v] : mapping) {
    if (k == 0 || v == 0)
      throw std::invalid_argument("labels must be positive");
    if (!values.insert(v).second)
      throw std::invalid_argument("mapping is not injective");
  }
  for (Label v : values) {
    if (!mapping.contains(v))
      throw std::invalid_argument("mapping image leaves its key set");
  }
  for (auto const &[k, v] : mapping) {
    if (k != v)
      map_.emplace(k, v);
  }
}

Permutation Permutation::from_transposition(Transposition t)
{
  Permutation p;
  p.map_.emplace(t.a(), t.b());
  p.map_.emplace(t.b(), t.a());
  return p;
}

Label Permutation::operator()(Label x) const
{
  auto it = map_.find(x);
  return it == map_.end() ? x : it->second;
}

std::set<Label> Permutation::support() const
{
  std::set<Label> s;
  for (auto const &kv : map_)
    s.insert(s.end(), kv.first);
  return s;
}

std::vector<Transposition> CycleDecomposition::two_cycles() const
{
  std::vector<Transposition> out;
  for (auto const &c : cycles) {
    if (c.size() == 2)
      out.emplace_back(c[0], c[1]);
  }
  return out;
}

std::vector<Cycle> CycleDecomposition::long_cycles() const
{
  std::vector<Cycle> out;
  for (auto const &c : cycles) {
    if (c.size() > 2)
      out.push_back(c);
  }
  return out;
}

SwapSequence SwapSequence::as(Order target) const
{
  if (target == order)
    return *this;
  SwapSequence out{{swaps.rbegin(), swaps.rend()}, target};
  return out;
}

Permutation from_cycles(std::vector<Cycle> const &cycles)
{
  std::map<Label, Label> m;
  std::set<Label> seen;
  for (auto const &c : cycles) {
    if (c.size() < 2)
      throw MalformedCycleError("cycle must have at least two entries");
    std::set<Label> local;
    for (Label x : c) {
      if (x == 0)
        throw MalformedCycleError("labels must be positive");
      if (!local.insert(x).second)
        throw MalformedCycleError("label " + std::to_string(x) +
                                  " repeated within a cycle");
      if (seen.contains(x))
        throw DisjointnessError("label " + std::to_string(x) +
                                " appears in more than one cycle");
    }
    seen.insert(local.begin(), local.end());
    for (std::size_t i = 0; i < c.size(); ++i)
      m.emplace(c[i], c[(i + 1) % c.size()]);
  }
  return Permutation(std::move(m));
}

Permutation compose(Permutation const &f, Permutation const &g)
{
  std::map<Label, Label> m;
  for (auto const &[x, gx] : g.mapping())
    m.emplace(x, f(gx));
  for (auto const &[x, fx] : f.mapping()) {
    if (!g.mapping().contains(x))
      m.emplace(x, fx);
  }
  return Permutation(std::move(m));
}

Permutation inverse(Permutation const &p)
{
  std::map<Label, Label> m;
  for (auto const &[x, y] : p.mapping())
    m.emplace(y, x);
  return Permutation(std::move(m));
}

Label apply(Permutation const &p, Label x)
{
  return p(x);
}

CycleDecomposition decompose(Permutation const &p)
{
  CycleDecomposition d;
  std::set<Label> visited;
  // std::map iterates keys ascending, so each cycle starts at its minimum
  // and cycles come out sorted by minimum.
  for (auto const &kv : p.mapping()) {
    Label start = kv.first;
    if (visited.contains(start))
      continue;
    Cycle c;
    for (Label x = start; !visited.contains(x); x = p(x)) {
      visited.insert(x);
      c.push_back(x);
    }
    d.n += c.size();
    if (c.size() == 2)
      ++d.r;
    d.cycles.push_back(std::move(c));
  }
  d.m = d.cycles.size();
  return d;
}

Parity parity(Permutation const &p)
{
  auto d = decompose(p);
  return (d.n - d.m) % 2 == 0 ? Parity::Even : Parity::Odd;
}

Permutation product(SwapSequence const &seq)
{
  // Later swaps compose on the left.
  Permutation acc;
  for (auto const &t : seq.as(Order::Chronological).swaps)
    acc = compose(Permutation::from_transposition(t), acc);
  return acc;
}

SwapSequence inverse(SwapSequence const &seq)
{
  return {{seq.swaps.rbegin(), seq.swaps.rend()}, seq.order};
}

namespace
{

bool needs_commas(Permutation const &p)
{
  return !p.is_identity() && p.mapping().rbegin()->first >= 10;
}

void write_cycle(std::ostream &os, Cycle const &c, bool commas)
{
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0 && commas)
      os << ',';
    os << c[i];
  }
  os << ')';
}

Label parse_label(std::string_view tok, std::string_view text)
{
  if (tok.empty())
    throw ParseError("empty label in \"" + std::string(text) + "\"");
  unsigned long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("non-numeric label \"" + std::string(tok) + "\"");
  if (v < 1)
    throw ParseError("label must be at least 1, got \"" + std::string(tok) + "\"");
  if (v > 0xffffffffULL)
    throw ParseError("label too large: \"" + std::string(tok) + "\"");
  return static_cast<Label>(v);
}

Cycle parse_group(std::string_view body, std::string_view text)
{
  Cycle c;
  bool separated = body.find_first_of(", \t\r\n") != std::string_view::npos;
  if (separated) {
    std::size_t i = 0;
    while (i < body.size()) {
      while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i])))
        ++i;
      if (i == body.size())
        break;
      std::size_t j = i;
      while (j < body.size() && body[j] != ',' &&
             !std::isspace(static_cast<unsigned char>(body[j])))
        ++j;
      c.push_back(parse_label(body.substr(i, j - i), text));
      while (j < body.size() && std::isspace(static_cast<unsigned char>(body[j])))
        ++j;
      if (j < body.size() && body[j] == ',') {
        ++j;
        std::size_t k = j;
        while (k < body.size() && std::isspace(static_cast<unsigned char>(body[k])))
          ++k;
        if (k == body.size() || body[k] == ',')
          throw ParseError("dangling comma in \"" + std::string(text) + "\"");
      }
      i = j;
    }
  } else {
    for (char ch : body)
      c.push_back(parse_label(std::string_view(&ch, 1), text));
  }
  std::set<Label> seen;
  for (Label x : c) {
    if (!seen.insert(x).second)
      throw ParseError("label " + std::to_string(x) + " repeated within a cycle");
  }
  return c;
}

} // namespace

Permutation parse_cycles(std::string_view text)
{
  std::vector<Cycle> groups;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch != '(') {
      if (ch == ')')
        throw ParseError("unbalanced ')' in \"" + std::string(text) + "\"");
      throw ParseError("unexpected character '" + std::string(1, ch) + "' in \"" +
                       std::string(text) + "\"");
    }
    auto close = text.find_first_of("()", i + 1);
    if (close == std::string_view::npos || text[close] == '(')
      throw ParseError("unbalanced '(' in \"" + std::string(text) + "\"");
    groups.push_back(parse_group(text.substr(i + 1, close - i - 1), text));
    i = close + 1;
  }

  Permutation result;
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    if (it->size() < 2)
      continue;
    result = compose(from_cycles({*it}), result);
  }
  return result;
}

std::string to_string(Permutation const &p)
{
  if (p.is_identity())
    return "()";
  bool commas = needs_commas(p);
  std::ostringstream os;
  for (auto const &c : decompose(p).cycles)
    write_cycle(os, c, commas);
  return os.str();
}

std::string to_string(Transposition t)
{
  std::ostringstream os;
  write_cycle(os, {t.a(), t.b()}, t.b() >= 10);
  return os.str();
}

std::string to_string(SwapSequence const &seq)
{
  if (seq.empty())
    return "()";
  bool commas = std::any_of(seq.swaps.begin(), seq.swaps.end(),
                            [](Transposition t) { return t.b() >= 10; });
  std::ostringstream os;
  for (auto const &t : seq.swaps)
    write_cycle(os, {t.a(), t.b()}, commas);
  return os.str();
}

std::string to_string(Parity p)
{
  return p == Parity::Even ? "even" : "odd";
}

std::ostream &operator<<(std::ostream &os, Permutation const &p)
{
  return os << to_string(p);
}

std::ostream &operator<<(std::ostream &os, Transposition t)
{
  return os << to_string(t);
}

} // namespace mindswap
