#ifndef MINDSWAP_ERRORS_HPP
#define MINDSWAP_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "mindswap/types.hpp"

namespace mindswap
{

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class DisjointnessError : public Error
{
public:
  using Error::Error;
};

class MalformedCycleError : public Error
{
public:
  using Error::Error;
};

class ParseError : public Error
{
public:
  using Error::Error;
};

// The permutation is already the identity.
class NothingToUndoError : public Error
{
public:
  NothingToUndoError()
  : Error("nothing to undo: permutation is the identity")
  {}
};

class NeedHelpersError : public Error
{
public:
  explicit NeedHelpersError(std::size_t needed)
  : Error("need " + std::to_string(needed) + " helper bodies outside the support"),
    needed_(needed)
  {}

  std::size_t needed() const { return needed_; }

private:
  std::size_t needed_;
};

class SearchBudgetExceededError : public Error
{
public:
  using Error::Error;
};

class InvalidProblemError : public Error
{
public:
  using Error::Error;
};

class InvalidRosterError : public Error
{
public:
  using Error::Error;
};

class UnknownBodyError : public Error
{
public:
  explicit UnknownBodyError(Label body)
  : Error("body " + std::to_string(body) + " is not on the roster"),
    body_(body)
  {}

  Label body() const { return body_; }

private:
  Label body_;
};

class PairReusedError : public Error
{
public:
  explicit PairReusedError(Transposition pair,
                           std::optional<std::size_t> index = std::nullopt)
  : Error(message(pair, index)), pair_(pair), index_(index)
  {}

  Transposition pair() const { return pair_; }
  std::optional<std::size_t> index() const { return index_; }

private:
  static std::string message(Transposition pair, std::optional<std::size_t> index)
  {
    std::string s = "pair (" + std::to_string(pair.a()) + "," +
                    std::to_string(pair.b()) + ") was already used";
    if (index)
      s += " (swap #" + std::to_string(*index + 1) + ")";
    return s;
  }

  Transposition pair_;
  std::optional<std::size_t> index_;
};

} // namespace mindswap

#endif // MINDSWAP_ERRORS_HPP
