#pragma once

#include <stdexcept>
#include <string>

namespace adlv {

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class InvalidElement : public Error
{
public:
  using Error::Error;
};

class RankMismatch : public Error
{
public:
  RankMismatch(int a, int b)
  : Error("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b))
  {}
};

class NotFinite : public Error
{
public:
  using Error::Error;
};

class IncreasingLength : public Error
{
public:
  using Error::Error;
};

class BudgetExceeded : public Error
{
public:
  using Error::Error;
};

class NotMinCosetRep : public Error
{
public:
  using Error::Error;
};

class NotApplicable : public Error
{
public:
  using Error::Error;
};

class LabelOutOfRange : public Error
{
public:
  using Error::Error;
};

} // namespace adlv
