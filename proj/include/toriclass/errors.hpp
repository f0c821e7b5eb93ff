#pragma once

#include <stdexcept>
#include <string>

namespace toriclass {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct BadParams : Error {
  explicit BadParams(const std::string& what) : Error(what) {}
};

struct DegeneratePolytope : Error {
  explicit DegeneratePolytope(const std::string& what) : Error(what) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& what) : Error(what) {}
};

struct Disconnected : Error {
  explicit Disconnected(const std::string& what) : Error(what) {}
};

struct EmptyGraph : Error {
  explicit EmptyGraph(const std::string& what) : Error(what) {}
};

struct NotIdp : Error {
  explicit NotIdp(const std::string& what) : Error(what) {}
};

struct LatticeDeficient : Error {
  explicit LatticeDeficient(const std::string& what) : Error(what) {}
};

struct NotPerfect : Error {
  explicit NotPerfect(const std::string& what) : Error(what) {}
};

struct OddCycleConditionFails : Error {
  explicit OddCycleConditionFails(const std::string& what) : Error(what) {}
};

struct SearchBudgetExceeded : Error {
  explicit SearchBudgetExceeded(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace toriclass
