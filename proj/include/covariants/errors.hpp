#pragma once

#include <stdexcept>
#include <string>

namespace covariants {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed user input: ragged weight vectors, empty weight lists,
// unparseable config files, bad clique literals.
struct InvalidInput : Error {
  using Error::Error;
};

// Checked 64-bit arithmetic overflowed. Inputs at the intended scale
// never trigger this; it exists so results are exact or absent.
struct OverflowError : Error {
  using Error::Error;
};

// The weights do not generate the full character lattice.
struct NotFaithful : Error {
  using Error::Error;
};

// The weights do not sum to zero.
struct NotUnimodular : Error {
  using Error::Error;
};

// All weights have the same sign.
struct OneSided : Error {
  using Error::Error;
};

// A predicate required by the Cohen-Macaulay criterion fails. `predicate`
// names the failed hypothesis ("faithful", "generic", "weakly_symmetric").
struct HypothesisViolated : Error {
  std::string predicate;
  explicit HypothesisViolated(std::string pred)
      : Error("hypothesis violated: " + pred), predicate(std::move(pred)) {}
};

// A property that holds by theorem failed at runtime. Either the
// implementation is wrong or the input is a genuine counterexample;
// both must surface loudly, never be swallowed.
struct Falsification : Error {
  using Error::Error;
};

// A configured search budget ran out before a verdict was reached.
// Distinct from "infeasible": no answer is known.
struct BudgetExceeded : Error {
  using Error::Error;
};

}  // namespace covariants
