#pragma once

#include <stdexcept>

namespace wdm {

/// A polynomial fails the structural hypotheses of an operation (cover form,
/// monicity, absolute irreducibility of the top part, ...).
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A node, point or time budget ran out; no partial result is returned.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The prime is too small for the differential irreducibility criterion.
class CharacteristicTooSmall : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace wdm
