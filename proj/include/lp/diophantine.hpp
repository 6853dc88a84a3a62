// All-odd representations of 4m+1 as a sum of five squares, and the unit-sum
// filter that discards representations no signing can bring to sum 1.

#pragma once

#include <array>
#include <compare>
#include <vector>

namespace lp {

/// Canonical (ascending, unsigned) solution of a1^2 + ... + a5^2 = target.
struct DiophSolution {
  std::array<int, 5> values{};
  int target = 0;

  auto operator<=>(const DiophSolution&) const = default;
};

/// An ordered, signed arrangement of a solution with entry sum 1.
struct SignedTuple {
  std::array<int, 5> values{};

  auto operator<=>(const SignedTuple&) const = default;
};

/// Every canonical all-odd solution for target 4m+1, sorted lexicographically.
/// Throws std::domain_error for even or non-positive m.
std::vector<DiophSolution> odd_five_squares(int m);

bool admits_unit_sum(const DiophSolution& sol);

/// All distinct signed orderings of sol with unit sum, sorted. Empty when the
/// solution does not admit a unit sum.
std::vector<SignedTuple> signed_orderings(const DiophSolution& sol);

}  // namespace lp
