#pragma once

#include <cstdint>

namespace wiegold {

// Explicit limits for the exponential procedures. Exceeding any of them
// raises BudgetExceeded, never a wrong answer.
struct Budget {
  // Largest power A^n (number of encoded tuples) that may be materialised
  // as a dense membership set, and largest number of members any single
  // closure may accumulate.
  std::uint64_t max_tuples = std::uint64_t{1} << 24;
  // Candidate sets examined by a minimum-generating-set search.
  std::uint64_t max_candidates = 50'000'000;
  // Exhaustive subuniverse enumeration (all subsets of A^n) is only used
  // when s^n is at most this.
  std::uint64_t exhaustive_subset_cap = 16;
  // Number of distinct subuniverses the bottom-up enumeration may collect.
  std::uint64_t max_subuniverses = 1'000'000;
};

}  // namespace wiegold
