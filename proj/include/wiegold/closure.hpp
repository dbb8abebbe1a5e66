#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wiegold/algebra.hpp"
#include "wiegold/budget.hpp"

namespace wiegold {

/// A subset of A^n closed under every operation, stored as the sorted list
/// of member codes plus a dense membership bitmap over [0, s^n).
///
/// Also serves as the compatible-relation type: a relation of arity n is a
/// subuniverse of A^n.
class Subuniverse {
 public:
  // Wraps an already-closed set of codes. Callers outside this module
  // should obtain instances from close().
  Subuniverse(std::uint32_t base, std::uint32_t width,
              std::vector<TupleCode> members);

  [[nodiscard]] const PowerCodec& codec() const noexcept { return codec_; }
  [[nodiscard]] std::uint32_t width() const noexcept { return codec_.width(); }
  [[nodiscard]] std::uint32_t base() const noexcept { return codec_.base(); }
  // Sorted ascending.
  [[nodiscard]] std::span<const TupleCode> members() const noexcept {
    return members_;
  }
  [[nodiscard]] std::size_t cardinality() const noexcept {
    return members_.size();
  }
  [[nodiscard]] bool contains(TupleCode code) const {
    return code < codec_.cardinality() &&
           ((bits_[code >> 6] >> (code & 63)) & 1U) != 0;
  }
  [[nodiscard]] bool is_full() const noexcept {
    return members_.size() == codec_.cardinality();
  }
  [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
  // Set inclusion.
  [[nodiscard]] bool subset_of(const Subuniverse& other) const;

  friend bool operator==(const Subuniverse& a, const Subuniverse& b) {
    return a.width() == b.width() && a.base() == b.base() &&
           a.members_ == b.members_;
  }

 private:
  PowerCodec codec_;
  std::vector<TupleCode> members_;
  std::vector<std::uint64_t> bits_;
};

using Relation = Subuniverse;

// The subuniverse of A^n generated by `generators`: the least set containing
// them and closed under every operation applied componentwise.
// Throws BudgetExceeded when s^n exceeds budget.max_tuples.
Subuniverse close(const FiniteAlgebra& alg, std::uint32_t n,
                  std::span<const TupleCode> generators,
                  const Budget& budget = {});

// Whether `generators` generates all of A^n.
bool generates(const FiniteAlgebra& alg, std::uint32_t n,
               std::span<const TupleCode> generators,
               const Budget& budget = {});

enum class GeneratingSearch {
  // Generating sets of A^n correspond to sets C of n distinct columns in A^g
  // such that the g-generated term functions project onto all of A^C. The
  // search runs over column sets, i.e. modulo permutations of the n
  // coordinates, and rejects g at once when fewer than s^n term functions
  // exist.
  kColumns,
  // Candidate sets in colexicographic order of encoded tuples, closing each.
  kSubsets,
};

struct MinimumGeneratingSet {
  std::uint64_t size = 0;
  // A generating set of that size, sorted.
  std::vector<TupleCode> witness;
  // Number of candidate sets examined.
  std::uint64_t candidates = 0;
};

// d_A(n): the least size of a generating set of A^n. Searches g = 0, 1, ...
// and returns the first success, which is therefore minimal.
// Throws BudgetExceeded carrying the best upper bound known when a limit is
// hit before the search finishes.
MinimumGeneratingSet d_exact(const FiniteAlgebra& alg, std::uint32_t n,
                             const Budget& budget = {},
                             GeneratingSearch method = GeneratingSearch::kColumns);

enum class SubuniverseEnumeration {
  // Exhaustive when s^n <= budget.exhaustive_subset_cap, else bottom-up.
  kAuto,
  // Distinct closures of all nonempty subsets of A^n.
  kExhaustive,
  // Start from 1-generated subuniverses and repeatedly adjoin one element.
  kBottomUp,
};

// All nonempty subuniverses of A^n, ordered by cardinality and then by
// member codes.
std::vector<Subuniverse> all_subuniverses(
    const FiniteAlgebra& alg, std::uint32_t n, const Budget& budget = {},
    SubuniverseEnumeration mode = SubuniverseEnumeration::kAuto);

// The maximal proper nonempty subuniverses of A^n, in the same order.
std::vector<Subuniverse> maximal_subuniverses(
    const FiniteAlgebra& alg, std::uint32_t n, const Budget& budget = {},
    SubuniverseEnumeration mode = SubuniverseEnumeration::kAuto);

// Whether the proper subuniverse `m` is maximal: close(M ∪ {x}) = A^n for
// every x outside M.
bool is_maximal(const FiniteAlgebra& alg, const Subuniverse& m,
                const Budget& budget = {});

}  // namespace wiegold
