#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wiegold/algebra.hpp"
#include "wiegold/budget.hpp"
#include "wiegold/closure.hpp"
#include "wiegold/congruence.hpp"

namespace wiegold {

// Coordinate sets are sorted lists of 0-based coordinates.
using CoordinateSet = std::vector<std::uint32_t>;

// π_U(R) as a relation of width |U| (coordinates in the order of U).
Relation project(const Relation& r, const CoordinateSet& u);

// π_U(M) ≠ A^U.
bool is_support(const Relation& m, const CoordinateSet& u);

// The unique minimal support of a maximal subuniverse, found by dropping
// coordinates greedily. For n <= 6 all subsets are also searched to confirm
// uniqueness. Throws ContractError when M has no support (M = A^n), when a
// second minimal support exists, or when M ≠ M_U × A^{[n]∖U}; the latter two
// mean M was not maximal.
CoordinateSet minimal_support(const Relation& m);

// M = π_U^{-1}(π_U(M)).
bool is_induced_by_projection(const Relation& m, const CoordinateSet& u);

// M = φ^{-1}(φ(M)) for the coordinatewise map φ = η^n.
bool is_induced_by_map(const Relation& m, const std::vector<Element>& eta,
                       std::uint32_t image_size);

struct ParallelogramWitness {
  CoordinateSet s;        // coordinates of the a/b part
  TupleCode au, av, bv;   // members
  TupleCode bu;           // the missing tuple
};

// Whether for every bipartition {S,T} of the coordinates, au, av, bv ∈ R
// forces bu ∈ R. Returns the first counterexample: bipartitions with S
// containing coordinate 0 by increasing mask of the other coordinates, then
// a, u, v, b in increasing code order.
std::optional<ParallelogramWitness> parallelogram_violation(const Relation& r);
bool has_parallelogram(const Relation& r);

struct Bipartition {
  CoordinateSet u;
  CoordinateSet v;
};

// First {U,V} (U containing coordinate 0) with R = π_U(R) × π_V(R).
std::optional<Bipartition> is_directly_decomposable(const Relation& r);

// Maximality is the caller's precondition. Returns direct indecomposability
// and cross-checks it against "the minimal support is [n]"; disagreement
// throws VerificationFailure.
bool is_critical_maximal(const Relation& m);

struct CoordinateKernels {
  // A_i = π_i(R) as subalgebras of A.
  std::vector<Subalgebra> factors;
  // θ_i on A_i.
  std::vector<Congruence> kernels;
};

// θ_i = {(a,b) : a c, b c ∈ R for some c}. Requires the parallelogram
// property; throws ContractError if some θ_i is not transitive.
CoordinateKernels coordinate_kernels(const FiniteAlgebra& alg,
                                     const Relation& r);

struct Reduction {
  CoordinateKernels kernels;
  // A_i / θ_i
  std::vector<FiniteAlgebra> quotients;
  // ψ(R) as sorted tuples of block ids.
  std::vector<std::vector<Element>> members;
};

// R̄ = ψ(R) ⊆ ∏ A_i/θ_i, with R = ψ^{-1}(R̄) verified before return.
Reduction reduction(const FiniteAlgebra& alg, const Relation& r);

struct InducedBranch {
  enum class Kind { kProjection, kAbelianization, kNeither };
  Kind kind;
  CoordinateSet support;  // minimal support of M
};

struct DichotomyReport {
  std::uint32_t n = 0;
  std::uint32_t cube_k = 0;
  std::uint32_t projection_bound = 0;  // max(3, k)
  bool modularity_verified = false;
  std::vector<Relation> maximal;
  std::vector<InducedBranch> branches;  // one per maximal subuniverse
  [[nodiscard]] bool pass() const;
};

// For every maximal subuniverse M of A^n: is M induced by a projection onto
// fewer than max(3, k) coordinates (branch π), or by η: A^n → (A/[1,1])^n
// (branch η)? Branch π is preferred when both hold.
DichotomyReport verify_theorem_induced(const FiniteAlgebra& alg,
                                       std::uint32_t n, std::uint32_t cube_k,
                                       bool has_cube_witness,
                                       const Budget& budget = {});

}  // namespace wiegold
