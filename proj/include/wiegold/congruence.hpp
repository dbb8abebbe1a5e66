#pragma once

#include <span>
#include <utility>
#include <vector>

#include "wiegold/algebra.hpp"
#include "wiegold/budget.hpp"

namespace wiegold {

// Cg(pairs): the least congruence containing `pairs`.
Congruence cg(const FiniteAlgebra& alg,
              std::span<const std::pair<Element, Element>> pairs);

struct Commutator {
  Congruence value;
  // False when no cube-term witness vouched for congruence modularity; the
  // matrix formula for [1,1] is only meaningful in that setting.
  bool modularity_verified;
};

// [1,1] via the four-column matrix algebra
//   M(1,1) = Sg{(a,a,b,b), (u,v,u,v) : a,b,u,v in A} <= A^4,
//   [1,1] = Cg{(m3,m4) : m in M(1,1), m1 = m2}.
// `has_cube_witness` records whether the caller verified a cube term.
Commutator commutator_11(const FiniteAlgebra& alg, bool has_cube_witness,
                         const Budget& budget = {});

bool is_abelian(const FiniteAlgebra& alg, const Budget& budget = {});

// [1,1] = 1. Equivalent to having no nontrivial abelian quotient in the
// congruence modular setting.
bool is_perfect(const FiniteAlgebra& alg, const Budget& budget = {});

// A and A/[1,1] are simple when their only congruences are 0 and 1.
bool is_simple(const FiniteAlgebra& alg);

struct Abelianization {
  FiniteAlgebra algebra;          // A/[1,1]
  std::vector<Element> eta;       // natural map A -> A/[1,1]
  bool modularity_verified;

  // η applied coordinatewise to a tuple of A^n, codes in and out.
  [[nodiscard]] TupleCode map_tuple(const PowerCodec& from,
                                    const PowerCodec& to,
                                    TupleCode code) const;
};

Abelianization abelianization(const FiniteAlgebra& alg, bool has_cube_witness,
                              const Budget& budget = {});

}  // namespace wiegold
