#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wiegold/algebra.hpp"
#include "wiegold/budget.hpp"
#include "wiegold/covering.hpp"
#include "wiegold/cube_terms.hpp"

namespace wiegold {

struct GrowthPoint {
  std::uint32_t n = 0;
  std::uint64_t d = 0;
  // True when d is the minimum; false when it is an upper bound taken from
  // a generating set found after the exact search ran out of budget.
  bool proved = true;
};

struct GrowthCurve {
  std::string algebra;
  std::vector<GrowthPoint> points;  // n strictly increasing
};

// d_A(n) for n = 1..n_max. When d_exact exceeds the budget the point is
// filled from the dichotomy construction (if a cube witness up to k_max
// exists) and marked unproved; if no bound is available the curve stops.
GrowthCurve growth_curve(const FiniteAlgebra& alg, std::uint32_t n_max,
                         const Budget& budget = {}, std::uint32_t k_max = 3);

struct DichotomyCertificate {
  CubeWitness witness;
  std::uint32_t n = 0;
  std::uint32_t k_prime = 0;  // max(3, k)
  bool perfect = false;
  bool modularity_verified = false;
  std::vector<TupleCode> h;       // generating set of A^{k'} (or of A^n when n < k')
  std::vector<TupleCode> g_pi;
  std::vector<TupleCode> g_eta;
  std::vector<TupleCode> g;       // sorted union
  std::vector<std::string> transcript;
};

// G_π ∪ G_η for A^n. G_π lifts a generating set H of A^{k'} through a
// k'-surjective matrix; G_η lifts a greedy generating set of (A/[1,1])^n
// along smallest block representatives and is empty when A is perfect.
// The union is re-verified by closure; failure throws VerificationFailure.
DichotomyCertificate build_dichotomy_generating_set(
    const FiniteAlgebra& alg, std::uint32_t n, const CubeWitness& witness,
    const LiftOptions& options = {}, const Budget& budget = {});

enum class GrowthClass { kLogarithmic, kLinear, kNoCubeWitness };

struct Classification {
  GrowthClass kind = GrowthClass::kNoCubeWitness;
  std::optional<CubeWitness> witness;
  bool perfect = false;
  bool modularity_verified = false;
};

Classification classify_growth(const FiniteAlgebra& alg, std::uint32_t k_max = 3,
                               const Budget& budget = {});

std::string to_string(GrowthClass c);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double residual = 0;  // Euclidean norm of the residual vector
};

struct FitReport {
  LinearFit logarithmic;  // d ≈ c1·ln n + c0
  LinearFit linear;       // d ≈ c1·n + c0
  // Constant curve or fewer than two points; no model is preferred.
  bool degenerate = false;
  // "logarithmic", "linear" or "none".
  std::string better;
};

FitReport fit_report(const GrowthCurve& curve);

}  // namespace wiegold
