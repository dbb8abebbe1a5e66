#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wiegold/algebra.hpp"
#include "wiegold/budget.hpp"

namespace wiegold {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parameters of the k-surjective matrix construction over an alphabet of
/// size b. Requires b >= 2 and n >= k >= 2.
struct CoveringParams {
  std::uint32_t b;
  std::uint32_t k;
  std::uint32_t n;
  std::uint64_t g;

  // Throws ContractError unless b > 1 and n >= k > 1.
  void validate() const;
  // u = b^k / (b^k - 1), exact.
  [[nodiscard]] Rational u() const;
};

/// g x n matrix over the alphabet {0..b-1}, row-major.
class AlphabetMatrix {
 public:
  AlphabetMatrix(std::uint64_t rows, std::uint32_t cols, std::uint32_t alphabet,
                 std::vector<std::uint32_t> entries);

  [[nodiscard]] std::uint64_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::uint32_t cols() const noexcept { return cols_; }
  [[nodiscard]] std::uint32_t alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] std::uint32_t at(std::uint64_t i, std::uint32_t j) const {
    return entries_[i * cols_ + j];
  }
  [[nodiscard]] std::span<const std::uint32_t> row(std::uint64_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  // The g x k minor on the given increasing columns.
  [[nodiscard]] AlphabetMatrix minor(std::span<const std::uint32_t> columns) const;

  friend bool operator==(const AlphabetMatrix&, const AlphabetMatrix&) = default;

 private:
  std::uint64_t rows_;
  std::uint32_t cols_;
  std::uint32_t alphabet_;
  std::vector<std::uint32_t> entries_;
};

// Matrix file: first line `g n b`, then g lines of n symbols.
AlphabetMatrix parse_matrix(std::string_view text);
std::string to_string(const AlphabetMatrix& m);

// g = ⌈k·log_u(n) + log_u(b^k/k!)⌉. Evaluated in long double; when the
// value lies within 2^-30 of an integer N the ceiling is decided exactly by
// comparing u^N with n^k·b^k/k! in integers.
std::uint64_t row_bound(std::uint32_t b, std::uint32_t k, std::uint32_t n);

// Whether the rows of a g x k matrix miss some word of B^k.
bool is_bad_minor(const AlphabetMatrix& minor);

struct SurjectivityCheck {
  bool surjective;
  // First bad column selection in lexicographic order, if any.
  std::optional<std::vector<std::uint32_t>> witness;
};

// Checks all C(n,k) increasing column selections.
SurjectivityCheck verify_k_surjective(const AlphabetMatrix& m, std::uint32_t k);

// C(n,k)·b^k·(b^k-1)^g·b^(-gk), exact. This is the expected number of bad
// minors bound for a uniformly random g x n matrix, and the starting value
// of the greedy estimator.
Rational expected_bad_minors(std::uint32_t b, std::uint32_t k, std::uint32_t n,
                             std::uint64_t g);

struct RandomConstruction {
  AlphabetMatrix matrix;
  std::uint32_t attempts;  // 1-based index of the successful attempt
};

// Uniform sampling plus verification. Attempt a (0-based) fills the matrix
// row-major from std::mt19937_64 seeded with splitmix64(seed + a); each
// symbol is a 64-bit draw reduced mod b after rejecting the top partial
// range, so output is identical on every platform.
// Throws BudgetExceeded (quoting the expected-bad-minor bound) when all
// attempts fail.
RandomConstruction random_construct(std::uint32_t b, std::uint32_t k,
                                    std::uint32_t n, std::uint64_t g,
                                    std::uint64_t seed,
                                    std::uint32_t max_attempts);

// Method of conditional expectations on the union bound: entries are fixed
// row-major, each to the symbol minimising
//   Σ_σ Σ_{v ∈ B^k} Π_i P(row i of the σ-minor ≠ v | fixed entries),
// ties to the smallest symbol. Requires expected_bad_minors(...) < 1 and
// asserts k-surjectivity of the result.
AlphabetMatrix greedy_construct(std::uint32_t b, std::uint32_t k,
                                std::uint32_t n, std::uint64_t g);

enum class CoveringMethod { kRandom, kGreedy };

struct LiftResult {
  std::vector<Element> alphabet;  // B, sorted
  AlphabetMatrix matrix;          // over indices into B
  std::vector<TupleCode> generators;  // rows read as tuples of A^n, sorted
};

struct LiftOptions {
  CoveringMethod method = CoveringMethod::kGreedy;
  std::uint64_t seed = 0;
  std::uint32_t max_attempts = 100;
};

// From a generating set H of A^k, a set G ⊆ B^n whose generated subuniverse
// projects onto every k coordinates of A^n, B the elements occurring in H.
// The projection property is verified by closure before returning.
LiftResult lift_to_power(const FiniteAlgebra& alg,
                         std::span<const TupleCode> h, std::uint32_t k,
                         std::uint32_t n, const LiftOptions& options = {},
                         const Budget& budget = {});

}  // namespace wiegold
