#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wiegold/algebra.hpp"

namespace wiegold {

/// A term over the signature of an algebra. Leaves are variables x1, x2, ...
/// (stored 0-based) or constant elements; inner nodes apply an operation,
/// referenced by its index in the algebra. Subterms are shared, so terms
/// reconstructed from closures stay compact.
class Term {
 public:
  enum class Kind { kVariable, kConstant, kOperation };

  static Term variable(std::uint32_t index);
  static Term constant(Element value);
  static Term operation(std::size_t op, std::vector<Term> children);

  [[nodiscard]] Kind kind() const noexcept { return node_->kind; }
  // Variable index, constant value or operation index.
  [[nodiscard]] std::uint32_t index() const noexcept { return node_->index; }
  [[nodiscard]] std::span<const Term> children() const noexcept {
    return node_->children;
  }
  // One more than the largest variable index used (0 for ground terms).
  [[nodiscard]] std::uint32_t variable_bound() const noexcept {
    return node_->variable_bound;
  }
  [[nodiscard]] const void* identity() const noexcept { return node_.get(); }

 private:
  struct Node {
    Kind kind;
    std::uint32_t index;
    std::vector<Term> children;
    std::uint32_t variable_bound;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Checks operation indices, arities and constant ranges against `alg`.
void validate_term(const FiniteAlgebra& alg, const Term& term);

// Evaluates at one assignment (assignment[i] is the value of x{i+1}).
// Throws ContractError for an unbound variable.
Element eval_term(const FiniteAlgebra& alg, const Term& term,
                  std::span<const Element> assignment);

// Evaluates at many assignments at once: columns[i][t] is the value of
// x{i+1} in assignment t; the result has one entry per assignment.
std::vector<Element> eval_term_batch(
    const FiniteAlgebra& alg, const Term& term,
    std::span<const std::vector<Element>> columns);

// Prefix notation: `(+ x1 (+ x2 x3))`, constants `#3`, nullary operation
// symbols bare or parenthesised.
Term parse_term(const FiniteAlgebra& alg, std::string_view text);
std::string to_string(const FiniteAlgebra& alg, const Term& term);

}  // namespace wiegold
