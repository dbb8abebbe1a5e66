#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wiegold/algebra.hpp"
#include "wiegold/budget.hpp"
#include "wiegold/term.hpp"

namespace wiegold {

struct FrameCell {
  enum class Kind { kTarget, kVariable, kConstant };
  Kind kind = Kind::kTarget;
  // Variable number (y1 -> 1) or constant element.
  std::uint32_t value = 0;

  static FrameCell target() { return {Kind::kTarget, 0}; }
  static FrameCell var(std::uint32_t v) { return {Kind::kVariable, v}; }
  static FrameCell constant(Element e) { return {Kind::kConstant, e}; }
  friend bool operator==(const FrameCell&, const FrameCell&) = default;
};

/// The identity array F(M) ≈ (x, ..., x): k rows, m columns. Every column
/// must contain a cell other than the target x.
class CubeFrame {
 public:
  // Throws ContractError on ragged rows or a column consisting only of x.
  CubeFrame(std::string name, std::vector<std::vector<FrameCell>> rows);

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] const std::vector<std::vector<FrameCell>>& rows() const noexcept {
    return rows_;
  }
  // Number of identities (rows).
  [[nodiscard]] std::uint32_t k() const noexcept {
    return static_cast<std::uint32_t>(rows_.size());
  }
  // Arity of F (columns).
  [[nodiscard]] std::uint32_t m() const noexcept {
    return static_cast<std::uint32_t>(rows_.front().size());
  }
  // Number of distinct constants.
  [[nodiscard]] std::uint32_t pointedness() const noexcept;
  // Distinct named variables in increasing order.
  [[nodiscard]] std::vector<std::uint32_t> named_variables() const;

 private:
  std::string name_;
  std::vector<std::vector<FrameCell>> rows_;
};

CubeFrame maltsev_frame();
CubeFrame majority_frame();
// Row i has y in column i and x elsewhere (k >= 3).
CubeFrame near_unanimity_frame(std::uint32_t k);
// k rows, k+1 columns: (y,y,x,...), (y,x,y,x,...), then y in column i+1 of
// row i (k >= 2).
CubeFrame edge_frame(std::uint32_t k);
// Columns are all patterns in {x,y}^k other than x^k.
CubeFrame full_cube_frame(std::uint32_t k);

// Frame text: one row per line, cells `x`, `y1`, `y2`, ..., `#e`. A bare `y`
// means y1. Blank lines and lines starting with '%' are ignored.
CubeFrame parse_frame(std::string_view text, std::string name = "frame");
CubeFrame load_frame_file(const std::string& path);
std::string to_string(const CubeFrame& frame);

// Whether `term` satisfies every row identity of `frame` for every
// assignment of A to the frame's variables (no idempotence assumed).
bool satisfies_frame(const FiniteAlgebra& alg, const Term& term,
                     const CubeFrame& frame);

// Decides whether some term realizes `frame` by closing the column
// generators inside A^D, D = rows x assignments, and checking whether the
// target tuple is reached. The term is rebuilt from closure provenance and
// re-checked with satisfies_frame before being returned.
std::optional<Term> find_frame_witness(const FiniteAlgebra& alg,
                                       const CubeFrame& frame,
                                       const Budget& budget = {});

struct CubeWitness {
  Term term;
  CubeFrame frame;
  // Number of rows: the witness is a 0-pointed k-cube term.
  [[nodiscard]] std::uint32_t k() const noexcept { return frame.k(); }
};

// 0-pointed frames in increasing k up to k_max: Maltsev (k = 2), then for
// each k >= 3 the near-unanimity and edge frames. `extended` appends the
// full cube frame after each k.
std::vector<CubeFrame> default_catalog(std::uint32_t k_max,
                                       bool extended = false);

// First frame of the catalog (in order) that has a witness.
std::optional<CubeWitness> cube_witness(const FiniteAlgebra& alg,
                                        std::uint32_t k_max,
                                        const Budget& budget = {});
std::optional<CubeWitness> cube_witness(const FiniteAlgebra& alg,
                                        const std::vector<CubeFrame>& catalog,
                                        const Budget& budget = {});

}  // namespace wiegold
