#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wiegold {

// Elements of a finite algebra of size s are the indices 0..s-1.
using Element = std::uint32_t;
// Mixed-radix code of a tuple in A^n, first coordinate most significant.
using TupleCode = std::uint64_t;

// Largest universe this library accepts. Closure engines pack tuples into
// bytes.
inline constexpr std::uint32_t kMaxUniverse = 256;

// Multiplies with overflow detection; returns nullopt on overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp);

/// A basic operation given by its full table. Arguments are encoded
/// row-major with the first argument most significant, so for a binary
/// operation the entry for (a, b) sits at index a * s + b.
class OperationTable {
 public:
  OperationTable(std::string symbol, std::uint32_t arity,
                 std::vector<Element> table);

  // Tabulates `f` over all argument tuples of a universe of size `size`.
  static OperationTable from_function(
      std::string symbol, std::uint32_t arity, std::uint32_t size,
      const std::function<Element(std::span<const Element>)>& f);

  [[nodiscard]] const std::string& symbol() const noexcept { return symbol_; }
  [[nodiscard]] std::uint32_t arity() const noexcept { return arity_; }
  [[nodiscard]] std::span<const Element> table() const noexcept {
    return table_;
  }
  [[nodiscard]] Element at(std::size_t row) const { return table_[row]; }

 private:
  std::string symbol_;
  std::uint32_t arity_;
  std::vector<Element> table_;
};

/// A finite algebra: universe {0..size-1} and a list of operation tables.
/// Immutable after construction; the constructor validates every table.
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::string name, std::uint32_t size,
                std::vector<OperationTable> operations,
                std::vector<std::string> labels = {});

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] std::uint32_t size() const noexcept { return size_; }
  [[nodiscard]] const std::vector<OperationTable>& operations() const noexcept {
    return operations_;
  }
  [[nodiscard]] const OperationTable& operation(std::size_t index) const;
  [[nodiscard]] std::size_t operation_count() const noexcept {
    return operations_.size();
  }
  // Index of the operation with this symbol, if any.
  [[nodiscard]] std::optional<std::size_t> find_operation(
      std::string_view symbol) const;
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept {
    return labels_;
  }
  // Values of the nullary operations, in operation order (may repeat).
  [[nodiscard]] std::vector<Element> constants() const;
  // True when every operation satisfies f(a, ..., a) = a.
  [[nodiscard]] bool is_idempotent() const;
  [[nodiscard]] std::uint32_t max_arity() const noexcept;

  // Table lookup. Throws ContractError on arity mismatch or an
  // out-of-range element.
  [[nodiscard]] Element apply(std::size_t op,
                              std::span<const Element> args) const;

 private:
  std::string name_;
  std::uint32_t size_;
  std::vector<OperationTable> operations_;
  std::vector<std::string> labels_;
};

/// Bijection between A^n and [0, s^n), first coordinate most significant.
class PowerCodec {
 public:
  // Throws ContractError when s^n does not fit in 64 bits.
  PowerCodec(std::uint32_t size, std::uint32_t width);

  [[nodiscard]] std::uint32_t base() const noexcept { return base_; }
  [[nodiscard]] std::uint32_t width() const noexcept { return width_; }
  // s^n
  [[nodiscard]] std::uint64_t cardinality() const noexcept { return card_; }

  [[nodiscard]] TupleCode encode(std::span<const Element> tuple) const;
  void decode(TupleCode code, std::span<Element> out) const;
  [[nodiscard]] std::vector<Element> decode(TupleCode code) const;
  // Coordinate i (0-based) of the tuple with this code.
  [[nodiscard]] Element coordinate(TupleCode code, std::uint32_t i) const;
  // Code of the constant tuple (a, ..., a).
  [[nodiscard]] TupleCode constant(Element a) const;

 private:
  std::uint32_t base_;
  std::uint32_t width_;
  std::uint64_t card_;
  std::vector<std::uint64_t> place_;  // place_[i] = s^(n-1-i)
};

// Componentwise application of operation `op` to tuples of A^n.
TupleCode power_apply(const FiniteAlgebra& alg, const PowerCodec& codec,
                      std::size_t op, std::span<const TupleCode> args);

/// An equivalence relation on {0..size-1} given by block ids. Block ids are
/// canonical: numbered 0, 1, ... in order of first occurrence.
class Partition {
 public:
  // Equality relation on `size` points.
  explicit Partition(std::uint32_t size);
  // Canonicalises arbitrary labels.
  explicit Partition(std::span<const std::uint32_t> labels);

  static Partition full(std::uint32_t size);

  [[nodiscard]] std::uint32_t size() const noexcept {
    return static_cast<std::uint32_t>(block_of_.size());
  }
  [[nodiscard]] std::uint32_t block_count() const noexcept {
    return block_count_;
  }
  [[nodiscard]] std::uint32_t block(Element a) const { return block_of_[a]; }
  [[nodiscard]] std::span<const std::uint32_t> block_ids() const noexcept {
    return block_of_;
  }
  [[nodiscard]] bool related(Element a, Element b) const {
    return block_of_[a] == block_of_[b];
  }
  [[nodiscard]] bool is_equality() const noexcept {
    return block_count_ == size();
  }
  [[nodiscard]] bool is_full() const noexcept { return block_count_ <= 1; }
  // Blocks as sorted element lists, ordered by block id.
  [[nodiscard]] std::vector<std::vector<Element>> blocks() const;
  // Smallest element of each block, indexed by block id.
  [[nodiscard]] std::vector<Element> representatives() const;
  // this ⊆ other as relations.
  [[nodiscard]] bool refines(const Partition& other) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::uint32_t> block_of_;
  std::uint32_t block_count_ = 0;
};

// Whether the partition is compatible with every operation of `alg`.
bool is_compatible(const FiniteAlgebra& alg, const Partition& partition);

/// A congruence: a partition validated as compatible with an algebra.
class Congruence {
 public:
  // Throws ContractError if `partition` is not compatible with `alg`.
  Congruence(const FiniteAlgebra& alg, Partition partition);

  static Congruence equality(const FiniteAlgebra& alg);
  static Congruence full(const FiniteAlgebra& alg);

  [[nodiscard]] const Partition& partition() const noexcept {
    return partition_;
  }
  [[nodiscard]] bool related(Element a, Element b) const {
    return partition_.related(a, b);
  }
  [[nodiscard]] bool is_equality() const noexcept {
    return partition_.is_equality();
  }
  [[nodiscard]] bool is_full() const noexcept { return partition_.is_full(); }

  friend bool operator==(const Congruence&, const Congruence&) = default;

 private:
  struct Unchecked {};
  Congruence(Unchecked, Partition partition)
      : partition_(std::move(partition)) {}
  friend Congruence make_congruence_unchecked(Partition);

  Partition partition_;
};

// For internal producers that construct congruences by a compatible
// construction (cg). Not validated.
Congruence make_congruence_unchecked(Partition partition);

struct Quotient {
  FiniteAlgebra algebra;
  // natural_map[a] = block of a = element of the quotient.
  std::vector<Element> natural_map;
};

// A/θ. Tables are read off block representatives; compatibility makes them
// independent of the choice.
Quotient quotient(const FiniteAlgebra& alg, const Congruence& cong);

struct Subalgebra {
  FiniteAlgebra algebra;
  // embedding[i] = element of the parent algebra that is element i here.
  std::vector<Element> embedding;
};

// The subalgebra on a subuniverse of A. Throws ContractError if `subset`
// is empty or not closed.
Subalgebra restrict_to(const FiniteAlgebra& alg,
                       std::span<const Element> subset);

// The one-element algebra with the same signature as `alg`.
FiniteAlgebra trivial_like(const FiniteAlgebra& alg, std::string name);

// Algebra file format (JSON): name, size, optional labels, operations with
// symbol/arity/table. Throws ParseError with the offending field.
FiniteAlgebra parse_algebra_json(std::string_view text);
FiniteAlgebra load_algebra_file(const std::string& path);
std::string to_json(const FiniteAlgebra& alg);

}  // namespace wiegold
