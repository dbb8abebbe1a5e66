#pragma once

// Worklist closure of a set of tuples of A^w under the componentwise
// operations of A. Shared by subuniverse generation, the commutator
// matrix algebra, free-algebra construction and term search.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wiegold/algebra.hpp"

namespace wiegold::detail {

// Open-addressing set of member indices keyed by the bytes of the member.
class TupleIndex {
 public:
  explicit TupleIndex(std::uint32_t width) : width_(width) { rehash(64); }

  // Returns the index of `tuple` among `storage`, or UINT32_MAX.
  [[nodiscard]] std::uint32_t find(const std::uint8_t* tuple,
                                   const std::vector<std::uint8_t>& storage,
                                   std::uint64_t hash) const;
  void insert(std::uint32_t index, const std::vector<std::uint8_t>& storage,
              std::uint64_t hash);
  [[nodiscard]] std::uint64_t hash(const std::uint8_t* tuple) const;

 private:
  void rehash(std::size_t capacity);

  std::uint32_t width_;
  std::size_t count_ = 0;
  std::vector<std::uint32_t> slots_;
  std::vector<std::uint64_t> hashes_;  // hash of member i
};

class ClosureEngine {
 public:
  struct Options {
    std::uint64_t max_members = std::uint64_t{1} << 24;
    bool record_provenance = false;
    // Stop as soon as this tuple becomes a member.
    std::optional<std::vector<std::uint8_t>> target;
  };

  // How member i entered the closure.
  struct Provenance {
    // Operation index, or -1 for a generator.
    std::int32_t op;
    // Generator index when op == -1; otherwise member indices of the args.
    std::span<const std::uint32_t> args;
  };

  ClosureEngine(const FiniteAlgebra& alg, std::uint32_t width, Options options);

  // Adds a generator; duplicates are ignored. Must precede run().
  void add_generator(std::span<const std::uint8_t> tuple);

  // Computes the closure (or stops once the target is reached). Returns
  // whether the target is a member. Throws BudgetExceeded.
  bool run();

  [[nodiscard]] std::uint32_t width() const noexcept { return width_; }
  [[nodiscard]] std::size_t size() const noexcept { return count_; }
  [[nodiscard]] std::span<const std::uint8_t> member(std::size_t i) const {
    return {storage_.data() + i * width_, width_};
  }
  [[nodiscard]] std::optional<std::uint32_t> index_of(
      std::span<const std::uint8_t> tuple) const;
  [[nodiscard]] Provenance provenance(std::size_t i) const;

 private:
  // Inserts the tuple in scratch_; returns true if new.
  bool insert_scratch(std::int32_t op, std::span<const std::uint32_t> args);
  void process(std::uint32_t i);

  const FiniteAlgebra& alg_;
  std::uint32_t width_;
  Options options_;
  std::vector<std::uint8_t> storage_;
  std::size_t count_ = 0;
  TupleIndex index_;
  std::vector<std::uint8_t> scratch_;
  std::vector<std::int32_t> prov_op_;
  std::vector<std::uint32_t> prov_args_;
  std::vector<std::size_t> prov_offset_;
  std::size_t generator_count_ = 0;
  bool seeded_ = false;
  bool target_hit_ = false;
};

}  // namespace wiegold::detail
