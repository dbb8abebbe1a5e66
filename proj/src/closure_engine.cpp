#include "closure_engine.hpp"

#include <cstring>

#include "wiegold/errors.hpp"

namespace wiegold::detail {

std::uint64_t TupleIndex::hash(const std::uint8_t* tuple) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  std::uint32_t i = 0;
  for (; i + 8 <= width_; i += 8) {
    std::uint64_t chunk;
    std::memcpy(&chunk, tuple + i, 8);
    h ^= chunk;
    h *= 0x9E3779B97F4A7C15ULL;
    h ^= h >> 29;
  }
  for (; i < width_; ++i) {
    h ^= tuple[i];
    h *= 0x100000001b3ULL;
  }
  h ^= h >> 32;
  return h;
}

std::uint32_t TupleIndex::find(const std::uint8_t* tuple,
                               const std::vector<std::uint8_t>& storage,
                               std::uint64_t h) const {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t pos = h & mask;; pos = (pos + 1) & mask) {
    const std::uint32_t idx = slots_[pos];
    if (idx == UINT32_MAX) return UINT32_MAX;
    if (hashes_[idx] == h &&
        std::memcmp(storage.data() + std::size_t{idx} * width_, tuple,
                    width_) == 0) {
      return idx;
    }
  }
}

void TupleIndex::insert(std::uint32_t index,
                        const std::vector<std::uint8_t>& storage,
                        std::uint64_t h) {
  (void)storage;
  if (hashes_.size() <= index) hashes_.resize(index + 1);
  hashes_[index] = h;
  if (2 * (count_ + 1) > slots_.size()) rehash(slots_.size() * 2);
  const std::size_t mask = slots_.size() - 1;
  std::size_t pos = h & mask;
  while (slots_[pos] != UINT32_MAX) pos = (pos + 1) & mask;
  slots_[pos] = index;
  ++count_;
}

void TupleIndex::rehash(std::size_t capacity) {
  std::vector<std::uint32_t> old = std::move(slots_);
  slots_.assign(capacity, UINT32_MAX);
  const std::size_t mask = capacity - 1;
  for (std::uint32_t idx : old) {
    if (idx == UINT32_MAX) continue;
    std::size_t pos = hashes_[idx] & mask;
    while (slots_[pos] != UINT32_MAX) pos = (pos + 1) & mask;
    slots_[pos] = idx;
  }
}

ClosureEngine::ClosureEngine(const FiniteAlgebra& alg, std::uint32_t width,
                             Options options)
    : alg_(alg),
      width_(width),
      options_(std::move(options)),
      index_(width),
      scratch_(width) {
  if (options_.target && options_.target->size() != width_) {
    throw ContractError("closure target has the wrong width");
  }
}

void ClosureEngine::add_generator(std::span<const std::uint8_t> tuple) {
  if (seeded_) throw ContractError("generators must precede run()");
  if (tuple.size() != width_) {
    throw ContractError("generator has the wrong width");
  }
  std::memcpy(scratch_.data(), tuple.data(), width_);
  const auto gen = static_cast<std::uint32_t>(generator_count_++);
  insert_scratch(-1, std::span<const std::uint32_t>(&gen, 1));
}

std::optional<std::uint32_t> ClosureEngine::index_of(
    std::span<const std::uint8_t> tuple) const {
  if (tuple.size() != width_) return std::nullopt;
  const auto h = index_.hash(tuple.data());
  const auto idx = index_.find(tuple.data(), storage_, h);
  if (idx == UINT32_MAX) return std::nullopt;
  return idx;
}

ClosureEngine::Provenance ClosureEngine::provenance(std::size_t i) const {
  if (!options_.record_provenance) {
    throw ContractError("closure was run without provenance");
  }
  const std::size_t begin = prov_offset_[i];
  const std::size_t end =
      i + 1 < prov_offset_.size() ? prov_offset_[i + 1] : prov_args_.size();
  return Provenance{prov_op_[i], std::span<const std::uint32_t>(
                                     prov_args_.data() + begin, end - begin)};
}

bool ClosureEngine::insert_scratch(std::int32_t op,
                                   std::span<const std::uint32_t> args) {
  const auto h = index_.hash(scratch_.data());
  if (index_.find(scratch_.data(), storage_, h) != UINT32_MAX) return false;
  if (count_ >= options_.max_members) {
    throw BudgetExceeded("closure exceeded " +
                         std::to_string(options_.max_members) + " members");
  }
  storage_.insert(storage_.end(), scratch_.begin(), scratch_.end());
  index_.insert(static_cast<std::uint32_t>(count_), storage_, h);
  ++count_;
  if (options_.record_provenance) {
    prov_offset_.push_back(prov_args_.size());
    prov_op_.push_back(op);
    prov_args_.insert(prov_args_.end(), args.begin(), args.end());
  }
  if (options_.target &&
      std::memcmp(scratch_.data(), options_.target->data(), width_) == 0) {
    target_hit_ = true;
  }
  return true;
}

void ClosureEngine::process(std::uint32_t i) {
  const std::uint32_t s = alg_.size();
  std::vector<std::uint32_t> args;
  std::vector<const std::uint8_t*> rows;
  for (std::size_t op = 0; op < alg_.operation_count(); ++op) {
    const auto& table = alg_.operation(op);
    const std::uint32_t m = table.arity();
    if (m == 0) continue;
    const auto entries = table.table();
    args.assign(m, 0);
    rows.assign(m, nullptr);
    // Every argument tuple over members 0..i that uses i, enumerated once:
    // p is the first position holding i.
    for (std::uint32_t p = 0; p < m; ++p) {
      if (i == 0 && p > 0) break;
      for (std::uint32_t j = 0; j < m; ++j) args[j] = 0;
      args[p] = i;
      for (;;) {
        for (std::uint32_t j = 0; j < m; ++j) {
          rows[j] = storage_.data() + std::size_t{args[j]} * width_;
        }
        if (m == 1) {
          for (std::uint32_t c = 0; c < width_; ++c) {
            scratch_[c] = static_cast<std::uint8_t>(entries[rows[0][c]]);
          }
        } else if (m == 2) {
          for (std::uint32_t c = 0; c < width_; ++c) {
            scratch_[c] = static_cast<std::uint8_t>(
                entries[std::size_t{rows[0][c]} * s + rows[1][c]]);
          }
        } else {
          for (std::uint32_t c = 0; c < width_; ++c) {
            std::size_t r = 0;
            for (std::uint32_t j = 0; j < m; ++j) r = r * s + rows[j][c];
            scratch_[c] = static_cast<std::uint8_t>(entries[r]);
          }
        }
        insert_scratch(static_cast<std::int32_t>(op), args);
        if (target_hit_) return;
        // Advance the odometer over positions other than p.
        bool advanced = false;
        for (std::uint32_t j = m; j-- > 0;) {
          if (j == p) continue;
          const std::uint32_t limit = j < p ? i : i + 1;
          if (++args[j] < limit) {
            advanced = true;
            break;
          }
          args[j] = 0;
        }
        if (!advanced) break;
      }
    }
  }
}

bool ClosureEngine::run() {
  if (!seeded_) {
    seeded_ = true;
    for (std::size_t op = 0; op < alg_.operation_count(); ++op) {
      const auto& table = alg_.operation(op);
      if (table.arity() != 0) continue;
      std::memset(scratch_.data(), static_cast<int>(table.at(0)), width_);
      insert_scratch(static_cast<std::int32_t>(op), {});
    }
  }
  if (target_hit_) return true;
  for (std::uint32_t i = 0; i < count_; ++i) {
    process(i);
    if (target_hit_) return true;
  }
  return target_hit_;
}

}  // namespace wiegold::detail
