#include "wiegold/closure.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "closure_engine.hpp"
#include "wiegold/errors.hpp"

namespace wiegold {

namespace {

PowerCodec budgeted_codec(std::uint32_t s, std::uint32_t n,
                          const Budget& budget) {
  auto card = checked_pow(s, n);
  if (!card || *card > budget.max_tuples) {
    throw BudgetExceeded("A^" + std::to_string(n) + " with |A| = " +
                         std::to_string(s) + " exceeds the budget of " +
                         std::to_string(budget.max_tuples) + " tuples");
  }
  return PowerCodec(s, n);
}

void code_to_bytes(const PowerCodec& codec, TupleCode code,
                   std::vector<std::uint8_t>& out) {
  out.resize(codec.width());
  for (std::uint32_t i = codec.width(); i-- > 0;) {
    out[i] = static_cast<std::uint8_t>(code % codec.base());
    code /= codec.base();
  }
}

TupleCode bytes_to_code(const PowerCodec& codec,
                        std::span<const std::uint8_t> bytes) {
  TupleCode code = 0;
  for (std::uint8_t b : bytes) code = code * codec.base() + b;
  return code;
}

Subuniverse close_with_codec(const FiniteAlgebra& alg, const PowerCodec& codec,
                             std::span<const TupleCode> generators,
                             const Budget& budget) {
  detail::ClosureEngine engine(alg, codec.width(),
                               {.max_members = budget.max_tuples, .record_provenance = false, .target = std::nullopt});
  std::vector<std::uint8_t> bytes;
  for (TupleCode g : generators) {
    if (g >= codec.cardinality()) {
      throw ContractError("generator code " + std::to_string(g) +
                          " is not a tuple of width " +
                          std::to_string(codec.width()));
    }
    code_to_bytes(codec, g, bytes);
    engine.add_generator(bytes);
  }
  engine.run();
  std::vector<TupleCode> members;
  members.reserve(engine.size());
  for (std::size_t i = 0; i < engine.size(); ++i) {
    members.push_back(bytes_to_code(codec, engine.member(i)));
  }
  return Subuniverse(codec.base(), codec.width(), std::move(members));
}

}  // namespace

// ---------------------------------------------------------------------------
// Subuniverse

Subuniverse::Subuniverse(std::uint32_t base, std::uint32_t width,
                         std::vector<TupleCode> members)
    : codec_(base, width), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  if (!members_.empty() && members_.back() >= codec_.cardinality()) {
    throw ContractError("member code out of range");
  }
  bits_.assign((codec_.cardinality() + 63) / 64, 0);
  for (TupleCode c : members_) bits_[c >> 6] |= std::uint64_t{1} << (c & 63);
}

bool Subuniverse::subset_of(const Subuniverse& other) const {
  if (other.width() != width() || other.base() != base()) return false;
  return std::all_of(members_.begin(), members_.end(),
                     [&](TupleCode c) { return other.contains(c); });
}

// ---------------------------------------------------------------------------

Subuniverse close(const FiniteAlgebra& alg, std::uint32_t n,
                  std::span<const TupleCode> generators,
                  const Budget& budget) {
  return close_with_codec(alg, budgeted_codec(alg.size(), n, budget),
                          generators, budget);
}

bool generates(const FiniteAlgebra& alg, std::uint32_t n,
               std::span<const TupleCode> generators, const Budget& budget) {
  return close(alg, n, generators, budget).is_full();
}

namespace {

MinimumGeneratingSet one_element_case(const FiniteAlgebra& alg) {
  if (!alg.constants().empty()) return {0, {}, 1};
  return {1, {0}, 2};
}

MinimumGeneratingSet search_subsets(const FiniteAlgebra& alg,
                                    const PowerCodec& codec,
                                    const Budget& budget) {
  const std::uint64_t total = codec.cardinality();
  std::uint64_t candidates = 0;
  for (std::uint64_t g = 0; g <= total; ++g) {
    std::vector<TupleCode> combo(g);
    for (std::uint64_t i = 0; i < g; ++i) combo[i] = i;
    for (;;) {
      if (++candidates > budget.max_candidates) {
        throw BudgetExceeded("generating-set search examined " +
                                 std::to_string(budget.max_candidates) +
                                 " candidates",
                             total);
      }
      if (close_with_codec(alg, codec, combo, budget).is_full()) {
        return {g, combo, candidates};
      }
      // Next combination in colexicographic order.
      std::uint64_t j = 0;
      while (j < g) {
        const TupleCode limit = j + 1 < g ? combo[j + 1] : total;
        if (combo[j] + 1 < limit) break;
        ++j;
      }
      if (j == g) break;
      ++combo[j];
      for (std::uint64_t i = 0; i < j; ++i) combo[i] = i;
    }
  }
  throw VerificationFailure("A^n is not generated by itself");
}

// Term functions of arity g as tuples indexed by A^g.
class TermFunctions {
 public:
  TermFunctions(const FiniteAlgebra& alg, std::uint32_t g, const Budget& budget)
      : points_(budgeted_codec(alg.size(), g, budget)),
        engine_(alg, static_cast<std::uint32_t>(points_.cardinality()),
                {.max_members = member_cap(points_.cardinality(), budget),
                 .record_provenance = false,
                 .target = std::nullopt}) {
    std::vector<std::uint8_t> projection(points_.cardinality());
    for (std::uint32_t j = 0; j < g; ++j) {
      for (TupleCode p = 0; p < points_.cardinality(); ++p) {
        projection[p] = static_cast<std::uint8_t>(points_.coordinate(p, j));
      }
      engine_.add_generator(projection);
    }
    engine_.run();
  }

  // Members are s^g bytes wide; keep the table within 16 bytes per budgeted
  // tuple.
  static std::uint64_t member_cap(std::uint64_t width, const Budget& budget) {
    return std::min(budget.max_tuples,
                    std::max<std::uint64_t>(1, budget.max_tuples * 16 / width));
  }

  [[nodiscard]] const PowerCodec& points() const { return points_; }
  [[nodiscard]] std::size_t count() const { return engine_.size(); }
  [[nodiscard]] std::uint8_t value(std::size_t f, TupleCode point) const {
    return engine_.member(f)[point];
  }

 private:
  PowerCodec points_;
  detail::ClosureEngine engine_;
};

struct ColumnSearch {
  const TermFunctions& funcs;
  std::uint32_t s;
  std::uint32_t n;
  const Budget& budget;
  std::uint64_t& candidates;
  std::vector<TupleCode> chosen;
  std::vector<std::vector<std::uint64_t>> proj;  // per depth
  std::vector<std::uint64_t> seen;

  bool full_projection(std::size_t depth, TupleCode point) {
    if (++candidates > budget.max_candidates) {
      throw BudgetExceeded("generating-set search examined " +
                           std::to_string(budget.max_candidates) +
                           " candidates");
    }
    const std::size_t count = funcs.count();
    const std::uint64_t target = *checked_pow(s, depth + 1);
    auto& next = proj[depth + 1];
    const auto& prev = proj[depth];
    seen.assign((target + 63) / 64, 0);
    std::uint64_t distinct = 0;
    for (std::size_t f = 0; f < count; ++f) {
      const std::uint64_t code = prev[f] * s + funcs.value(f, point);
      next[f] = code;
      auto& word = seen[code >> 6];
      const std::uint64_t bit = std::uint64_t{1} << (code & 63);
      if ((word & bit) == 0) {
        word |= bit;
        ++distinct;
      }
    }
    return distinct == target;
  }

  bool extend(TupleCode from) {
    const std::size_t depth = chosen.size();
    if (depth == n) return true;
    const TupleCode total = funcs.points().cardinality();
    for (TupleCode p = from; p + (n - depth) <= total; ++p) {
      if (!full_projection(depth, p)) continue;
      chosen.push_back(p);
      if (extend(p + 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

MinimumGeneratingSet search_columns(const FiniteAlgebra& alg,
                                    const PowerCodec& codec,
                                    const Budget& budget) {
  const std::uint32_t s = alg.size();
  const std::uint32_t n = codec.width();
  const std::uint64_t target = codec.cardinality();
  std::uint64_t candidates = 0;
  for (std::uint32_t g = 0;; ++g) {
    std::optional<TermFunctions> funcs;
    try {
      funcs.emplace(alg, g, budget);
    } catch (const BudgetExceeded& e) {
      throw BudgetExceeded(std::string(e.what()) + " (while building the " +
                               std::to_string(g) + "-ary term functions)",
                           target);
    }
    ++candidates;
    if (funcs->count() < target) continue;
    ColumnSearch search{*funcs, s, n, budget, candidates, {}, {}, {}};
    search.proj.assign(n + 1, std::vector<std::uint64_t>(funcs->count(), 0));
    bool found = false;
    try {
      found = search.extend(0);
    } catch (const BudgetExceeded& e) {
      throw BudgetExceeded(e.what(), target);
    }
    if (!found) continue;
    // Rows of the g x n matrix whose columns are the chosen points.
    std::vector<TupleCode> witness;
    std::vector<Element> row(n);
    for (std::uint32_t i = 0; i < g; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        row[j] = funcs->points().coordinate(search.chosen[j], i);
      }
      witness.push_back(codec.encode(row));
    }
    std::sort(witness.begin(), witness.end());
    witness.erase(std::unique(witness.begin(), witness.end()), witness.end());
    if (witness.size() != g ||
        !close_with_codec(alg, codec, witness, budget).is_full()) {
      throw VerificationFailure("column search produced a non-generating set");
    }
    return {g, std::move(witness), candidates};
  }
}

}  // namespace

MinimumGeneratingSet d_exact(const FiniteAlgebra& alg, std::uint32_t n,
                             const Budget& budget, GeneratingSearch method) {
  if (n == 0) throw ContractError("d_exact needs n >= 1");
  if (alg.size() == 1) return one_element_case(alg);
  const PowerCodec codec = budgeted_codec(alg.size(), n, budget);
  return method == GeneratingSearch::kSubsets
             ? search_subsets(alg, codec, budget)
             : search_columns(alg, codec, budget);
}

// ---------------------------------------------------------------------------
// Subuniverse enumeration

namespace {

bool by_size_then_members(const Subuniverse& a, const Subuniverse& b) {
  if (a.cardinality() != b.cardinality()) {
    return a.cardinality() < b.cardinality();
  }
  return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                      b.members().begin(), b.members().end());
}

std::vector<Subuniverse> to_sorted_list(
    const FiniteAlgebra& alg, std::uint32_t n,
    const std::set<std::vector<TupleCode>>& found) {
  std::vector<Subuniverse> out;
  out.reserve(found.size());
  for (const auto& m : found) out.emplace_back(alg.size(), n, m);
  std::sort(out.begin(), out.end(), by_size_then_members);
  return out;
}

void record(std::set<std::vector<TupleCode>>& found, const Subuniverse& s,
            const Budget& budget) {
  if (s.empty()) return;
  found.emplace(s.members().begin(), s.members().end());
  if (found.size() > budget.max_subuniverses) {
    throw BudgetExceeded("more than " +
                         std::to_string(budget.max_subuniverses) +
                         " subuniverses");
  }
}

}  // namespace

std::vector<Subuniverse> all_subuniverses(const FiniteAlgebra& alg,
                                          std::uint32_t n, const Budget& budget,
                                          SubuniverseEnumeration mode) {
  const PowerCodec codec = budgeted_codec(alg.size(), n, budget);
  const std::uint64_t total = codec.cardinality();
  if (mode == SubuniverseEnumeration::kAuto) {
    mode = total <= budget.exhaustive_subset_cap
               ? SubuniverseEnumeration::kExhaustive
               : SubuniverseEnumeration::kBottomUp;
  }
  std::set<std::vector<TupleCode>> found;
  if (mode == SubuniverseEnumeration::kExhaustive) {
    if (total > budget.exhaustive_subset_cap || total >= 63) {
      throw BudgetExceeded("exhaustive subuniverse enumeration needs s^n <= " +
                           std::to_string(budget.exhaustive_subset_cap));
    }
    std::vector<TupleCode> subset;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << total); ++mask) {
      subset.clear();
      for (TupleCode c = 0; c < total; ++c) {
        if ((mask >> c) & 1U) subset.push_back(c);
      }
      record(found, close_with_codec(alg, codec, subset, budget), budget);
    }
    return to_sorted_list(alg, n, found);
  }

  std::deque<std::vector<TupleCode>> queue;
  auto visit = [&](const Subuniverse& s) {
    const std::size_t before = found.size();
    record(found, s, budget);
    if (found.size() != before) {
      queue.emplace_back(s.members().begin(), s.members().end());
    }
  };
  for (TupleCode x = 0; x < total; ++x) {
    const TupleCode gen[] = {x};
    visit(close_with_codec(alg, codec, gen, budget));
  }
  while (!queue.empty()) {
    std::vector<TupleCode> members = std::move(queue.front());
    queue.pop_front();
    const Subuniverse current(alg.size(), n, members);
    if (current.is_full()) continue;
    members.push_back(0);
    for (TupleCode x = 0; x < total; ++x) {
      if (current.contains(x)) continue;
      members.back() = x;
      visit(close_with_codec(alg, codec, members, budget));
    }
  }
  return to_sorted_list(alg, n, found);
}

std::vector<Subuniverse> maximal_subuniverses(const FiniteAlgebra& alg,
                                              std::uint32_t n,
                                              const Budget& budget,
                                              SubuniverseEnumeration mode) {
  auto all = all_subuniverses(alg, n, budget, mode);
  std::vector<Subuniverse> proper;
  for (auto& s : all) {
    if (!s.is_full()) proper.push_back(std::move(s));
  }
  std::vector<Subuniverse> out;
  for (std::size_t i = 0; i < proper.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < proper.size() && maximal; ++j) {
      if (proper[j].cardinality() > proper[i].cardinality() &&
          proper[i].subset_of(proper[j])) {
        maximal = false;
      }
    }
    if (maximal) out.push_back(proper[i]);
  }
  return out;
}

bool is_maximal(const FiniteAlgebra& alg, const Subuniverse& m,
                const Budget& budget) {
  if (m.is_full()) return false;
  std::vector<TupleCode> gens(m.members().begin(), m.members().end());
  gens.push_back(0);
  for (TupleCode x = 0; x < m.codec().cardinality(); ++x) {
    if (m.contains(x)) continue;
    gens.back() = x;
    if (!close(alg, m.width(), gens, budget).is_full()) return false;
  }
  return true;
}

}  // namespace wiegold
