#include "wiegold/congruence.hpp"

#include <deque>
#include <numeric>

#include "wiegold/closure.hpp"
#include "wiegold/errors.hpp"

namespace wiegold {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::uint32_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0U);
  }
  std::uint32_t find(std::uint32_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

Congruence cg(const FiniteAlgebra& alg,
              std::span<const std::pair<Element, Element>> pairs) {
  const std::uint32_t s = alg.size();
  UnionFind uf(s);
  std::deque<std::pair<Element, Element>> work;
  for (auto [a, b] : pairs) {
    if (a >= s || b >= s) throw ContractError("pair outside the universe");
    if (uf.unite(a, b)) work.emplace_back(a, b);
  }
  // Close under basic translations: for every operation, argument position
  // and assignment of the remaining arguments, identify f(..a..) with
  // f(..b..). Pairs already identified transitively need no propagation:
  // their connecting chain is propagated instead.
  std::vector<Element> args;
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    for (std::size_t op = 0; op < alg.operation_count(); ++op) {
      const auto& table = alg.operation(op);
      const std::uint32_t m = table.arity();
      if (m == 0) continue;
      const std::uint64_t params = *checked_pow(s, m - 1);
      args.assign(m, 0);
      for (std::uint32_t pos = 0; pos < m; ++pos) {
        for (std::uint64_t p = 0; p < params; ++p) {
          std::uint64_t rest = p;
          for (std::uint32_t j = m; j-- > 0;) {
            if (j == pos) continue;
            args[j] = static_cast<Element>(rest % s);
            rest /= s;
          }
          args[pos] = a;
          const Element fa = alg.apply(op, args);
          args[pos] = b;
          const Element fb = alg.apply(op, args);
          if (uf.unite(fa, fb)) work.emplace_back(fa, fb);
        }
      }
    }
  }
  std::vector<std::uint32_t> roots(s);
  for (Element x = 0; x < s; ++x) roots[x] = uf.find(x);
  return make_congruence_unchecked(Partition(roots));
}

Commutator commutator_11(const FiniteAlgebra& alg, bool has_cube_witness,
                         const Budget& budget) {
  const std::uint32_t s = alg.size();
  const PowerCodec codec(s, 4);
  std::vector<TupleCode> gens;
  gens.reserve(2 * s * s);
  for (Element a = 0; a < s; ++a) {
    for (Element b = 0; b < s; ++b) {
      const Element rows[] = {a, a, b, b};
      const Element cols[] = {a, b, a, b};
      gens.push_back(codec.encode(rows));
      gens.push_back(codec.encode(cols));
    }
  }
  const Subuniverse m = close(alg, 4, gens, budget);
  std::vector<std::pair<Element, Element>> pairs;
  std::vector<Element> t(4);
  for (TupleCode code : m.members()) {
    codec.decode(code, t);
    if (t[0] == t[1] && t[2] != t[3]) pairs.emplace_back(t[2], t[3]);
  }
  return Commutator{cg(alg, pairs), has_cube_witness};
}

bool is_abelian(const FiniteAlgebra& alg, const Budget& budget) {
  return commutator_11(alg, false, budget).value.is_equality();
}

bool is_perfect(const FiniteAlgebra& alg, const Budget& budget) {
  return commutator_11(alg, false, budget).value.is_full();
}

bool is_simple(const FiniteAlgebra& alg) {
  if (alg.size() < 2) return false;
  for (Element a = 0; a < alg.size(); ++a) {
    for (Element b = a + 1; b < alg.size(); ++b) {
      const std::pair<Element, Element> p[] = {{a, b}};
      if (!cg(alg, p).is_full()) return false;
    }
  }
  return true;
}

TupleCode Abelianization::map_tuple(const PowerCodec& from,
                                    const PowerCodec& to,
                                    TupleCode code) const {
  if (from.width() != to.width()) {
    throw ContractError("η maps A^n to (A/[1,1])^n of the same width");
  }
  TupleCode out = 0;
  for (std::uint32_t i = 0; i < from.width(); ++i) {
    out = out * to.base() + eta[from.coordinate(code, i)];
  }
  return out;
}

Abelianization abelianization(const FiniteAlgebra& alg, bool has_cube_witness,
                              const Budget& budget) {
  auto comm = commutator_11(alg, has_cube_witness, budget);
  auto q = quotient(alg, comm.value);
  return Abelianization{std::move(q.algebra), std::move(q.natural_map),
                        comm.modularity_verified};
}

}  // namespace wiegold
