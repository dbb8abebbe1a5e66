#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "wiegold/closure.hpp"
#include "wiegold/errors.hpp"

using namespace wiegold;

namespace {

// Closed subsets of A^n by brute force over all subsets.
std::set<std::vector<TupleCode>> brute_force_subuniverses(
    const FiniteAlgebra& alg, std::uint32_t n) {
  const PowerCodec c(alg.size(), n);
  const std::uint64_t total = c.cardinality();
  std::set<std::vector<TupleCode>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << total); ++mask) {
    auto in = [&](TupleCode t) { return (mask >> t) & 1; };
    bool closed = true;
    for (std::size_t op = 0; op < alg.operation_count() && closed; ++op) {
      const std::uint32_t ar = alg.operation(op).arity();
      std::vector<TupleCode> members;
      for (TupleCode t = 0; t < total; ++t)
        if (in(t)) members.push_back(t);
      std::vector<std::size_t> idx(ar, 0);
      for (;;) {
        std::vector<TupleCode> args(ar);
        for (std::uint32_t i = 0; i < ar; ++i) args[i] = members[idx[i]];
        std::vector<Element> out_tuple(n);
        for (std::uint32_t j = 0; j < n; ++j) {
          std::vector<Element> a(ar);
          for (std::uint32_t i = 0; i < ar; ++i) a[i] = c.coordinate(args[i], j);
          out_tuple[j] = alg.operation(op).at([&] {
            std::size_t row = 0;
            for (auto v : a) row = row * alg.size() + v;
            return row;
          }());
        }
        if (!in(c.encode(out_tuple))) {
          closed = false;
          break;
        }
        std::uint32_t p = 0;
        while (p < ar && ++idx[p] == members.size()) idx[p++] = 0;
        if (p == ar) break;
      }
    }
    if (!closed) continue;
    std::vector<TupleCode> members;
    for (TupleCode t = 0; t < total; ++t)
      if (in(t)) members.push_back(t);
    out.insert(members);
  }
  return out;
}

}  // namespace

TEST_CASE("closure of Z2 tuples is their span") {
  const auto z2 = fixture("z2");
  const PowerCodec c(2, 3);
  const TupleCode gens[] = {c.encode(std::vector<Element>{1, 1, 0}),
                            c.encode(std::vector<Element>{0, 1, 1})};
  const auto s = close(z2, 3, gens);
  CHECK(s.cardinality() == 4);
  CHECK(s.contains(0));
  CHECK(s.contains(c.encode(std::vector<Element>{1, 0, 1})));
  CHECK_FALSE(s.is_full());
  CHECK_FALSE(generates(z2, 3, gens));
}

TEST_CASE("closure of nothing is generated by the constants") {
  const auto z4 = fixture("z4");
  const auto s = close(z4, 2, {});
  CHECK(s.cardinality() == 1);
  CHECK(s.contains(0));
  const auto lat = fixture("lattice2");
  CHECK(close(lat, 2, {}).empty());
}

TEST_CASE("closure rejects codes outside the power and oversized powers") {
  const auto z2 = fixture("z2");
  const TupleCode bad[] = {8};
  CHECK_THROWS_AS(close(z2, 3, bad), ContractError);
  Budget tiny;
  tiny.max_tuples = 4;
  CHECK_THROWS_AS(close(z2, 3, {}, tiny), BudgetExceeded);
}

TEST_CASE("d of Z2 powers matches the GF(2) rank oracle") {
  const auto z2 = fixture("z2");
  for (std::uint32_t n = 1; n <= 6; ++n) {
    const auto m = d_exact(z2, n);
    // Any generating set of Z2^n spans it, so it has rank n; n unit vectors
    // suffice.
    CHECK(m.size == n);
    REQUIRE(m.witness.size() == m.size);
    CHECK(oracle::gf2_rank(m.witness) == n);
    CHECK(generates(z2, n, m.witness));
  }
}

TEST_CASE("d of Z4 powers equals n") {
  // Z4^n / 2Z4^n is GF(2)^n, so at least n generators; unit vectors give n.
  const auto z4 = fixture("z4");
  for (std::uint32_t n = 1; n <= 4; ++n) {
    const auto m = d_exact(z4, n);
    CHECK(m.size == n);
    CHECK(generates(z4, n, m.witness));
  }
}

TEST_CASE("d of lattice powers matches the Sperner oracle") {
  const auto lat = fixture("lattice2");
  const std::vector<std::uint64_t> pinned{2, 2, 3, 4, 4, 4, 5};
  for (std::uint32_t n = 1; n <= 7; ++n) {
    const auto m = d_exact(lat, n);
    CHECK(m.size == oracle::lattice_growth(n));
    CHECK(m.size == pinned[n - 1]);
    CHECK(generates(lat, n, m.witness));
  }
}

TEST_CASE("column and subset searches agree") {
  struct Case {
    const char* name;
    std::uint32_t n_max;
  };
  for (const Case& tc : {Case{"z2", 4}, Case{"lattice2", 4},
                         Case{"quasigroup3", 2}, Case{"z4", 2},
                         Case{"semilattice2", 3}, Case{"s3", 1}}) {
    const auto alg = fixture(tc.name);
    for (std::uint32_t n = 1; n <= tc.n_max; ++n) {
      CAPTURE(tc.name);
      CAPTURE(n);
      const auto a = d_exact(alg, n, {}, GeneratingSearch::kColumns);
      const auto b = d_exact(alg, n, {}, GeneratingSearch::kSubsets);
      CHECK(a.size == b.size);
      CHECK(generates(alg, n, b.witness));
    }
  }
}

TEST_CASE("one-element algebras") {
  const auto t = fixture("trivial");
  CHECK(d_exact(t, 1).size == 1);
  CHECK(d_exact(t, 5).size == 1);
  const auto with_constant = parse_algebra_json(
      R"({"name":"pt","size":1,"operations":[{"symbol":"c","arity":0,"table":[0]}]})");
  CHECK(d_exact(with_constant, 3).size == 0);
}

TEST_CASE("d_exact respects the budget") {
  const auto s3 = fixture("s3");
  Budget tiny;
  tiny.max_tuples = 100;
  CHECK_THROWS_AS(d_exact(s3, 3, tiny), BudgetExceeded);
  CHECK_THROWS_AS(d_exact(s3, 0), ContractError);
}

TEST_CASE("subuniverse enumeration matches brute force") {
  struct Case {
    const char* name;
    std::uint32_t n;
  };
  for (const Case& tc : {Case{"z2", 2}, Case{"z2", 3}, Case{"lattice2", 2},
                         Case{"lattice2", 3}, Case{"quasigroup3", 2},
                         Case{"semilattice2", 3}, Case{"z4", 1}}) {
    CAPTURE(tc.name);
    CAPTURE(tc.n);
    const auto alg = fixture(tc.name);
    const auto expected = brute_force_subuniverses(alg, tc.n);
    for (auto mode : {SubuniverseEnumeration::kExhaustive,
                      SubuniverseEnumeration::kBottomUp}) {
      const auto found = all_subuniverses(alg, tc.n, {}, mode);
      std::set<std::vector<TupleCode>> got;
      for (const auto& s : found)
        got.insert({s.members().begin(), s.members().end()});
      CHECK(got == expected);
      CHECK(got.size() == found.size());
      for (std::size_t i = 1; i < found.size(); ++i)
        CHECK(found[i - 1].cardinality() <= found[i].cardinality());
    }
  }
}

TEST_CASE("sublattices of the square") {
  const auto lat = fixture("lattice2");
  CHECK(all_subuniverses(lat, 2).size() == 12);
  const auto max = maximal_subuniverses(lat, 2);
  CHECK(max.size() == 2);
  for (const auto& m : max) {
    CHECK(m.cardinality() == 3);
    CHECK(is_maximal(lat, m));
  }
}

TEST_CASE("maximal subgroups of Z2 cubed") {
  const auto z2 = fixture("z2");
  const auto max = maximal_subuniverses(z2, 3);
  CHECK(max.size() == 7);
  for (const auto& m : max) {
    CHECK(m.cardinality() == 4);
    CHECK(is_maximal(z2, m));
  }
  const auto all = all_subuniverses(z2, 3);
  CHECK(all.size() == 16);
  CHECK_FALSE(is_maximal(z2, all.front()));
}
