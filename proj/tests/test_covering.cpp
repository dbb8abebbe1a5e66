#include <set>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "wiegold/closure.hpp"
#include "wiegold/covering.hpp"
#include "wiegold/errors.hpp"

using namespace wiegold;
namespace {

bool k_surjective_oracle(const AlphabetMatrix& m, std::uint32_t k) {
  std::vector<std::uint32_t> entries;
  for (std::uint64_t i = 0; i < m.rows(); ++i)
    for (auto v : m.row(i)) entries.push_back(v);
  return oracle::k_surjective(m.rows(), m.cols(), m.alphabet(), k, entries);
}

}  // namespace

TEST_CASE("row bound worked values") {
  CHECK(row_bound(2, 2, 2) == 8);
  CHECK(row_bound(2, 2, 16) == 22);
  CHECK(row_bound(2, 3, 8) == 49);
  CHECK(row_bound(3, 3, 10) == 223);
  CHECK(row_bound(2, 2, 6) == 15);
  CHECK(expected_bad_minors(2, 2, 2, 8) == Rational(6561, 16384));
  CHECK(expected_bad_minors(2, 2, 2, 8) < 1);
  CHECK(expected_bad_minors(2, 2, 2, 7) == Rational(2187, 4096));
  CHECK(expected_bad_minors(2, 2, 2, 4) == Rational(81, 64));
  CHECK(CoveringParams{2, 2, 2, 8}.u() == Rational(4, 3));
}

TEST_CASE("row bound agrees with exact and high-precision evaluation") {
  for (std::uint32_t b = 2; b <= 5; ++b)
    for (std::uint32_t k = 2; k <= 4; ++k)
      for (std::uint32_t n = k; n <= 40; ++n) {
        CAPTURE(b);
        CAPTURE(k);
        CAPTURE(n);
        const std::uint64_t g = row_bound(b, k, n);
        CHECK(g == oracle::row_bound_exact(b, k, n));
        CHECK(g == oracle::row_bound_float(b, k, n));
        CHECK(expected_bad_minors(b, k, n, g) <= 1);
      }
}

TEST_CASE("row bound contracts") {
  CHECK_THROWS_AS(row_bound(1, 2, 3), ContractError);
  CHECK_THROWS_AS(row_bound(2, 1, 3), ContractError);
  CHECK_THROWS_AS(row_bound(2, 3, 2), ContractError);
  CHECK_THROWS_AS((CoveringParams{2, 2, 3, 0}.validate()), ContractError);
}

TEST_CASE("matrix text format") {
  const AlphabetMatrix m = parse_matrix("3 2 2\n0 1\n1 0\n1 1\n");
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 2);
  CHECK(m.at(1, 0) == 1);
  CHECK(to_string(m) == "3 2 2\n0 1\n1 0\n1 1\n");
  CHECK(parse_matrix(to_string(m)) == m);
  CHECK_THROWS_AS(parse_matrix("2 2 2\n0 1\n1"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 2 2\n0 2"), ParseError);
  CHECK_THROWS_AS(parse_matrix("1 1 2\n0 1"), ParseError);
  CHECK_THROWS_AS(parse_matrix("x"), ParseError);
}

TEST_CASE("bad minors and surjectivity") {
  const AlphabetMatrix m = parse_matrix("4 3 2\n0 0 0\n0 1 1\n1 0 1\n1 1 0\n");
  CHECK_FALSE(is_bad_minor(m.minor(std::vector<std::uint32_t>{0, 1})));
  CHECK_FALSE(is_bad_minor(m.minor(std::vector<std::uint32_t>{1, 2})));
  const auto ok = verify_k_surjective(m, 2);
  CHECK(ok.surjective);
  CHECK_FALSE(ok.witness);
  const auto bad = verify_k_surjective(m, 3);
  CHECK_FALSE(bad.surjective);
  REQUIRE(bad.witness);
  CHECK(*bad.witness == std::vector<std::uint32_t>{0, 1, 2});

  const AlphabetMatrix short_minor = parse_matrix("3 2 2\n0 0\n0 1\n1 0\n");
  CHECK(is_bad_minor(short_minor));
}

TEST_CASE("random construction is seeded and deterministic") {
  const auto a = random_construct(2, 2, 8, row_bound(2, 2, 8), 7, 25);
  const auto b = random_construct(2, 2, 8, row_bound(2, 2, 8), 7, 25);
  CHECK(a.matrix == b.matrix);
  CHECK(a.attempts == b.attempts);
  CHECK(k_surjective_oracle(a.matrix, 2));
  const auto c = random_construct(2, 2, 8, row_bound(2, 2, 8), 8, 25);
  CHECK_FALSE(c.matrix == a.matrix);
  CHECK_THROWS_AS(random_construct(2, 2, 8, 4, 0, 3), BudgetExceeded);
}

TEST_CASE("construction grid") {
  for (std::uint32_t b : {2U, 3U})
    for (std::uint32_t k : {2U, 3U})
      for (std::uint32_t n = k; n <= 10; ++n) {
        CAPTURE(b);
        CAPTURE(k);
        CAPTURE(n);
        const std::uint64_t g = row_bound(b, k, n);
        REQUIRE(expected_bad_minors(b, k, n, g) <= 1);
        const AlphabetMatrix greedy = greedy_construct(b, k, n, g);
        CHECK(greedy.rows() == g);
        CHECK(verify_k_surjective(greedy, k).surjective);
        if (n <= 8) CHECK(k_surjective_oracle(greedy, k));
        if (expected_bad_minors(b, k, n, g) < 1) {
          const auto r = random_construct(b, k, n, g, 0, 25);
          CHECK(verify_k_surjective(r.matrix, k).surjective);
          CHECK(r.attempts <= 25);
        }
      }
}

TEST_CASE("greedy needs the expectation below one") {
  CHECK_THROWS_AS(greedy_construct(2, 2, 8, 5), ContractError);
  CHECK(greedy_construct(2, 2, 2, 8) == greedy_construct(2, 2, 2, 8));
}

TEST_CASE("lift into powers of the lattice") {
  const auto lat = fixture("lattice2");
  const auto h = d_exact(lat, 3).witness;
  for (std::uint32_t n = 3; n <= 7; ++n) {
    CAPTURE(n);
    for (auto method : {CoveringMethod::kGreedy, CoveringMethod::kRandom}) {
      const LiftResult r = lift_to_power(lat, h, 3, n, {method, 0, 100});
      CHECK(r.alphabet == std::vector<Element>{0, 1});
      CHECK(r.matrix.cols() == n);
      // Majority term: full projections onto pairs force the full power.
      CHECK(generates(lat, n, r.generators));
    }
  }
  const TupleCode not_generating[] = {0};
  CHECK_THROWS_AS(lift_to_power(lat, not_generating, 3, 5), ContractError);
}
