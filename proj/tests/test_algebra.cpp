#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "wiegold/algebra.hpp"
#include "wiegold/errors.hpp"

using namespace wiegold;

namespace {

int parity(const std::string& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
  return inv % 2;
}

}  // namespace

TEST_CASE("fixtures load with their signatures") {
  const auto z2 = fixture("z2");
  CHECK(z2.size() == 2);
  REQUIRE(z2.operation_count() == 3);
  CHECK(z2.operation(0).symbol() == "+");
  CHECK(z2.operation(1).symbol() == "-");
  CHECK(z2.operation(2).symbol() == "0");
  CHECK(z2.constants() == std::vector<Element>{0});
  CHECK_FALSE(z2.is_idempotent());

  const auto lat = fixture("lattice2");
  CHECK(lat.size() == 2);
  CHECK(lat.operation_count() == 2);
  CHECK(lat.is_idempotent());
  CHECK(lat.constants().empty());
  CHECK(lat.max_arity() == 2);
}

TEST_CASE("apply reads row-major tables") {
  const auto z4 = fixture("z4");
  const Element args[] = {3, 2};
  CHECK(z4.apply(0, args) == 1);
  const Element one[] = {1};
  CHECK(z4.apply(1, one) == 3);
  CHECK_THROWS_AS((void)z4.apply(1, args), ContractError);
  const Element bad[] = {4, 0};
  CHECK_THROWS_AS((void)z4.apply(0, bad), ContractError);
}

TEST_CASE("malformed tables are rejected naming the operation") {
  const std::string text = R"({"name":"bad","size":2,"operations":[
    {"symbol":"+","arity":2,"table":[0,1,1,0]},
    {"symbol":"m","arity":2,"table":[0,1,1]}]})";
  try {
    (void)parse_algebra_json(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("m") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_algebra_json(R"({"name":"x","size":2,"operations":[
    {"symbol":"f","arity":1,"table":[0,2]}]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_algebra_json("{"), ParseError);
  CHECK_THROWS_AS(parse_algebra_json(R"({"size":2,"operations":[]})"),
                  ParseError);
}

TEST_CASE("json round trip") {
  for (const char* name : {"z2", "z4", "s3", "lattice2", "quasigroup3"}) {
    const auto a = fixture(name);
    const auto b = parse_algebra_json(to_json(a));
    CHECK(b.name() == a.name());
    CHECK(b.size() == a.size());
    CHECK(b.labels() == a.labels());
    REQUIRE(b.operation_count() == a.operation_count());
    for (std::size_t i = 0; i < a.operation_count(); ++i) {
      CHECK(b.operation(i).symbol() == a.operation(i).symbol());
      CHECK(std::vector<Element>(b.operation(i).table().begin(),
                                 b.operation(i).table().end()) ==
            std::vector<Element>(a.operation(i).table().begin(),
                                 a.operation(i).table().end()));
    }
  }
}

TEST_CASE("power codec") {
  const PowerCodec c(3, 4);
  CHECK(c.cardinality() == 81);
  for (TupleCode code = 0; code < c.cardinality(); ++code) {
    const auto t = c.decode(code);
    CHECK(c.encode(t) == code);
    for (std::uint32_t i = 0; i < 4; ++i) CHECK(c.coordinate(code, i) == t[i]);
  }
  const std::vector<Element> t{1, 0, 2, 2};
  CHECK(c.encode(t) == 1 * 27 + 0 * 9 + 2 * 3 + 2);
  CHECK(c.constant(2) == 80);
  CHECK_THROWS_AS(PowerCodec(256, 9), ContractError);
}

TEST_CASE("power_apply is coordinatewise") {
  const auto z4 = fixture("z4");
  const PowerCodec c(4, 3);
  const std::vector<Element> a{1, 2, 3}, b{3, 3, 1};
  const TupleCode args[] = {c.encode(a), c.encode(b)};
  CHECK(c.decode(power_apply(z4, c, 0, args)) == std::vector<Element>{0, 1, 0});
}

TEST_CASE("partitions") {
  const std::uint32_t labels[] = {5, 5, 2, 7, 2};
  const Partition p(labels);
  CHECK(p.block_count() == 3);
  CHECK(p.block(0) == 0);
  CHECK(p.block(2) == 1);
  CHECK(p.block(3) == 2);
  CHECK(p.blocks() == std::vector<std::vector<Element>>{{0, 1}, {2, 4}, {3}});
  CHECK(p.representatives() == std::vector<Element>{0, 2, 3});
  CHECK(Partition(5).refines(p));
  CHECK(p.refines(Partition::full(5)));
  CHECK_FALSE(p.refines(Partition(5)));
}

TEST_CASE("quotient of S3 by the A3 cosets is the two-element group") {
  const auto s3 = fixture("s3");
  std::vector<std::uint32_t> labels;
  for (const auto& l : s3.labels()) labels.push_back(parity(l));
  const Congruence theta(s3, Partition(labels));
  const Quotient q = quotient(s3, theta);
  CHECK(q.algebra.size() == 2);
  const auto z2 = fixture("z2");
  for (Element a = 0; a < 2; ++a)
    for (Element b = 0; b < 2; ++b) {
      const Element ab[] = {a, b};
      CHECK(q.algebra.apply(0, ab) == z2.apply(0, ab));
    }
  CHECK(q.algebra.constants() == std::vector<Element>{0});

  const std::uint32_t not_normal[] = {0, 0, 1, 1, 2, 2};
  CHECK_FALSE(is_compatible(s3, Partition(not_normal)));
  CHECK_THROWS_AS(Congruence(s3, Partition(not_normal)), ContractError);
}

TEST_CASE("subalgebras") {
  const auto z4 = fixture("z4");
  const Element evens[] = {0, 2};
  const Subalgebra sub = restrict_to(z4, evens);
  CHECK(sub.algebra.size() == 2);
  CHECK(sub.embedding == std::vector<Element>{0, 2});
  const Element odd[] = {1};
  CHECK_THROWS_AS(restrict_to(z4, odd), ContractError);
  const auto t = trivial_like(z4, "t");
  CHECK(t.size() == 1);
  CHECK(t.operation_count() == 3);
}
