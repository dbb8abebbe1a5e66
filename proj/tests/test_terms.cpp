#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "wiegold/cube_terms.hpp"
#include "wiegold/errors.hpp"
#include "wiegold/term.hpp"

using namespace wiegold;

TEST_CASE("term text round trip and evaluation") {
  const auto z2 = fixture("z2");
  const Term t = parse_term(z2, "(+ x1 (+ x2 x3))");
  CHECK(to_string(z2, t) == "(+ x1 (+ x2 x3))");
  CHECK(t.variable_bound() == 3);
  for (Element a = 0; a < 2; ++a)
    for (Element b = 0; b < 2; ++b)
      for (Element c = 0; c < 2; ++c) {
        const Element v[] = {a, b, c};
        CHECK(eval_term(z2, t, v) == ((a + b + c) & 1));
      }
  const Term k = parse_term(z2, "(+ (0) (- #1))");
  CHECK(k.variable_bound() == 0);
  CHECK(eval_term(z2, k, {}) == 1);
  CHECK(to_string(z2, parse_term(z2, "0")) == "0");
}

TEST_CASE("batch evaluation agrees with scalar evaluation") {
  const auto s3 = fixture("s3");
  const Term t = parse_term(s3, "(* x1 (* (inv x2) x1))");
  std::vector<std::vector<Element>> cols(2);
  for (Element a = 0; a < 6; ++a)
    for (Element b = 0; b < 6; ++b) {
      cols[0].push_back(a);
      cols[1].push_back(b);
    }
  const auto batch = eval_term_batch(s3, t, cols);
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const Element v[] = {cols[0][i], cols[1][i]};
    CHECK(batch[i] == eval_term(s3, t, v));
  }
}

TEST_CASE("malformed terms") {
  const auto z2 = fixture("z2");
  CHECK_THROWS_AS(parse_term(z2, "(+ x1)"), ParseError);
  CHECK_THROWS_AS(parse_term(z2, "(* x1 x2)"), ParseError);
  CHECK_THROWS_AS(parse_term(z2, "(+ x1 x2"), ParseError);
  CHECK_THROWS_AS(parse_term(z2, "x0"), ParseError);
  CHECK_THROWS_AS(parse_term(z2, "#2"), ParseError);
  CHECK_THROWS_AS(parse_term(z2, "(+ x1 x2) x3"), ParseError);
  const Term t = parse_term(z2, "x3");
  const Element short_assignment[] = {0};
  CHECK_THROWS_AS((void)eval_term(z2, t, short_assignment), ContractError);
}

TEST_CASE("frames") {
  const CubeFrame m = maltsev_frame();
  CHECK(m.k() == 2);
  CHECK(m.m() == 3);
  CHECK(m.pointedness() == 0);
  CHECK(majority_frame().k() == 3);
  CHECK(near_unanimity_frame(3).name() == "majority");
  CHECK(near_unanimity_frame(4).m() == 4);
  CHECK(edge_frame(3).m() == 4);
  CHECK(edge_frame(2).k() == 2);
  CHECK(full_cube_frame(2).m() == 3);

  const CubeFrame parsed = parse_frame("% comment\nx y y\n\ny y x\n", "maltsev");
  CHECK(parsed.rows() == m.rows());
  CHECK(parse_frame(to_string(majority_frame())).rows() == majority_frame().rows());
  CHECK(load_frame_file(fixture_path("frames/majority.frame")).rows() ==
        majority_frame().rows());

  const CubeFrame pointed = parse_frame("x y1 #0\n#0 y2 x\n");
  CHECK(pointed.pointedness() == 1);
  CHECK(pointed.named_variables() == std::vector<std::uint32_t>{1, 2});

  CHECK_THROWS_AS(parse_frame("x x\nx y"), ParseError);
  CHECK_THROWS_AS(parse_frame("x y\nx"), ParseError);
  using R = std::vector<FrameCell>;
  CHECK_THROWS_AS(CubeFrame("bad", {R{FrameCell::target(), FrameCell::var(1)},
                                    R{FrameCell::target(), FrameCell::target()}}),
                  ContractError);
  CHECK_THROWS_AS(parse_frame("x z"), ParseError);
}

TEST_CASE("the group term x1 - x2 + x3 is Maltsev") {
  const auto z2 = fixture("z2");
  CHECK(satisfies_frame(z2, parse_term(z2, "(+ x1 (+ x2 x3))"), maltsev_frame()));
  CHECK_FALSE(satisfies_frame(z2, parse_term(z2, "x1"), maltsev_frame()));
  const auto z4 = fixture("z4");
  CHECK(satisfies_frame(z4, parse_term(z4, "(+ x1 (+ (- x2) x3))"),
                        maltsev_frame()));
  CHECK_FALSE(satisfies_frame(z4, parse_term(z4, "(+ x1 (+ x2 x3))"),
                              maltsev_frame()));
  const auto s3 = fixture("s3");
  CHECK(satisfies_frame(s3, parse_term(s3, "(* x1 (* (inv x2) x3))"),
                        maltsev_frame()));
}

TEST_CASE("lattice median is a majority term") {
  const auto lat = fixture("lattice2");
  const Term med = parse_term(lat, "(∨ (∨ (∧ x1 x2) (∧ x2 x3)) (∧ x1 x3))");
  CHECK(satisfies_frame(lat, med, majority_frame()));
  CHECK_FALSE(satisfies_frame(lat, med, maltsev_frame()));
}

TEST_CASE("witness search") {
  for (const char* name : {"z2", "z4", "s3", "quasigroup3"}) {
    CAPTURE(name);
    const auto alg = fixture(name);
    const auto w = find_frame_witness(alg, maltsev_frame());
    REQUIRE(w);
    CHECK(satisfies_frame(alg, *w, maltsev_frame()));
  }
  const auto lat = fixture("lattice2");
  const auto maj = find_frame_witness(lat, majority_frame());
  REQUIRE(maj);
  CHECK(satisfies_frame(lat, *maj, majority_frame()));
  CHECK_FALSE(find_frame_witness(lat, maltsev_frame()));

  const auto semi = fixture("semilattice2");
  for (const auto& f : default_catalog(3, true)) {
    CAPTURE(f.name());
    CHECK_FALSE(find_frame_witness(semi, f));
  }
}

TEST_CASE("catalog order and cube witnesses") {
  const auto cat = default_catalog(4);
  REQUIRE(cat.size() == 5);
  CHECK(cat[0].name() == "maltsev");
  CHECK(cat[1].name() == "majority");
  CHECK(cat[2].name() == "edge-3");
  CHECK(cat[3].name() == "near-unanimity-4");
  CHECK(cat[4].name() == "edge-4");
  CHECK(default_catalog(3, true).size() == 5);

  const auto z2 = cube_witness(fixture("z2"), 3);
  REQUIRE(z2);
  CHECK(z2->k() == 2);
  const auto lat = cube_witness(fixture("lattice2"), 3);
  REQUIRE(lat);
  CHECK(lat->frame.name() == "majority");
  CHECK(lat->k() == 3);
  CHECK_FALSE(cube_witness(fixture("semilattice2"), 3));
  CHECK_FALSE(cube_witness(fixture("lattice2"), 2));
}

TEST_CASE("pointed frames are searched with constants") {
  // p(x, 0) = x = p(0, x), realised by x1 + x2.
  const auto z2 = fixture("z2");
  const CubeFrame f = parse_frame("x #0\n#0 x", "pointed");
  const auto w = find_frame_witness(z2, f);
  REQUIRE(w);
  CHECK(satisfies_frame(z2, *w, f));
}
