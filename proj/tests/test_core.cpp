#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frtb/frobenius.hpp"
#include "frtb/instance.hpp"
#include "frtb/linalg.hpp"
#include "frtb/quiver.hpp"

using namespace frtb;

namespace {

BaseCtx two_by_two_base() {
  BaseCtx b;
  b.R = AlgebraSpec::rationals();
  b.lambda = LabelSet::of({"0", "1"});
  b.x = LabelSet::of({"0", "1"});
  b.deg = DegreeMap::from_images({{0, 1}, {1, 0}}, 2);
  return b;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rat("3/6") == Rat(1, 2));
  CHECK(parse_rat("-4") == Rat(-4));
  CHECK_THROWS(parse_rat("1/0"));
  CHECK_THROWS(parse_rat("x"));
  CHECK_THROWS(parse_rat(""));
}

TEST_CASE("row space rank and normal form idempotence") {
  RowSpace rs;
  rs.insert(SparseVec::from_dense({Rat(1), Rat(2), Rat(0)}));
  rs.insert(SparseVec::from_dense({Rat(0), Rat(1), Rat(1)}));
  rs.insert(SparseVec::from_dense({Rat(1), Rat(3), Rat(1)}));  // dependent
  CHECK(rs.rank() == 2);
  SparseVec v = SparseVec::from_dense({Rat(2), Rat(5), Rat(7)});
  rs.reduce(v);
  SparseVec w = v;
  rs.reduce(w);
  CHECK(v == w);
  CHECK(rs.free_columns(3).size() == 1);
}

TEST_CASE("center of the rationals is everything") {
  auto A = AlgebraSpec::rationals();
  A.validate();
  auto z = A.center_basis();
  REQUIRE(z.size() == 1);
  CHECK(z[0] == RVec{Rat(1)});
}

TEST_CASE("center of the 2x2 matrix algebra is the scalars") {
  auto A = AlgebraSpec::matrix_algebra(2);
  A.validate();
  auto z = A.center_basis();
  REQUIRE(z.size() == 1);
  // the single basis vector must be proportional to the identity
  CHECK(!is_zero(z[0][0]));
  CHECK(z[0][0] == z[0][3]);
  CHECK(is_zero(z[0][1]));
  CHECK(is_zero(z[0][2]));
}

TEST_CASE("center of the group algebra of Z/2 is everything") {
  // basis {1, g}, g^2 = 1
  AlgebraSpec A;
  A.dim = 2;
  A.sc.assign(8, Rat(0));
  A.c(0, 0, 0) = 1;
  A.c(0, 1, 1) = 1;
  A.c(1, 0, 1) = 1;
  A.c(1, 1, 0) = 1;
  A.unit = {Rat(1), Rat(0)};
  A.validate();
  CHECK(A.center_basis().size() == 2);
}

TEST_CASE("shift by a degree label acts through the right action") {
  BaseCtx b = two_by_two_base();
  // deg(1): l -> 1 + l; shifting the indicator of 0 by label 1 gives the
  // indicator of 1
  RVec d0 = b.m_delta(0);
  RVec shifted = b.shift(1, d0);
  CHECK(shifted == b.m_delta(1));
  // identity label leaves everything unchanged
  CHECK(b.shift(0, d0) == d0);
  // shifting and unshifting round-trips
  CHECK(b.shift(1, b.shift(1, d0, true)) == d0);
}

TEST_CASE("shift is an algebra homomorphism on the base") {
  BaseCtx b = two_by_two_base();
  for (int i = 0; i < b.nM(); ++i)
    for (int j = 0; j < b.nM(); ++j) {
      RVec f(b.nM(), Rat(0)), g(b.nM(), Rat(0));
      f[i] = 1;
      g[j] = 1;
      CHECK(b.shift(1, b.m_mul(f, g)) ==
            b.m_mul(b.shift(1, f), b.shift(1, g)));
    }
  CHECK(b.shift(1, b.m_unit()) == b.m_unit());
}

TEST_CASE("frobenius verification accepts the rational system") {
  auto A = AlgebraSpec::rationals();
  FrobeniusSystem s;
  s.psi = {Rat(1)};
  s.casimir = {{RVec{Rat(1)}, RVec{Rat(1)}}};
  CHECK(verify_frobenius(A, s).ok);
  // scaled casimir breaks e1 e2 = 1
  FrobeniusSystem bad = s;
  bad.casimir = {{RVec{Rat(2)}, RVec{Rat(1)}}};
  CHECK(!verify_frobenius(A, bad).ok);
}

TEST_CASE("frobenius system of the matrix algebra and its lift") {
  auto A = AlgebraSpec::matrix_algebra(2);
  FrobeniusSystem s;
  s.psi = {Rat(2), Rat(0), Rat(0), Rat(2)};
  s.casimir = {
      {{Rat(1, 2), Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(0), Rat(0), Rat(0)}},
      {{Rat(0), Rat(1, 2), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(1), Rat(0)}},
      {{Rat(0), Rat(0), Rat(1, 2), Rat(0)}, {Rat(0), Rat(1), Rat(0), Rat(0)}},
      {{Rat(0), Rat(0), Rat(0), Rat(1, 2)}, {Rat(0), Rat(0), Rat(0), Rat(1)}}};
  CHECK(verify_frobenius(A, s).ok);

  BaseCtx b;
  b.R = A;
  b.lambda = LabelSet::of({"0", "1"});
  b.x = LabelSet::of({"0"});
  b.deg = DegreeMap::from_images({{0, 1}}, 2);
  auto lifted = lift_frobenius(b, s);
  CHECK(verify_frobenius(b.m_algebra(), lifted).ok);
}

TEST_CASE("lifted diagonal frobenius system over the rationals") {
  BaseCtx b = two_by_two_base();
  FrobeniusSystem s;
  s.psi = {Rat(1)};
  s.casimir = {{RVec{Rat(1)}, RVec{Rat(1)}}};
  auto lifted = lift_frobenius(b, s);
  // psi'(f) = f(0) + f(1); casimir = sum of indicator pairs
  CHECK(lifted.psi == RVec{Rat(1), Rat(1)});
  REQUIRE(lifted.casimir.size() == 2);
  CHECK(lifted.casimir[0].first == b.m_delta(0));
  CHECK(lifted.casimir[1].second == b.m_delta(1));
  CHECK(verify_frobenius(b.m_algebra(), lifted).ok);
}

TEST_CASE("sigma quiver of the two-parameter instance") {
  BaseCtx b = two_by_two_base();
  Quiver q = build_sigma_quiver(b);
  CHECK(q.arrows.size() == 4);
  // arrow (0,1) has source 0 and target 1
  CHECK(q.arrows[1].id == "(0,1)");
  CHECK(q.arrows[1].src == 0);
  CHECK(q.arrows[1].tgt == 1);
  auto q0 = fiber_product(q, 0);
  CHECK(q0.size() == 2);
  auto q1 = fiber_product(q, 1);
  CHECK(q1.size() == 4);
  auto q2 = fiber_product(q, 2);
  CHECK(q2.size() == 8);
  // oracle: exhaustive pairing of composable arrows
  int count = 0;
  for (const auto& a : q.arrows)
    for (const auto& c : q.arrows)
      if (a.tgt == c.src) ++count;
  CHECK(count == 8);
  for (const auto& p : q2)
    CHECK(q.arrows[p.arrows[0]].tgt == q.arrows[p.arrows[1]].src);
  // |Q^(m)| = |Lambda| |X|^m
  CHECK(fiber_product(q, 3).size() == 16);
}

TEST_CASE("all-identity degree map gives loops") {
  BaseCtx b = two_by_two_base();
  b.deg = DegreeMap::from_images({{0, 1}, {0, 1}}, 2);
  Quiver q = build_sigma_quiver(b);
  for (const auto& a : q.arrows) CHECK(a.src == a.tgt);
}

TEST_CASE("three-cycle degree map targets the cycled vertex") {
  BaseCtx b;
  b.R = AlgebraSpec::rationals();
  b.lambda = LabelSet::of({"0", "1", "2"});
  b.x = LabelSet::of({"c"});
  b.deg = DegreeMap::from_images({{1, 2, 0}}, 3);
  Quiver q = build_sigma_quiver(b);
  CHECK(q.arrows[0].tgt == 1);
  CHECK(q.arrows[1].tgt == 2);
  CHECK(q.arrows[2].tgt == 0);
}

TEST_CASE("instance files parse with diagnostics") {
  CHECK_THROWS_WITH_AS(parse_instance_text("junk\n", "t"),
                       doctest::Contains("line 1"), std::runtime_error);
  CHECK_THROWS_AS(
      parse_instance_text("[algebra]\ndimension = 1\nunit = 1/0\n", "t"),
      std::runtime_error);
  CHECK_THROWS_AS(parse_instance_text("[bogus]\n", "t"), std::runtime_error);
  CHECK_THROWS_AS(
      parse_instance_text("[algebra]\nmystery = 1\n", "t"),
      std::runtime_error);
}

TEST_CASE("null space of a dense system") {
  // x + y + z = 0, x - z = 0
  std::vector<RVec> rows = {{Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(0), Rat(-1)}};
  auto ns = nullspace(rows, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& row : rows) {
    Rat dot(0);
    for (int i = 0; i < 3; ++i) dot += row[i] * ns[0][i];
    CHECK(is_zero(dot));
  }
}
