#include "doctest.h"
#include "support.hpp"

#include "trisect/moves.hpp"

using namespace trisect;
using support::twisted;
using support::v2;
using support::v4;

namespace {

const TorusDiagram kFirst = twisted(v2(1, 1), v2(-1, 1), 1);

InvariantVector iv(long long a, long long b, long long c) { return {{Integer(a), Integer(b), Integer(c)}}; }

Matrix2i rows(long long a, long long b, long long c, long long d) {
  Matrix2i m;
  m << a, b, c, d;
  return m;
}

TorusDiagram sigma2_power(TorusDiagram d, int n) {
  for (int i = 0; i < n; ++i) d = apply_sigma2(d);
  return d;
}

}  // namespace

TEST_CASE("move words") {
  const MoveWord w = MoveWord::parse("D2, D2',D1,D1'");
  CHECK(w.size() == 4);
  CHECK(w.str() == "D2,D2',D1,D1'");
  CHECK(w.uses_delta1());
  CHECK(w.reduced().empty());
  CHECK(MoveWord::parse("").empty());
  CHECK(MoveWord::parse("D1,D2").inverse() == MoveWord::parse("D2',D1'"));
  CHECK((MoveWord::parse("D1") * MoveWord::parse("D2")).str() == "D1,D2");
  CHECK(MoveWord::rotation() == MoveWord::parse("D1,D1,D1"));
  CHECK_THROWS_AS(MoveWord::parse("D3"), MoveWordParseError);
  CHECK_THROWS_AS(MoveWord::parse("D1,,D2"), MoveWordParseError);
  CHECK_THROWS_AS(MoveWord::parse("D1,"), MoveWordParseError);
  CHECK(inverse(Move::Delta1) == Move::Delta1Inverse);
  CHECK(std::string(move_token(Move::Delta2Inverse)) == "D2'");
}

TEST_CASE("sigma2 examples") {
  const TorusDiagram image = apply_sigma2(kFirst);
  CHECK(image.a2 == v2(0, 1));
  CHECK(image.b2 == v2(-1, 3));
  CHECK(image.c2 == v2(1, 0));
  CHECK(image.monodromy == kFirst.monodromy);
  CHECK(invariant(image) == iv(1, 2, 1));

  const TorusDiagram id = support::standard_identity();
  const TorusDiagram rotated = apply_sigma2(id);
  CHECK(rotated.a2 == id.b2);
  CHECK(rotated.b2 == id.c2);
  CHECK(rotated.c2 == id.a2);

  CHECK(apply_sigma2_inverse(apply_sigma2(kFirst)) == kFirst);
  CHECK(apply_sigma2(apply_sigma2_inverse(kFirst)) == kFirst);
}

TEST_CASE("sigma2 cubed witness") {
  CHECK(sigma2_cubed_witness(twisted(v2(0, 1), v2(1, 0), 1)) == rows(1, -1, 0, 1));
  const Matrix2i w = sigma2_cubed_witness(kFirst);
  const TorusDiagram cubed = sigma2_power(kFirst, 3);
  CHECK(cubed.a2 == Vector2i(w * kFirst.a2));
  CHECK(cubed.b2 == Vector2i(w * kFirst.b2));
  CHECK(cubed.c2 == Vector2i(w * kFirst.c2));
  CHECK(apply_word(kFirst, MoveWord::parse("D2,D2,D2")) == cubed);

  const TorusDiagram id = support::standard_identity();
  CHECK(sigma2_cubed_witness(id) == Matrix2i::Identity());
  CHECK(sigma2_power(id, 3) == id);
}

TEST_CASE("sigma1 examples") {
  const Genus2Diagram lift = embed_torus(kFirst);
  const Genus2Diagram image = apply_sigma1(lift);
  CHECK(image.a1 == lift.b1);
  CHECK(image.b1 == lift.c1);
  CHECK(image.c1 == lift.a1);
  CHECK(image.a2 == lift.a2);
  CHECK(image.b2 == lift.b2);
  CHECK(image.c2 == lift.c2);
  CHECK(invariant(image) == iv(1, 1, 2));
  CHECK(validate(image).empty());
  CHECK(apply_sigma1_inverse(image) == lift);

  // s = +1 model: t_{t_{b1}(c1)}(b1) = -c1
  const Vector4i core = transvection(lift.b1, Integer(1), lift.c1);
  CHECK(transvection(core, Integer(1), lift.b1) == Vector4i(-lift.c1));

  Genus2Diagram variant = lift;
  variant.a2 = v4(1, 0, 1, 0);
  const Genus2Diagram moved = apply_sigma1(variant);
  CHECK(moved.a2 == v4(0, -1, 1, 0));
  CHECK(intersection(moved.a1, moved.a2) == 0);
  CHECK(validate(moved).empty());

  const Genus2Diagram thrice = apply_word(lift, MoveWord::rotation());
  CHECK(thrice.a1 == lift.a1);
  CHECK(thrice.b1 == lift.b1);
  CHECK(thrice.c1 == lift.c1);
  CHECK(invariant(thrice) == invariant(lift));

  CHECK(apply_word(lift, MoveWord::parse("D2,D2'")) == lift);
  CHECK_THROWS_WITH_AS(apply_word(kFirst, MoveWord::parse("D1")), "sigma1 requires genus2 model", MoveError);
}

TEST_CASE("transform and canonical form examples") {
  const CanonicalForm c = canonical_form(kFirst);
  CHECK(c.diagram.a2 == kFirst.a2);
  CHECK(c.diagram.b2 == kFirst.b2);
  CHECK(c.diagram.c2 == kFirst.c2);
  CHECK(c.diagram.monodromy.twist->core == v2(1, -1));  // (-1,1) up to sign
  CHECK(canonical_form(c.diagram).diagram == c.diagram);

  support::Random rng(31);
  for (int i = 0; i < 1000; ++i) {
    const TorusDiagram d = rng.torus_diagram();
    const CanonicalForm cf = canonical_form(d);
    REQUIRE(canonical_form(cf.diagram).diagram == cf.diagram);
    REQUIRE(determinant(cf.basis_change) == 1);
    // the basis change maps every class to +- its canonical class
    const TorusDiagram moved = transform(d, cf.basis_change);
    for (Slot s : {Slot::A2, Slot::B2, Slot::C2})
      REQUIRE((moved[s] == cf.diagram[s] || moved[s] == Vector2i(-cf.diagram[s])));
    const Matrix2i m = rng.sl2();
    REQUIRE(canonical_form(transform(d, m)).diagram == cf.diagram);
    REQUIRE(canonical_key(transform(d, m)) == canonical_key(d));
  }
}

TEST_CASE("equivalent examples") {
  const TorusDiagram id = support::standard_identity();
  const auto witness = equivalent(id, apply_sigma2(id));
  REQUIRE(witness);
  CHECK(witness->matrix == rows(0, -1, 1, -1));
  CHECK_FALSE(equivalent(kFirst, apply_sigma2(kFirst)));

  // exponent must agree
  CHECK_FALSE(equivalent(twisted(v2(1, 1), v2(-1, 1), 1), twisted(v2(1, 1), v2(-1, 1), -1)));
  // rank-1 configuration: every class parallel
  const TorusDiagram flat = twisted(v2(0, 1), v2(0, 1), 1);
  CHECK(equivalent(flat, flat));

  // a1 moved off the standard block: same diagram after canonicalization
  Genus2Diagram moved = embed_torus(kFirst);
  for (Vector4i* w : {&moved.a1, &moved.b1, &moved.c1, &moved.a2, &moved.b2, &moved.c2})
    *w = transvection(v4(0, 1, 1, 0), Integer(1), *w);
  CHECK(canonical_key(surgery_project(moved)) == canonical_key(kFirst));
  CHECK(equivalent(surgery_project(moved), kFirst));
}

TEST_CASE("equivalence agrees with canonical forms on random pairs") {
  support::Random rng(32);
  for (int i = 0; i < 1000; ++i) {
    const TorusDiagram d = rng.torus_diagram();
    const Matrix2i m = rng.sl2();
    TorusDiagram image = transform(d, m);
    image.c2 = Vector2i(-image.c2);  // per-class sign flips are allowed
    const auto w = equivalent(d, image);
    REQUIRE(w);
    REQUIRE(determinant(w->matrix) == 1);
    REQUIRE(equivalent(d, d));
    REQUIRE(equivalent(image, d));

    const TorusDiagram other = rng.torus_diagram();
    const bool same_key = canonical_key(d) == canonical_key(other);
    REQUIRE(same_key == equivalent(d, other).has_value());
  }
}

TEST_CASE("sigma properties on random diagrams") {
  support::Random rng(33);
  for (int i = 0; i < 1000; ++i) {
    const TorusDiagram d = rng.torus_diagram();
    const InvariantVector base = invariant(d);
    TorusDiagram current = d;
    for (int n = 1; n <= 9; ++n) {
      current = apply_sigma2(current);
      REQUIRE(invariant(current) == base.rotated(n));
    }
    REQUIRE(apply_sigma2_inverse(apply_sigma2(d)) == d);
    const TorusDiagram cubed = sigma2_power(d, 3);
    const Matrix2i w = sigma2_cubed_witness(d);
    REQUIRE(cubed.a2 == Vector2i(w * d.a2));
    REQUIRE(cubed.b2 == Vector2i(w * d.b2));
    REQUIRE(cubed.c2 == Vector2i(w * d.c2));
    REQUIRE(equivalent(d, cubed));

    const Genus2Diagram g = rng.genus2_diagram();
    const Genus2Diagram image = apply_sigma1(g);
    REQUIRE(validate(image).empty());
    REQUIRE(invariant(image) == invariant(g));
    REQUIRE(apply_sigma1_inverse(image) == g);
    REQUIRE(apply_sigma2_inverse(apply_sigma2(g)) == g);
    REQUIRE(surgery_project(apply_sigma2(g)) == apply_sigma2(surgery_project(g)));
  }
}

TEST_CASE("sigma1 invariance in both sign models") {
  support::Random rng(34);
  std::array<int, 2> seen{};
  while (seen[0] < 1000 || seen[1] < 1000) {
    const Genus2Diagram g = rng.genus2_diagram();
    const int model = g.sign() > 0 ? 0 : 1;
    ++seen[model];
    REQUIRE(invariant(apply_sigma1(g)) == invariant(g));
    REQUIRE(invariant(apply_sigma1_inverse(g)) == invariant(g));
  }
}

TEST_CASE("orbit examples") {
  const OrbitGraph id = orbit(support::standard_identity(), 3);
  CHECK(id.nodes.size() == 1);

  const OrbitGraph first = orbit(kFirst, 2);
  REQUIRE(first.nodes.size() >= 3);
  std::vector<std::string> labels;
  for (const auto& n : first.nodes) labels.push_back(n.invariant.str());
  CHECK(std::find(labels.begin(), labels.end(), "(1, 1, 2)") != labels.end());
  CHECK(std::find(labels.begin(), labels.end(), "(1, 2, 1)") != labels.end());
  CHECK(std::find(labels.begin(), labels.end(), "(2, 1, 1)") != labels.end());

  CHECK(orbit(kFirst, 0).nodes.size() == 1);
  CHECK(orbit(kFirst, 0).edges.empty());

  const OrbitGraph lifted = orbit(embed_torus(kFirst), 2);
  CHECK(lifted.nodes.size() >= 3);
  CHECK(lifted.nodes[0].key == canonical_key(kFirst));

  // deterministic
  const OrbitGraph again = orbit(kFirst, 2);
  REQUIRE(again.nodes.size() == first.nodes.size());
  for (std::size_t i = 0; i < first.nodes.size(); ++i) CHECK(again.nodes[i].key == first.nodes[i].key);
}
