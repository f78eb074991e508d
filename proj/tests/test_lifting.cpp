#include <doctest.h>

#include "finloc/corpus.hpp"
#include "finloc/lifting.hpp"

using namespace finloc;

namespace {

const FiniteSpace kPoint = FiniteSpace::point();
const FiniteSpace kEmpty = corpus::empty_space();
const FiniteSpace kD2 = FiniteSpace::discrete({"0", "1"});

Arrow identity(const FiniteSpace& x) { return ContinuousMap::identity(x); }

}  // namespace

TEST_CASE("lifting squares") {
  const FiniteSpace s = FiniteSpace::sierpinski();
  const LiftingSquare forced(identity(s), identity(s), Arrow(s, s, {0, 1}), Arrow(s, s, {0, 1}));
  CHECK(enumerate_lifts(forced) == std::vector<PointMap>{{0, 1}});

  const Arrow e2p = corpus::empty_to_point();
  const LiftingSquare none(e2p, Arrow(kEmpty, kPoint, {}), Arrow(kEmpty, kEmpty, {}), identity(kPoint));
  CHECK(enumerate_lifts(none).empty());
  CHECK_FALSE(has_lift(none));

  const LiftingSquare two(e2p, Arrow(kD2, kPoint, {0, 0}), Arrow(kEmpty, kD2, {}), identity(kPoint));
  CHECK(enumerate_lifts(two).size() == 2);

  const Arrow pick(kPoint, kD2, {0});
  CHECK_THROWS_AS(LiftingSquare(pick, identity(kD2), pick, Arrow(kD2, kD2, {1, 1})), NonCommutingError);
}

TEST_CASE("rlp") {
  CHECK(rlp(corpus::fold_map(), {}).holds);
  const std::vector<Arrow> s{corpus::empty_to_point()};
  CHECK(rlp(Arrow(kD2, kPoint, {0, 0}), s).holds);
  CHECK(rlp(identity(kPoint), s).holds);
  const LiftVerdict v = rlp(Arrow(kEmpty, kPoint, {}), s);
  CHECK_FALSE(v.holds);
  CHECK(v.witness.has_value());
}

TEST_CASE("pushout products") {
  const Arrow e = corpus::empty_to_point();
  const PushoutProduct pp = pushout_product(e, e);
  CHECK(pp.map.source().size() == 0);
  CHECK(pp.map.target().size() == 1);
  CHECK(find_arrow_iso(pp.map, e).has_value());

  const FiniteSpace s = FiniteSpace::sierpinski();
  const Arrow bang(kEmpty, s, {});
  const Arrow f(kD2, kPoint, {0, 0});
  const Arrow lhs = pushout_product(bang, f).map;
  const ProductSpace sx = product(s, kD2), sy = product(s, kPoint);
  const Arrow rhs(sx.space, sy.space, {0, 0, 1, 1});
  CHECK(find_arrow_iso(lhs, rhs).has_value());

  const Arrow g(kPoint, s, {1});
  CHECK(find_arrow_iso(pushout_product(f, g).map, pushout_product(g, f).map).has_value());
}

TEST_CASE("pullback powers") {
  const FiniteSpace s = FiniteSpace::sierpinski();
  const Arrow i(kPoint, s, {0});
  const PullbackPower id = pullback_power(identity(s), i);
  CHECK(id.map.injective());
  CHECK(id.map.surjective());
  CHECK(find_homeomorphism(id.map.source(), id.map.target()).has_value());

  const Arrow g(s, kPoint, {0, 0});
  const PullbackPower unit = pullback_power(g, corpus::empty_to_point());
  CHECK(find_arrow_iso(unit.map, g).has_value());
}

TEST_CASE("pushout-product / pullback-power adjunction on a few triples") {
  const Arrow e = corpus::empty_to_point();
  const Arrow fold = corpus::fold_map();
  const FiniteSpace s = FiniteSpace::sierpinski();
  const std::vector<Arrow> arrows{e, fold, Arrow(kPoint, s, {1}), Arrow(s, kPoint, {0, 0}), Arrow(kD2, s, {0, 1})};
  for (const Arrow& f : arrows)
    for (const Arrow& i : arrows)
      for (const Arrow& g : arrows)
        CHECK(lifts_against(pushout_product(f, i).map, g).holds == lifts_against(f, pullback_power(g, i).map).holds);
}

TEST_CASE("bounded factorization") {
  const std::vector<Arrow> s{corpus::empty_to_point()};
  const Arrow already(kD2, kPoint, {0, 0});
  const FactorizationTrace done = bounded_factorize(already, s, 3);
  CHECK(done.stages.empty());
  CHECK(done.verdict == FactorizationVerdict::complete);
  CHECK(done.left.image() == PointMap{0, 1});

  const Arrow cells(kEmpty, kD2, {});
  const FactorizationTrace one = bounded_factorize(cells, s, 1);
  CHECK(one.verdict == FactorizationVerdict::complete);
  REQUIRE(one.stages.size() == 1);
  CHECK(one.stages[0].problems.size() == 2);
  CHECK(one.right.injective());
  CHECK(one.right.surjective());
  CHECK(replay_trace(one, s));
  CHECK(rlp(one.right, s).holds);

  const std::vector<Arrow> fold{corpus::fold_map()};
  const Arrow collapse(FiniteSpace::discrete({"a", "b", "c"}), kD2, {0, 0, 1});
  const FactorizationTrace fc = bounded_factorize(collapse, fold, 3);
  CHECK(fc.verdict == FactorizationVerdict::complete);
  CHECK(rlp(fc.right, fold).holds);
  CHECK(replay_trace(fc, fold));

  const FactorizationTrace zero = bounded_factorize(cells, s, 0);
  CHECK(zero.verdict == FactorizationVerdict::partial);
  CHECK(verdict_name(zero.verdict) == "PARTIAL");
}

TEST_CASE("regression set verdicts") {
  for (const auto& c : corpus::factorization_regression()) {
    const FactorizationTrace t = bounded_factorize(c.map, c.generators, c.steps);
    CHECK(replay_trace(t, c.generators));
    CHECK((t.verdict == FactorizationVerdict::complete) == rlp(t.right, c.generators).holds);
  }
}

TEST_CASE("retracts") {
  const Arrow f = corpus::fold_map();
  CHECK(retract_check(f, f).has_value());
  CHECK_FALSE(retract_check(corpus::empty_to_point(), identity(kEmpty)).has_value());
  CHECK(retract_check(identity(kPoint), identity(FiniteSpace::sierpinski())).has_value());
}

TEST_CASE("arrow automorphisms") {
  CHECK(arrow_automorphisms(Arrow(kD2, kPoint, {0, 0})).size() == 2);
  CHECK(arrow_automorphisms(corpus::empty_to_point()).size() == 1);
}
