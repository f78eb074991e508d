#include <doctest.h>

#include "finloc/poset.hpp"
#include "finloc/space.hpp"

using namespace finloc;

namespace {

// Independent oracle: every subset closed downwards, tested pair by pair.
std::size_t brute_downsets(const FinitePoset& p) {
  std::size_t count = 0;
  const std::size_t n = p.size();
  for (Mask u = 0; u < (Mask{1} << n); ++u) {
    bool ok = true;
    for (std::size_t y = 0; y < n && ok; ++y)
      for (std::size_t x = 0; x < n && ok; ++x)
        if (contains(u, y) && p.leq(x, y) && !contains(u, x)) ok = false;
    count += ok;
  }
  return count;
}

FinitePoset grid() {
  return FinitePoset::validate({"00", "01", "10", "11"}, {{"00", "01"}, {"00", "10"}, {"01", "11"}, {"10", "11"}});
}

}  // namespace

TEST_CASE("validate builds chains and singletons") {
  const FinitePoset c = FinitePoset::validate({"a", "b"}, {{"a", "b"}});
  CHECK(c.leq(0, 1));
  CHECK_FALSE(c.leq(1, 0));
  CHECK(c.leq(0, 0));
  CHECK(c.covers() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});

  const FinitePoset s = FinitePoset::validate({"a"}, {});
  CHECK(s.size() == 1);
  CHECK(s.leq(0, 0));
}

TEST_CASE("validate rejects cycles, duplicates and unknown labels") {
  CHECK_THROWS_AS(FinitePoset::validate({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
  CHECK_THROWS_AS(FinitePoset::validate({"a", "a"}, {}), DuplicateLabelError);
  CHECK_THROWS_AS(FinitePoset::validate({"a"}, {{"a", "z"}}), UnknownLabelError);
}

TEST_CASE("transitive closure is applied") {
  const FinitePoset p = FinitePoset::validate({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(p.leq(0, 2));
  CHECK(p.covers().size() == 2);
}

TEST_CASE("downset counts") {
  const FinitePoset chain = FinitePoset::validate({"0", "1"}, {{"0", "1"}});
  CHECK(downsets(chain).downsets == std::vector<Mask>{0b00, 0b01, 0b11});

  const FinitePoset anti = FinitePoset::validate({"a", "b"}, {});
  CHECK(downsets(anti).downsets.size() == 4);

  const FinitePoset g = grid();
  CHECK(downsets(g).downsets.size() == 6);
  CHECK(brute_downsets(g) == 6);
  CHECK(downsets_by_filter(g).size() == 6);
}

TEST_CASE("downsets agree with the brute oracle on assorted posets") {
  const std::vector<FinitePoset> ps{
      grid(),
      FinitePoset::validate({"a", "b", "c", "d", "e"}, {{"a", "c"}, {"b", "c"}, {"c", "d"}, {"c", "e"}}),
      FinitePoset::validate({"a", "b", "c", "d", "e", "f"}, {}),
  };
  for (const auto& p : ps) {
    const auto fam = downsets(p);
    CHECK(fam.downsets.size() == brute_downsets(p));
    for (Mask u : fam.downsets) CHECK(is_downset(p, u));
  }
}

TEST_CASE("downset_image") {
  const FinitePoset two = FinitePoset::validate({"0", "1"}, {{"0", "1"}});
  const FinitePoset three = FinitePoset::validate({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}});

  const MonotoneMap id(two, two, {0, 1});
  for (Mask u : downsets(two).downsets) CHECK(downset_image(id, u) == u);

  const MonotoneMap f(two, three, {0, 2});
  CHECK(downset_image(f, 0b11) == 0b111);

  const MonotoneMap top(two, three, {2, 2});
  CHECK(downset_image(top, 0b01) == 0b111);

  CHECK_THROWS_AS(downset_image(f, 0b10), NotDownsetError);
  CHECK_THROWS_AS(MonotoneMap(two, two, {1, 0}), NotMonotoneError);
}

TEST_CASE("spaces validate their opens") {
  CHECK_THROWS_AS(FiniteSpace::from_opens({"a", "b"}, {0b01, 0b11}), InvalidSpaceError);
  CHECK_THROWS_AS(FiniteSpace::from_opens({"a", "b"}, {0b00, 0b01, 0b10}), InvalidSpaceError);
  const FiniteSpace s = FiniteSpace::sierpinski();
  CHECK(s.is_open(0b10));
  CHECK_FALSE(s.is_open(0b01));
  CHECK(s.leq(0, 1));
  CHECK(s.opens().size() == 3);
  CHECK_THROWS_AS(ContinuousMap(s, s, {1, 0}), NotContinuousError);
}

TEST_CASE("irreducible closed sets") {
  CHECK(irreducible_closed_sets(FiniteSpace::discrete({"a", "b"})) == std::vector<Mask>{0b01, 0b10});
  CHECK(irreducible_closed_sets(FiniteSpace::sierpinski()) == std::vector<Mask>{0b01, 0b11});
  CHECK(irreducible_closed_sets(FiniteSpace::indiscrete({"a", "b"})) == std::vector<Mask>{0b11});
}

TEST_CASE("soberification") {
  const FiniteSpace s = FiniteSpace::sierpinski();
  CHECK(is_sober(s));
  CHECK(find_homeomorphism(soberify(s).space, s).has_value());

  const SoberQuotient q = soberify(FiniteSpace::indiscrete({"a", "b"}));
  CHECK(q.space.size() == 1);
  CHECK_FALSE(is_sober(FiniteSpace::indiscrete({"a", "b"})));

  const FiniteSpace d = FiniteSpace::discrete({"a", "b", "c"});
  CHECK(find_homeomorphism(soberify(d).space, d).has_value());
}

TEST_CASE("sober gluing") {
  const FiniteSpace s = FiniteSpace::sierpinski();
  // y is open but not closed in the Sierpinski space, so B = {y} breaks the hypotheses.
  CHECK_THROWS_AS(sober_glue_check(s, 0b01, 0b10), HypothesisError);
  // A = {y} is not closed.
  CHECK_THROWS_AS(sober_glue_check(s, 0b10, 0b01), HypothesisError);

  const SoberGlueVerdict all = sober_glue_check(s, 0b11, 0b00);
  CHECK(all.a_sober);
  CHECK(all.x_sober);
  CHECK(all.implication_holds);

  const SoberGlueVerdict d = sober_glue_check(FiniteSpace::discrete({"a", "b"}), 0b00, 0b11);
  CHECK(d.b_hausdorff);
  CHECK(d.x_sober);
  CHECK(d.implication_holds);
}

TEST_CASE("separation") {
  CHECK(is_hausdorff(FiniteSpace::discrete({"a", "b"})));
  CHECK_FALSE(is_hausdorff(FiniteSpace::sierpinski()));
  CHECK(FiniteSpace::sierpinski().is_t0());
  CHECK_FALSE(FiniteSpace::indiscrete({"a", "b"}).is_t0());
}
