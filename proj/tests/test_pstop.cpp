#include <doctest.h>

#include <random>

#include "finloc/pstop.hpp"

using namespace finloc;

namespace {

// X = {1, 2} with lim(1) = {1}, lim(2) = {1, 2}.
PsSpace sierpinski_like() { return PsSpace({"1", "2"}, {0b01, 0b11}); }

std::vector<PointMap> all_maps(std::size_t n, std::size_t m) {
  std::vector<PointMap> out;
  PointMap f(n, 0);
  for (;;) {
    out.push_back(f);
    std::size_t k = 0;
    while (k < n && ++f[k] == m) f[k++] = 0;
    if (k == n) break;
  }
  return out;
}

}  // namespace

TEST_CASE("pseudotopology axiom") {
  CHECK_THROWS_AS(PsSpace({"a", "b"}, {0b10, 0b11}), InvalidPsSpaceError);
  CHECK_THROWS_AS(PsSpace({"a", "a"}, {0b01, 0b10}), DuplicateLabelError);
  CHECK(all_pseudotopologies(2, false).size() == 4);
  CHECK(all_pseudotopologies(3, false).size() == 64);
}

TEST_CASE("filter limits") {
  const PsSpace xi = sierpinski_like();
  CHECK(lim_filter(xi, {0b01}) == xi.lim(0));
  CHECK(lim_filter(xi, {0b10}) == xi.lim(1));
  CHECK(lim_filter(xi, {0b11}) == 0b01);
  CHECK(lim_filter(PsSpace::indiscrete({"a", "b", "c"}), {0b111}) == 0b111);
  CHECK(lim_filter(xi, {0}) == xi.universe());
}

TEST_CASE("continuity") {
  const PsSpace xi = sierpinski_like();
  CHECK(check_continuity({0, 1}, xi, xi).continuous);
  CHECK(check_continuity({1, 1}, xi, xi).continuous);
  CHECK(check_continuity({0, 0}, xi, xi).continuous);
  const PsSpace d = PsSpace::discrete({"1", "2"});
  CHECK(check_continuity({0, 1}, d, xi).continuous);
  const ContinuityVerdict back = check_continuity({0, 1}, xi, d);
  CHECK_FALSE(back.continuous);
  CHECK(back.witness.has_value());
}

TEST_CASE("lattice of pseudotopologies") {
  const PsSpace d = PsSpace::discrete({"a", "b", "c"});
  const PsSpace i = PsSpace::indiscrete({"a", "b", "c"});
  CHECK(ps_meet(d, d) == d);
  for (const PsSpace& xi : all_pseudotopologies(3, false)) {
    CHECK(ps_join(xi, i) == xi);
    CHECK(ps_meet(xi, d) == xi);
  }
  CHECK_THROWS_AS(ps_meet(d, sierpinski_like()), CarrierMismatchError);
  const PsSpace fold = final_structure({"*"}, {PsSpace::discrete({"0", "1"})}, {{0, 0}});
  CHECK(fold == PsSpace::discrete({"*"}));
}

TEST_CASE("topological modification") {
  const FiniteSpace td = top_modification(PsSpace::discrete({"a", "b"}));
  CHECK(td.opens().size() == 4);
  const FiniteSpace ti = top_modification(PsSpace::indiscrete({"a", "b"}));
  CHECK(ti.opens() == std::vector<Mask>{0b00, 0b11});
  const FiniteSpace ts = top_modification(sierpinski_like());
  CHECK(ts.opens() == std::vector<Mask>{0b00, 0b10, 0b11});
  CHECK(is_topological(sierpinski_like()));
  CHECK(as_pseudotopology(ts) == sierpinski_like());
}

TEST_CASE("subspaces") {
  const PsSpace xi = sierpinski_like();
  CHECK(ps_subspace(xi, 0b11) == xi);
  CHECK(ps_subspace(xi, 0b01).size() == 1);
  const PsSpace two = ps_subspace(xi, 0b10);
  CHECK(two.labels() == std::vector<std::string>{"2"});
  CHECK(two.lim(0) == 0b1);
  CHECK_THROWS_AS(ps_subspace(xi, 0), EmptySubspaceError);
  for (Mask a = 1; a <= 3; ++a) {
    const FiniteSpace lhs = top_modification(ps_subspace(xi, a));
    for (Mask u : subspace(top_modification(xi), a).opens()) CHECK(lhs.is_open(u));
  }
  CHECK(restrict_map({1, 1, 0}, 0b011, 0b010) == PointMap{0, 0});
  CHECK_THROWS_AS(restrict_map({1, 1, 0}, 0b011, 0b001), CarrierMismatchError);
}

TEST_CASE("grills, adherence, compactness") {
  const auto g = grill(3, {0b011});
  CHECK(g.size() == 6);
  for (Mask m : g) CHECK((m & 0b011) != 0);
  for (std::size_t n = 1; n <= 3; ++n)
    for (const PsSpace& xi : all_pseudotopologies(n, false)) {
      CHECK(adherence(xi, {xi.universe()}) == xi.universe());
      CHECK(compact_at_literal(xi, xi.universe(), xi.universe()));
      CHECK(compact_at(xi, xi.universe(), xi.universe()));
    }
}

TEST_CASE("continuous bijections onto discrete spaces") {
  const PsSpace d = PsSpace::discrete({"1", "2"});
  for (const PsSpace& xi : all_pseudotopologies(2, false))
    for (const PointMap& f : std::vector<PointMap>{{0, 1}, {1, 0}}) {
      if (!check_continuity(f, xi, d).continuous) continue;
      PointMap inv(2);
      inv[f[0]] = 0;
      inv[f[1]] = 1;
      CHECK(check_continuity(inv, d, xi).continuous);
      CHECK(xi.lims() == std::vector<Mask>{0b01, 0b10});
    }
}

TEST_CASE("ultrafilter continuity matches filter continuity at 4 points") {
  const auto four = all_pseudotopologies(4, true);
  std::mt19937_64 rng(7);
  const auto maps = all_maps(4, 4);
  std::size_t checked = 0;
  for (const PsSpace& xi : four)
    for (std::size_t k = 0; k < 40; ++k) {
      const PsSpace& zeta = four[rng() % four.size()];
      for (std::size_t r = 0; r < 8; ++r) {
        const PointMap& f = maps[rng() % maps.size()];
        CHECK(check_continuity(f, xi, zeta).continuous == continuous_on_ultrafilters(f, xi, zeta));
        ++checked;
      }
    }
  // Every map between a fixed pair, including all the continuous ones.
  const PsSpace d = PsSpace::discrete({"a", "b", "c", "d"});
  for (const PsSpace& zeta : four)
    for (const PointMap& f : maps) CHECK(check_continuity(f, d, zeta).continuous == continuous_on_ultrafilters(f, d, zeta));
  CHECK(checked > 0);
}
