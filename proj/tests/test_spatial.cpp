#include <doctest.h>

#include "finloc/corpus.hpp"
#include "finloc/spatial.hpp"

using namespace finloc;

TEST_CASE("omega") {
  CHECK(find_frame_iso(omega(FiniteSpace::point()).frame, two_frame()).has_value());
  CHECK(find_frame_iso(omega(FiniteSpace::sierpinski()).frame, chain_frame(3)).has_value());
  CHECK(find_frame_iso(omega(FiniteSpace::discrete({"a", "b"})).frame, boolean_frame(2)).has_value());
}

TEST_CASE("points") {
  CHECK(pt(two_frame()).space.size() == 1);
  const PointSpace s = pt(chain_frame(3));
  CHECK(s.points.size() == 2);
  CHECK(find_homeomorphism(s.space, FiniteSpace::sierpinski()).has_value());
  CHECK(find_homeomorphism(pt(boolean_frame(2)).space, FiniteSpace::discrete({"a", "b"})).has_value());
  for (const FrameRef& f : corpus::frames(6)) CHECK(points_by_enumeration(f).size() == pt(f).points.size());
}

TEST_CASE("every finite frame is spatial") {
  CHECK(is_spatial(two_frame()).spatial);
  const SpatialVerdict v = is_spatial(chain_frame(3));
  CHECK(v.spatial);
  CHECK(v.comparison.size() == 3);
  for (const FrameRef& f : corpus::frames(7)) CHECK(is_spatial(f).spatial);
}

TEST_CASE("hom-set bijection") {
  const AdjunctionVerdict a = adjunction_check(FiniteSpace::point(), two_frame());
  CHECK(a.frame_homs == 1);
  CHECK(a.continuous_maps == 1);
  const AdjunctionVerdict s = adjunction_check(FiniteSpace::sierpinski(), chain_frame(3));
  CHECK(s.bijection);
  CHECK(s.frame_homs == s.continuous_maps);
  const AdjunctionVerdict d = adjunction_check(FiniteSpace::discrete({"a", "b"}), boolean_frame(2));
  CHECK(d.bijection);
  CHECK(d.frame_homs == 4);
  CHECK_THROWS_AS(adjunction_check(FiniteSpace::indiscrete({"a", "b"}), two_frame()), HypothesisError);
}

TEST_CASE("spatial products") {
  const SpatialProductWitness w = spatial_product(FiniteSpace::sierpinski(), FiniteSpace::sierpinski());
  CHECK(w.iso);
  CHECK(w.tensor.frame->size() == 6);
  CHECK(w.omega_product.frame->size() == 6);
}
