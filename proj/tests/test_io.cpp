#include <doctest.h>

#include "finloc/corpus.hpp"
#include "finloc/json_io.hpp"
#include "finloc/spatial.hpp"

using namespace finloc;
using io::Json;

TEST_CASE("poset and frame round trips are byte-exact") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const FinitePoset& p : corpus::posets(n)) {
      const Json j = io::poset_to_json(p);
      CHECK(io::poset_to_json(io::poset_from_json(j)).dump() == j.dump());
    }
  for (const FrameRef& f : corpus::frames(6)) {
    const Json j = io::frame_to_json(*f);
    const FrameRef back = io::frame_from_json(j);
    CHECK(io::frame_to_json(*back).dump() == j.dump());
    CHECK(find_frame_iso(back, f).has_value());
  }
}

TEST_CASE("space, map and pseudotopology round trips") {
  for (const FiniteSpace& x : corpus::spaces_up_to(3)) {
    const Json j = io::space_to_json(x);
    CHECK(io::space_to_json(io::space_from_json(j)).dump() == j.dump());
  }
  for (const Arrow& f : corpus::arrows(corpus::spaces_up_to(2), true)) {
    const Json j = io::map_to_json(f);
    CHECK(io::map_to_json(io::map_from_json(j)).dump() == j.dump());
  }
  for (const PsSpace& xi : all_pseudotopologies(3, true)) {
    const Json j = io::psspace_to_json(xi);
    CHECK(io::psspace_to_json(io::psspace_from_json(j)).dump() == j.dump());
  }
}

TEST_CASE("documented formats parse") {
  const Json ps = Json::parse(R"({"points": ["1","2"], "lim": {"1": ["1"], "2": ["1","2"]}})");
  const PsSpace xi = io::psspace_from_json(ps);
  CHECK(xi.lim(0) == 0b01);
  CHECK(xi.lim(1) == 0b11);

  const Json p = Json::parse(R"({"elements": ["a","b"], "leq": [["a","b"]]})");
  CHECK(io::poset_from_json(p).leq(0, 1));

  const Json hom = Json::parse(R"({
    "source": {"elements": ["0","m","1"], "leq": [["0","m"],["m","1"]]},
    "target": {"elements": ["0","1"], "leq": [["0","1"]]},
    "map": {"0": "0", "m": "0", "1": "1"}})");
  const FrameHom h = io::hom_from_json(hom);
  CHECK(h.map() == std::vector<Elem>{0, 0, 1});
  CHECK(io::hom_to_json(io::hom_from_json(io::hom_to_json(h))).dump() == io::hom_to_json(h).dump());
}

TEST_CASE("squares and generators") {
  const FiniteSpace p = FiniteSpace::point();
  const FiniteSpace d2 = FiniteSpace::discrete({"0", "1"});
  const Arrow e = corpus::empty_to_point();
  const LiftingSquare sq(e, Arrow(d2, p, {0, 0}), Arrow(corpus::empty_space(), d2, {}), ContinuousMap::identity(p));
  const Json j = io::square_to_json(sq);
  CHECK(io::square_to_json(io::square_from_json(j)).dump() == j.dump());
  CHECK(io::generators_from_json(Json::array({io::map_to_json(e)})).size() == 1);
  CHECK(io::generators_from_json(Json{{"generators", Json::array({io::map_to_json(e)})}}).size() == 1);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(io::poset_from_json(Json::parse(R"({"leq": []})")), InputError);
  CHECK_THROWS_AS(io::read_json_file("/nonexistent/finloc.json"), InputError);
  CHECK_THROWS_AS(io::poset_from_json(Json::parse(R"({"elements": ["a","b"], "leq": [["a","b"],["b","a"]]})")), CycleError);
}

TEST_CASE("tensor and pushout serializations are canonical") {
  const TensorFrame t = coproduct(two_frame(), chain_frame(3));
  const Json j = io::tensor_to_json(t);
  CHECK(j.at("elements").size() == 3);
  CHECK(j.dump() == io::tensor_to_json(coproduct(two_frame(), chain_frame(3))).dump());
  const FrameHom id = FrameHom::identity(chain_frame(3));
  CHECK(io::pushout_to_json(pushout_loc(id, id)).at("pairs").size() == 3);
}
