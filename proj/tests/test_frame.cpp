#include <doctest.h>

#include "finloc/corpus.hpp"
#include "finloc/frame.hpp"

using namespace finloc;

namespace {

FrameRef diamond() {
  return frame_from_poset(FinitePoset::validate(
      {"0", "a", "b", "c", "1"}, {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}}));
}

}  // namespace

TEST_CASE("frame validation") {
  const FrameRef c = chain_frame(3);
  CHECK(c->size() == 3);
  CHECK(c->meet(1, 2) == 1);
  CHECK(c->join(0, 1) == 1);
  CHECK(boolean_frame(2)->size() == 4);

  try {
    (void)diamond();
    FAIL("M3 accepted");
  } catch (const NotDistributiveError& e) {
    CHECK(e.a() != e.b());
  }
  CHECK_THROWS_AS(frame_from_poset(FinitePoset::validate({"a", "b"}, {})), NotLatticeError);
}

TEST_CASE("distributive law holds on every table") {
  for (const FrameRef& f : corpus::frames(6))
    for (Elem a = 0; a < static_cast<Elem>(f->size()); ++a)
      for (Elem b = 0; b < static_cast<Elem>(f->size()); ++b)
        for (Elem c = 0; c < static_cast<Elem>(f->size()); ++c)
          CHECK(f->meet(a, f->join(b, c)) == f->join(f->meet(a, b), f->meet(a, c)));
}

TEST_CASE("frame homs") {
  const FrameRef c = chain_frame(3);
  const FrameRef two = two_frame();
  CHECK_NOTHROW(FrameHom::identity(c));
  CHECK_NOTHROW(FrameHom(two, c, {0, 2}));
  CHECK_NOTHROW(FrameHom(c, two, {0, 0, 1}));
  CHECK_NOTHROW(FrameHom(c, two, {0, 1, 1}));
  CHECK_THROWS_AS(FrameHom(c, two, {0, 1, 0}), NotHomError);
  CHECK_THROWS_AS(FrameHom(two, c, {0, 1}), NotHomError);
  CHECK(enumerate_frame_homs(c, two).size() == 2);
  CHECK(enumerate_frame_homs(two, c).size() == 1);
}

TEST_CASE("hom enumeration matches brute force") {
  const auto fs = corpus::frames(4);
  for (const auto& l : fs)
    for (const auto& m : fs) CHECK(enumerate_frame_homs(l, m).size() == enumerate_frame_homs_brute(l, m).size());
}

TEST_CASE("right adjoints") {
  const FrameRef c = chain_frame(3);
  CHECK(right_adjoint(FrameHom::identity(c)).right == std::vector<Elem>{0, 1, 2});
  const GaloisConnection g = right_adjoint(FrameHom(two_frame(), c, {0, 2}));
  CHECK(g.right == std::vector<Elem>{0, 0, 1});
  CHECK(g.right_surjective());
  CHECK(g.left.injective());
}

TEST_CASE("injective/surjective dualities on small frames") {
  for (const auto& l : corpus::frames(4))
    for (const auto& m : corpus::frames(4))
      for (const FrameHom& f : enumerate_frame_homs(l, m)) {
        const GaloisConnection g = right_adjoint(f);
        CHECK(f.injective() == g.right_surjective());
        CHECK(f.surjective() == g.right_injective());
      }
}

TEST_CASE("way below collapses to the order") {
  const FrameRef c = chain_frame(3);
  CHECK(way_below(*c, 1, 2));
  CHECK_FALSE(way_below(*c, 2, 1));
  for (const FrameRef& f : corpus::frames(5)) {
    CHECK(is_locally_compact(*f));
    for (Elem a = 0; a < static_cast<Elem>(f->size()); ++a)
      for (Elem b = 0; b < static_cast<Elem>(f->size()); ++b) CHECK(way_below(*f, a, b) == f->leq(a, b));
  }
}

TEST_CASE("nuclei from prenuclei") {
  const FrameRef c = chain_frame(3);
  CHECK(nucleus_from_prenucleus(Prenucleus(c, {0, 1, 2})).map() == std::vector<Elem>{0, 1, 2});
  CHECK(nucleus_from_prenucleus(Prenucleus(c, {2, 2, 2})).map() == std::vector<Elem>{2, 2, 2});
  const Prenucleus k0(c, {1, 1, 2});
  const Nucleus k = nucleus_from_prenucleus(k0);
  CHECK(k.map() == std::vector<Elem>{1, 1, 2});
  CHECK(k.fixed_points() == std::vector<Elem>{1, 2});
  CHECK(iterate_to_fixpoint(k0) == k.map());
  CHECK_THROWS_AS(Prenucleus(c, {0, 0, 2}), NotPrenucleusError);
}

TEST_CASE("a prenucleus that needs iteration") {
  // Monotone inflationary maps on a chain are prenuclei; 0 -> 1 -> 2 needs two rounds.
  const FrameRef c = chain_frame(4);
  const Prenucleus k0(c, {1, 2, 2, 3});
  CHECK_FALSE(is_nucleus(*c, k0.map()));
  const Nucleus k = nucleus_from_prenucleus(k0);
  CHECK(k.map() == std::vector<Elem>{2, 2, 2, 3});
  CHECK(iterate_to_fixpoint(k0) == k.map());
}
