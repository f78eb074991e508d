#include <doctest.h>

#include "finloc/colimits.hpp"
#include "finloc/corpus.hpp"
#include "finloc/spatial.hpp"

using namespace finloc;

TEST_CASE("prenuclei on 2 x 2") {
  const PairCarrier c(two_frame(), two_frame());
  const Mask u = c.down(1, 0) | c.down(0, 1);
  const PrenucleiValues v = prenuclei(c, u);
  CHECK(v.sigma0 == u);
  CHECK(v.pi1 == u);
  CHECK(v.pi2 == u);
  CHECK(u == c.nbar());

  const Mask all = full_mask(c.size());
  const PrenucleiValues t = prenuclei(c, all);
  CHECK(t.sigma0 == all);
  CHECK(t.pi1 == all);
  CHECK(t.pi2 == all);
}

TEST_CASE("saturation") {
  const PairCarrier c(chain_frame(3), chain_frame(3));
  CHECK(saturate(c, c.nbar()) == c.nbar());
  CHECK(saturate(c, full_mask(c.size())) == full_mask(c.size()));

  const Mask gens = c.down(1, 2) | c.down(2, 1);
  const Mask s = saturate(c, gens);
  CHECK(is_subset(gens | c.nbar(), s));
  CHECK(s != full_mask(c.size()));
  // Oracle: least saturated downset above the generators among the filtered ones.
  Mask least = full_mask(c.size());
  for (Mask d : saturated_downsets_by_filter(c))
    if (is_subset(gens, d) && popcount(d) < popcount(least)) least = d;
  CHECK(s == least);
  CHECK(saturate_literal(c, gens) == s);
}

TEST_CASE("coproduct basics") {
  for (const FrameRef& l : corpus::frames(5)) {
    const TensorFrame t = coproduct(two_frame(), l);
    CHECK(find_frame_iso(t.frame, l).has_value());
    for (Elem x = 0; x < static_cast<Elem>(l->size()); ++x) {
      CHECK(t.tensor(0, x) == t.nbar());
      CHECK(t.element_of(t.carrier.tensor(1, x)) == t.iota2(x));
    }
  }
  const OmegaFrame os = omega(FiniteSpace::sierpinski());
  const TensorFrame ss = coproduct(os.frame, os.frame);
  CHECK(ss.frame->size() == 6);
  CHECK(saturated_downsets_by_filter(ss.carrier).size() == 6);
  for (Elem x = 0; x < 3; ++x) CHECK(ss.tensor(x, os.frame->bottom()) == ss.nbar());
}

TEST_CASE("iota meets give tensors") {
  const TensorFrame t = coproduct(chain_frame(3), boolean_frame(2));
  for (Elem x = 0; x < 3; ++x)
    for (Elem y = 0; y < 4; ++y) CHECK(t.frame->meet(t.iota1(x), t.iota2(y)) == t.tensor(x, y));
}

TEST_CASE("id (x) f") {
  const FrameRef c = chain_frame(3);
  const TensorFrame lm = coproduct(c, c);
  const FrameHom id = map_tensor(lm, lm, FrameHom::identity(c));
  for (Elem k = 0; k < static_cast<Elem>(lm.frame->size()); ++k) CHECK(id(k) == k);

  const TensorFrame l2 = coproduct(c, two_frame());
  const FrameHom u = map_tensor(l2, l2, FrameHom::identity(two_frame()));
  for (Elem k = 0; k < static_cast<Elem>(l2.frame->size()); ++k) CHECK(u(k) == k);

  const TensorFrame t3 = coproduct(two_frame(), c);
  const TensorFrame t2 = coproduct(two_frame(), two_frame());
  const FrameHom f(c, two_frame(), {0, 0, 1});
  const FrameHom mf = map_tensor(t3, t2, f);
  const FrameHom oracle = copair(t3, t2.iota1, compose(t2.iota2, f));
  CHECK(mf.map() == oracle.map());
  CHECK(count_mediating_homs(t3, t2.iota1, compose(t2.iota2, f)) == 1);
}

TEST_CASE("copair") {
  const FrameRef c = chain_frame(3);
  const TensorFrame t = coproduct(c, c);
  const FrameHom id = FrameHom::identity(c);
  const FrameHom h = copair(t, id, id);
  for (Elem x = 0; x < 3; ++x) CHECK(h(t.iota1(x)) == x);
  CHECK(h(t.tensor(1, 2)) == 1);

  const TensorFrame b = coproduct(boolean_frame(2), c);
  for (const FrameHom& f : enumerate_frame_homs(boolean_frame(2), two_frame()))
    for (const FrameHom& g : enumerate_frame_homs(c, two_frame())) CHECK(copair(b, f, g)(b.nbar()) == 0);
}

TEST_CASE("products of frames") {
  CHECK(product_frames({}).frame->size() == 1);
  const ProductFrame p = product_frames({two_frame(), two_frame()});
  CHECK(find_frame_iso(p.frame, boolean_frame(2)).has_value());
  const DistributeIso d = distribute_iso(two_frame(), two_frame(), two_frame());
  CHECK(d.lm.frame->size() == d.rhs.frame->size());
  CHECK(d.map.injective());
  CHECK(d.map.surjective());
}

TEST_CASE("pushouts of locales") {
  const FrameRef b = chain_frame(3);
  const FrameHom id = FrameHom::identity(b);
  const PushoutLocaleResult same = pushout_loc(id, id);
  CHECK(find_frame_iso(same.apex, b).has_value());

  const FrameRef c = boolean_frame(2);
  const FrameHom fb(b, trivial_frame(), {0, 0, 0});
  const FrameHom gc(c, trivial_frame(), {0, 0, 0, 0});
  const PushoutLocaleResult prod = pushout_loc(fb, gc);
  CHECK(prod.apex->size() == b->size() * c->size());
  CHECK(find_frame_iso(prod.apex, product_frames({b, c}).frame).has_value());

  // f^L surjective: the opposite leg is an injective localic map.
  const FrameHom f(b, two_frame(), {0, 0, 1});
  const FrameHom g(b, two_frame(), {0, 1, 1});
  const PushoutLocaleResult p = pushout_loc(f, g);
  CHECK(p.leg_c.right_injective());
  CHECK(p.leg_b.right_injective());
  CHECK_THROWS_AS(pushout_loc(f, FrameHom::identity(b)), CarrierMismatchError);
}
