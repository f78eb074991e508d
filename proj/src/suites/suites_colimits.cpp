#include <algorithm>

#include "finloc/colimits.hpp"
#include "finloc/corpus.hpp"
#include "suite_util.hpp"

namespace finloc::suites {
namespace {

using detail::frame_witness;

io::Json pair_witness(const FrameRef& l, const FrameRef& m) {
  return io::Json{{"left", frame_witness(l)}, {"right", frame_witness(m)}};
}

void coproduct_universal(const SuiteOptions& o, SuiteContext& ctx) {
  const auto small = corpus::frames(o.max_frame_size);
  const auto targets = corpus::frames(o.max_frame_size + 1);
  std::vector<std::pair<FrameRef, FrameRef>> pairs;
  for (const FrameRef& l : small)
    for (const FrameRef& m : small) pairs.emplace_back(l, m);
  parallel_cases(ctx, pairs.size(), o.jobs, [&](std::size_t idx, SuiteContext& c) {
    const auto& [l, m] = pairs[idx];
    const TensorFrame t = coproduct(l, m);
    for (const FrameRef& n : targets) {
      const auto fs = enumerate_frame_homs(l, n);
      const auto gs = enumerate_frame_homs(m, n);
      for (const FrameHom& f : fs)
        for (const FrameHom& g : gs) {
          const FrameHom h = copair(t, f, g);
          const bool triangles = compose(h, t.iota1).map() == f.map() && compose(h, t.iota2).map() == g.map();
          const std::size_t mediators = count_mediating_homs(t, f, g);
          c.check(triangles && mediators == 1, "copair is not the unique mediating map",
                  io::Json{{"f", io::hom_to_json(f)}, {"g", io::hom_to_json(g)}, {"mediators", mediators}});
        }
    }
  });
  ctx.set_corpus("L, M over " + std::to_string(small.size()) + " frames with at most " + std::to_string(o.max_frame_size) +
                 " elements; every cocone into " + std::to_string(targets.size()) + " frames with at most " +
                 std::to_string(o.max_frame_size + 1) + " elements");
}

bool bijective(const FrameHom& h) { return h.injective() && h.surjective(); }

void coproduct_unit(const SuiteOptions& o, SuiteContext& ctx) {
  const FrameRef two = two_frame();
  for (const FrameRef& l : corpus::frames(o.max_frame_size + 1)) {
    const TensorFrame left = coproduct(two, l);
    const TensorFrame right = coproduct(l, two);
    ctx.check(left.frame->size() == l->size() && bijective(left.iota2), "2 (x) L is not L", frame_witness(l));
    ctx.check(right.frame->size() == l->size() && bijective(right.iota1), "L (x) 2 is not L", frame_witness(l));
    ctx.check(find_frame_iso(left.frame, l).has_value(), "no order isomorphism 2 (x) L = L", frame_witness(l));
  }
  ctx.set_corpus("frames with at most " + std::to_string(o.max_frame_size + 1) + " elements");
}

void saturation_closure(const SuiteOptions&, SuiteContext& ctx) {
  for (std::size_t a = 2; a <= 4; ++a)
    for (std::size_t b = 2; b <= 4; ++b) {
      const PairCarrier c(chain_frame(a), chain_frame(b));
      const auto ds = downsets(c.product_order()).downsets;
      for (Mask u : ds) {
        const Mask s = saturate(c, u);
        const PrenucleiValues pv = prenuclei(c, u);
        ctx.check(pv.sigma0 == u, "sigma0 moves a finite downset", io::Json{{"u", u}});
        ctx.check(is_subset(u | c.nbar(), s) && saturate(c, s) == s && saturate_literal(c, u) == s,
                  "saturate is not an inflationary idempotent match for the literal prenuclei", io::Json{{"u", u}});
        for (Mask v : ds)
          if (is_subset(u, v)) ctx.check(is_subset(s, saturate(c, v)), "saturate not monotone", io::Json{{"u", u}, {"v", v}});
      }
      std::vector<Mask> filtered = saturated_downsets_by_filter(c);
      std::vector<Mask> enumerated = coproduct(c.left(), c.right()).elements;
      std::sort(filtered.begin(), filtered.end());
      std::sort(enumerated.begin(), enumerated.end());
      ctx.check(filtered == enumerated, "join-closure enumeration misses saturated downsets",
                pair_witness(c.left(), c.right()));
    }
  ctx.set_corpus("every downset of C_a x C_b for chains with 2..4 elements");
}

void tensor_identity(const SuiteOptions& o, SuiteContext& ctx) {
  const auto fs = corpus::frames(o.max_frame_size);
  for (const FrameRef& l : fs)
    for (const FrameRef& m : fs) {
      const TensorFrame t = coproduct(l, m);
      const PairCarrier& c = t.carrier;
      const Elem nl = static_cast<Elem>(l->size()), nm = static_cast<Elem>(m->size());
      for (Elem y = 0; y < nm; ++y)
        for (Mask xs = 0; xs < bit(static_cast<std::size_t>(nl)); ++xs) {
          Mask acc = 0;
          std::vector<Elem> fam;
          for_each_bit(xs, [&](std::size_t x) {
            acc |= c.tensor(static_cast<Elem>(x), y);
            fam.push_back(static_cast<Elem>(x));
          });
          ctx.check(t.join_of(acc) == t.tensor(l->join_all(fam), y), "join of tensors differs from tensor of join",
                    pair_witness(l, m));
        }
      for (std::size_t k = 0; k < t.elements.size(); ++k) {
        const Mask s = t.elements[k];
        Mask acc = 0;
        for (Elem a = 0; a < nl; ++a)
          for (Elem b = 0; b < nm; ++b)
            if (is_subset(c.tensor(a, b), s)) acc |= c.tensor(a, b);
        ctx.check(t.join_of(acc) == static_cast<Elem>(k), "element is not the join of the tensors below it",
                  pair_witness(l, m));
      }
    }
  ctx.set_corpus("all pairs of frames with at most " + std::to_string(o.max_frame_size) + " elements");
}

void tensor_functor(const SuiteOptions& o, SuiteContext& ctx) {
  const auto ls = corpus::frames(3);
  const auto fs = corpus::frames(o.max_frame_size);
  for (const FrameRef& l : ls)
    for (const FrameRef& m : fs) {
      const TensorFrame lm = coproduct(l, m);
      const FrameHom id = map_tensor(lm, lm, FrameHom::identity(m));
      ctx.check(id.map() == FrameHom::identity(lm.frame).map(), "id (x) id is not the identity", pair_witness(l, m));
      for (const FrameRef& n : fs) {
        const TensorFrame ln = coproduct(l, n);
        for (const FrameHom& f : enumerate_frame_homs(m, n)) {
          const FrameHom mt = map_tensor(lm, ln, f);
          const FrameHom oracle = copair(lm, ln.iota1, compose(ln.iota2, f));
          ctx.check(mt.map() == oracle.map(), "id (x) f differs from the mediating map", io::hom_to_json(f));
        }
      }
    }
  ctx.set_corpus("L with at most 3 elements, f : M -> N with at most " + std::to_string(o.max_frame_size) + " elements");
}

void distribute(const SuiteOptions& o, SuiteContext& ctx) {
  const auto fs = corpus::frames(o.max_frame_size);
  std::vector<std::tuple<FrameRef, FrameRef, FrameRef>> triples;
  for (const FrameRef& l : fs)
    for (const FrameRef& m1 : fs)
      for (const FrameRef& m2 : fs)
        if (l->size() * m1->size() * m2->size() <= kMaxMaskCarrier) triples.emplace_back(l, m1, m2);
  parallel_cases(ctx, triples.size(), o.jobs, [&](std::size_t idx, SuiteContext& c) {
    const auto& [l, m1, m2] = triples[idx];
    io::Json w{{"l", frame_witness(l)}, {"m1", frame_witness(m1)}, {"m2", frame_witness(m2)}};
    try {
      const DistributeIso d = distribute_iso(l, m1, m2);
      const FiniteFrame& s = *d.map.source();
      const FiniteFrame& t = *d.map.target();
      bool iso = d.map.injective() && d.map.surjective();
      for (Elem a = 0; a < static_cast<Elem>(s.size()) && iso; ++a)
        for (Elem b = 0; b < static_cast<Elem>(s.size()) && iso; ++b) iso = s.leq(a, b) == t.leq(d.map(a), d.map(b));
      c.check(iso, "comparison is not an order isomorphism", w);
    } catch (const NotIsoError& e) {
      c.error("distribute_iso rejected a corpus triple", e);
    }
  });
  const ProductFrame empty = product_frames({});
  ctx.check(empty.frame->size() == 1, "empty product is not the one-point frame");
  const ProductFrame sq = product_frames({two_frame(), two_frame()});
  ctx.check(find_frame_iso(sq.frame, boolean_frame(2)).has_value(), "2 x 2 is not the Boolean frame");
  ctx.set_corpus(std::to_string(triples.size()) + " triples of frames with at most " + std::to_string(o.max_frame_size) +
                 " elements and |L||M1||M2| <= 64");
}

std::vector<Elem> join_irreducibles(const FiniteFrame& m) {
  std::vector<Elem> out;
  const Elem n = static_cast<Elem>(m.size());
  for (Elem p = 0; p < n; ++p) {
    if (p == m.bottom()) continue;
    Elem below = m.bottom();
    for (Elem q = 0; q < n; ++q)
      if (q != p && m.leq(q, p)) below = m.join(below, q);
    if (below != p) out.push_back(p);
  }
  return out;
}

void density(const SuiteOptions& o, SuiteContext& ctx) {
  const auto fs = corpus::frames(o.max_frame_size);
  for (const FrameRef& l : fs)
    for (const FrameRef& m : fs)
      for (const FrameHom& f : enumerate_frame_homs(l, m)) {
        const bool surj = f.surjective();
        const bool by_generators = density_hypothesis(f, join_irreducibles(*m));
        const bool by_all = density_hypothesis(f, detail::elements_of(*m));
        ctx.check((!by_generators || surj) && by_generators == surj && by_all == surj,
                  "density hypothesis disagrees with surjectivity", io::hom_to_json(f));
      }
  ctx.set_corpus("every hom between frames with at most " + std::to_string(o.max_frame_size) + " elements");
}

void loc_pushout(const SuiteOptions& o, SuiteContext& ctx) {
  const auto fs = corpus::frames(o.max_frame_size);
  struct Span {
    FrameHom f, g;
  };
  std::vector<Span> spans;
  for (const FrameRef& a : fs)
    for (const FrameRef& b : fs)
      for (const FrameRef& c : fs)
        for (const FrameHom& f : enumerate_frame_homs(b, a))
          for (const FrameHom& g : enumerate_frame_homs(c, a)) spans.push_back({f, g});
  parallel_cases(ctx, spans.size(), o.jobs, [&](std::size_t idx, SuiteContext& cx) {
    const FrameHom& f = spans[idx].f;
    const FrameHom& g = spans[idx].g;
    const io::Json w{{"f", io::hom_to_json(f)}, {"g", io::hom_to_json(g)}};
    const PushoutLocaleResult p = pushout_loc(f, g);
    const GaloisConnection fl = right_adjoint(f), gl = right_adjoint(g);
    cx.check(compose_localic(p.leg_b, fl).right == compose_localic(p.leg_c, gl).right, "legs do not commute in Loc", w);
    if (f.surjective()) cx.check(p.leg_c.right_injective(), "pushout of an injective localic map is not injective", w);
    if (g.surjective()) cx.check(p.leg_b.right_injective(), "pushout of an injective localic map is not injective", w);
    const FrameRef& b = f.source();
    const FrameRef& c = g.source();
    for (const FrameRef& q : fs) {
      const auto hbs = enumerate_frame_homs(q, b);
      const auto hcs = enumerate_frame_homs(q, c);
      for (const FrameHom& hb : hbs)
        for (const FrameHom& hc : hcs) {
          if (compose(f, hb).map() != compose(g, hc).map()) continue;
          cx.check(count_pushout_mediators(p, hb, hc) == 1, "cocone without a unique mediator", w);
        }
    }
  });
  ctx.set_corpus(std::to_string(spans.size()) + " spans over frames with at most " + std::to_string(o.max_frame_size) +
                 " elements; every cocone from the same corpus");
}

void chain_factoring(const SuiteOptions&, SuiteContext& ctx) {
  constexpr std::size_t kStages = 3;
  constexpr std::size_t kMaxApex = 48;
  const auto fs = corpus::frames(3);
  std::size_t chains = 0;
  for (const FrameRef& a : fs)
    for (const FrameRef& b : fs)
      for (const FrameHom& j : enumerate_frame_homs(b, a)) {
        if (!j.surjective()) continue;  // j is an injective localic map A -> B
        for (const FrameRef& x0 : fs) {
          // X_{k+1} is the pushout of j along the first localic map A -> X_k.
          std::vector<FrameRef> stage{x0};
          std::vector<GaloisConnection> step;
          while (stage.size() <= kStages) {
            const auto hs = enumerate_frame_homs(stage.back(), a);
            if (hs.empty()) break;
            const PushoutLocaleResult p = pushout_loc(j, hs.front());
            if (p.apex->size() > kMaxApex) break;
            step.push_back(p.leg_c);
            stage.push_back(p.apex);
          }
          if (step.empty()) continue;
          ++chains;
          const std::size_t top = stage.size() - 1;
          // incl[k] : X_k -> X_top.
          std::vector<GaloisConnection> incl(top + 1, right_adjoint(FrameHom::identity(stage[top])));
          for (std::size_t k = top; k-- > 0;) incl[k] = compose_localic(incl[k + 1], step[k]);
          for (std::size_t k = 0; k <= top; ++k)
            ctx.check(incl[k].right_injective(), "chain inclusion is not injective", frame_witness(stage[k]));
          for (const FrameRef& y : fs)
            for (const FrameHom& fl : enumerate_frame_homs(stage[top], y)) {
              const GaloisConnection f = right_adjoint(fl);
              for (std::size_t k = 0; k <= top; ++k)
                ctx.check(factors_through(f, incl[k]) == image_contained(f, incl[k]),
                          "factoring through a stage differs from image containment",
                          io::Json{{"map", io::hom_to_json(fl)}, {"stage", k}});
            }
        }
      }
  ctx.set_corpus(std::to_string(chains) + " chains of at most 3 pushouts of injective localic maps over frames with at most 3 elements");
}

}  // namespace

void register_colimits(std::vector<Suite>& out) {
  out.push_back({"CoproductUniversal", "colimits", coproduct_universal});
  out.push_back({"CoproductUnit", "colimits", coproduct_unit});
  out.push_back({"SaturationClosure", "colimits", saturation_closure});
  out.push_back({"TensorIdentity", "colimits", tensor_identity});
  out.push_back({"TensorFunctor", "colimits", tensor_functor});
  out.push_back({"ProductDistributeLocale", "colimits", distribute});
  out.push_back({"FrameDensityLemma", "colimits", density});
  out.push_back({"LocPushout", "colimits", loc_pushout});
  out.push_back({"TransfiniteCompLocales", "colimits", chain_factoring});
}

}  // namespace finloc::suites
