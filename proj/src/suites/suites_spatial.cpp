#include "finloc/corpus.hpp"
#include "finloc/spatial.hpp"
#include "suite_util.hpp"

namespace finloc::suites {
namespace {

using detail::frame_witness;

std::vector<FiniteSpace> filtered_spaces(std::size_t max_points, bool (*keep)(const FiniteSpace&)) {
  std::vector<FiniteSpace> out;
  for (const FiniteSpace& x : corpus::spaces_up_to(max_points))
    if (keep(x)) out.push_back(x);
  return out;
}

bool t0(const FiniteSpace& x) { return x.is_t0(); }
bool sober(const FiniteSpace& x) { return is_sober(x); }

// Up-sets of the 2 x 2 grid counted from scratch: the fixed oracle for Ω(S) ⊗ Ω(S).
std::size_t grid_upsets() {
  auto leq = [](int p, int q) { return (p & 1) <= (q & 1) && (p >> 1) <= (q >> 1); };
  std::size_t count = 0;
  for (int s = 0; s < 16; ++s) {
    bool up = true;
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q)
        if (((s >> p) & 1) && leq(p, q) && !((s >> q) & 1)) up = false;
    count += up ? 1 : 0;
  }
  return count;
}

void spatial_products(const SuiteOptions& o, SuiteContext& ctx) {
  const auto xs = filtered_spaces(3, t0);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) pairs.emplace_back(i, j);
  parallel_cases(ctx, pairs.size(), o.jobs, [&](std::size_t idx, SuiteContext& c) {
    const FiniteSpace& x = xs[pairs[idx].first];
    const FiniteSpace& y = xs[pairs[idx].second];
    const SpatialProductWitness w = spatial_product(x, y);
    c.check(w.iso && w.tensor.frame->size() == w.omega_product.frame->size(), "Omega X (x) Omega Y is not Omega(X x Y)",
            io::Json{{"x", io::space_to_json(x)}, {"y", io::space_to_json(y)}});
  });
  const FiniteSpace s = FiniteSpace::sierpinski();
  const SpatialProductWitness ss = spatial_product(s, s);
  const std::size_t oracle = grid_upsets();
  ctx.check(oracle == 6 && ss.tensor.frame->size() == oracle &&
                saturated_downsets_by_filter(ss.tensor.carrier).size() == oracle,
            "|Omega(S) (x) Omega(S)| differs from the grid up-set count",
            io::Json{{"tensor", ss.tensor.frame->size()}, {"oracle", oracle}});
  ctx.set_corpus("all pairs of T0 spaces with at most 3 points (" + std::to_string(xs.size()) + " spaces)");
}

void pt_omega(const SuiteOptions&, SuiteContext& ctx) {
  const auto xs = filtered_spaces(4, sober);
  for (const FiniteSpace& x : xs) {
    const OmegaFrame ox = omega(x);
    const PointSpace p = pt(ox.frame);
    ctx.check(find_homeomorphism(p.space, x).has_value(), "pt(Omega X) is not X", io::space_to_json(x));
    ctx.check(points_by_enumeration(ox.frame).size() == p.points.size(), "prime-filter points miss a hom to 2",
              io::space_to_json(x));
  }
  ctx.set_corpus(std::to_string(xs.size()) + " sober spaces with at most 4 points");
}

void omega_pt(const SuiteOptions& o, SuiteContext& ctx) {
  const auto fs = corpus::frames(o.max_frame_size + 1);
  for (const FrameRef& l : fs) {
    const SpatialVerdict v = is_spatial(l);
    bool iso = v.spatial;
    const FiniteFrame& t = *v.omega_pt.frame;
    for (Elem a = 0; a < static_cast<Elem>(l->size()) && iso; ++a)
      for (Elem b = 0; b < static_cast<Elem>(l->size()) && iso; ++b)
        iso = l->leq(a, b) == t.leq(v.comparison[static_cast<std::size_t>(a)], v.comparison[static_cast<std::size_t>(b)]);
    ctx.check(iso && t.size() == l->size(), "Omega(pt L) is not L", frame_witness(l));
  }
  ctx.set_corpus("frames with at most " + std::to_string(o.max_frame_size + 1) + " elements");
}

void adjunction(const SuiteOptions& o, SuiteContext& ctx) {
  const auto xs = filtered_spaces(3, sober);
  const auto fs = corpus::frames(o.max_frame_size);
  for (const FiniteSpace& x : xs)
    for (const FrameRef& l : fs) {
      const AdjunctionVerdict v = adjunction_check(x, l);
      ctx.check(v.bijection && v.frame_homs == v.continuous_maps, "hom-set bijection fails",
                io::Json{{"space", io::space_to_json(x)}, {"frame", frame_witness(l)}});
    }
  // Naturality in X and in L on a smaller corpus.
  const auto small = filtered_spaces(2, sober);
  const auto sf = corpus::frames(std::min<std::size_t>(o.max_frame_size, 4));
  for (const FrameRef& l : sf) {
    const PointSpace ptl = pt(l);
    for (const FiniteSpace& x : small) {
      const OmegaFrame ox = omega(x);
      const auto homs = enumerate_frame_homs(l, ox.frame);
      for (const FiniteSpace& x2 : small) {
        const OmegaFrame ox2 = omega(x2);
        for (const PointMap& km : all_continuous_maps(x2, x)) {
          const FrameHom ok = omega_map(ContinuousMap(x2, x, km), ox2, ox);
          for (const FrameHom& h : homs) {
            const PointMap lhs = transpose_to_points(compose(ok, h), ox2, ptl);
            const PointMap phi = transpose_to_points(h, ox, ptl);
            PointMap rhs(km.size());
            for (std::size_t p = 0; p < km.size(); ++p) rhs[p] = phi[km[p]];
            ctx.check(lhs == rhs, "transpose not natural in X", io::hom_to_json(h));
          }
        }
      }
      for (const FrameRef& l2 : sf) {
        const PointSpace ptl2 = pt(l2);
        for (const FrameHom& m : enumerate_frame_homs(l2, l)) {
          // pt(m) sends a point p of L to p . m.
          PointMap ptm(ptl.points.size());
          for (std::size_t k = 0; k < ptl.points.size(); ++k) {
            const FrameHom pm = compose(ptl.points[k], m);
            for (std::size_t k2 = 0; k2 < ptl2.points.size(); ++k2)
              if (ptl2.points[k2].map() == pm.map()) ptm[k] = k2;
          }
          for (const FrameHom& h : homs) {
            const PointMap lhs = transpose_to_points(compose(h, m), ox, ptl2);
            const PointMap phi = transpose_to_points(h, ox, ptl);
            PointMap rhs(phi.size());
            for (std::size_t p = 0; p < phi.size(); ++p) rhs[p] = ptm[phi[p]];
            ctx.check(lhs == rhs, "transpose not natural in L", io::hom_to_json(m));
          }
        }
      }
    }
  }
  ctx.set_corpus("sober spaces with at most 3 points against frames with at most " + std::to_string(o.max_frame_size) +
                 " elements; naturality on sober spaces with at most 2 points");
}

}  // namespace

void register_spatial(std::vector<Suite>& out) {
  out.push_back({"LocSpatialProducts", "spatial", spatial_products});
  out.push_back({"PtOmegaUnit", "spatial", pt_omega});
  out.push_back({"SpatialFrames", "spatial", omega_pt});
  out.push_back({"OmegaPtAdjunction", "spatial", adjunction});
}

}  // namespace finloc::suites
