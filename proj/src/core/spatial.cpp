#include "finloc/spatial.hpp"

#include <algorithm>

namespace finloc {

Elem OmegaFrame::element_of(Mask u) const {
  auto it = std::find(opens.begin(), opens.end(), u);
  if (it == opens.end()) throw InvariantViolation("subset is not open");
  return static_cast<Elem>(it - opens.begin());
}

OmegaFrame omega(const FiniteSpace& x, const Limits& limits) {
  std::vector<Mask> opens = x.opens(limits);
  if (opens.size() > limits.max_frame_elements) throw SizeError("omega: too many opens");
  std::vector<std::string> labels;
  for (Mask u : opens) labels.push_back(subset_label(x.labels(), u));
  FrameRef frame = inclusion_frame(std::move(labels), opens);
  return OmegaFrame{x, std::move(frame), std::move(opens)};
}

FrameHom omega_map(const ContinuousMap& f, const OmegaFrame& ox, const OmegaFrame& oy) {
  std::vector<Elem> m(oy.opens.size());
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = ox.element_of(f.preimage(oy.opens[k]));
  return FrameHom(oy.frame, ox.frame, std::move(m));
}

PointSpace pt(const FrameRef& l, const Limits& limits) {
  const FiniteFrame& f = *l;
  const Elem n = static_cast<Elem>(f.size());
  (void)limits;
  // Homs L → 2 are the prime filters; on a finite frame these are ↑p with p
  // join-prime, so candidates outside that shape are never generated.
  std::vector<Elem> primes;
  for (Elem p = 0; p < n; ++p) {
    if (p == f.bottom()) continue;
    bool prime = true;
    for (Elem a = 0; a < n && prime; ++a)
      for (Elem b = a; b < n && prime; ++b)
        if (f.leq(p, f.join(a, b)) && !f.leq(p, a) && !f.leq(p, b)) prime = false;
    if (prime) primes.push_back(p);
  }
  if (primes.size() > kMaxMaskCarrier) throw SizeError("pt: more than 64 points");
  const FrameRef two = two_frame();
  std::vector<FrameHom> points;
  std::vector<std::string> labels;
  for (Elem p : primes) {
    std::vector<Elem> h(f.size());
    for (Elem a = 0; a < n; ++a) h[static_cast<std::size_t>(a)] = f.leq(p, a) ? 1 : 0;
    points.emplace_back(l, two, std::move(h));
    labels.push_back(f.label(p));
  }
  std::vector<Mask> sigma(f.size(), 0);
  for (Elem a = 0; a < n; ++a)
    for (std::size_t k = 0; k < points.size(); ++k)
      if (points[k](a) == 1) sigma[static_cast<std::size_t>(a)] |= bit(k);
  std::vector<Mask> opens = sigma;
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  FiniteSpace space = FiniteSpace::from_opens(std::move(labels), opens);
  return PointSpace{l, std::move(space), std::move(primes), std::move(points), std::move(sigma)};
}

std::vector<FrameHom> points_by_enumeration(const FrameRef& l, const Limits& limits) {
  return enumerate_frame_homs(l, two_frame(), {}, limits);
}

SpatialVerdict is_spatial(const FrameRef& l, const Limits& limits) {
  const PointSpace p = pt(l, limits);
  OmegaFrame o = omega(p.space, limits);
  std::vector<Elem> cmp(l->size());
  for (std::size_t a = 0; a < cmp.size(); ++a) cmp[a] = o.element_of(p.sigma[a]);
  bool iso = o.frame->size() == l->size();
  if (iso) {
    std::vector<Elem> sorted = cmp;
    std::sort(sorted.begin(), sorted.end());
    iso = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }
  const Elem n = static_cast<Elem>(l->size());
  for (Elem a = 0; a < n && iso; ++a)
    for (Elem b = 0; b < n && iso; ++b)
      iso = l->leq(a, b) == o.frame->leq(cmp[static_cast<std::size_t>(a)], cmp[static_cast<std::size_t>(b)]);
  return SpatialVerdict{iso, std::move(o), std::move(cmp)};
}

PointMap transpose_to_points(const FrameHom& h, const OmegaFrame& ox, const PointSpace& ptl) {
  const FiniteFrame& l = *ptl.frame;
  PointMap out(ox.space.size());
  for (std::size_t x = 0; x < out.size(); ++x) {
    // x picks the prime filter {a : x ∈ h(a)}; its least member names the point.
    Elem least = l.top();
    for (Elem a = 0; a < static_cast<Elem>(l.size()); ++a)
      if (contains(ox.opens[static_cast<std::size_t>(h(a))], x)) least = l.meet(least, a);
    auto it = std::find(ptl.generators.begin(), ptl.generators.end(), least);
    if (it == ptl.generators.end()) throw InvariantViolation("transpose: filter is not prime");
    out[x] = static_cast<std::size_t>(it - ptl.generators.begin());
  }
  return out;
}

FrameHom transpose_to_frame(const PointMap& phi, const OmegaFrame& ox, const PointSpace& ptl) {
  std::vector<Elem> h(ptl.frame->size());
  for (std::size_t a = 0; a < h.size(); ++a) {
    Mask u = 0;
    for (std::size_t x = 0; x < phi.size(); ++x)
      if (contains(ptl.sigma[a], phi[x])) u |= bit(x);
    h[a] = ox.element_of(u);
  }
  return FrameHom(ptl.frame, ox.frame, std::move(h));
}

AdjunctionVerdict adjunction_check(const FiniteSpace& x, const FrameRef& l, const Limits& limits) {
  if (!is_sober(x)) throw HypothesisError("adjunction_check: X is not sober");
  const OmegaFrame ox = omega(x, limits);
  const PointSpace ptl = pt(l, limits);
  const std::vector<FrameHom> homs = enumerate_frame_homs(l, ox.frame, {}, limits);
  const std::vector<PointMap> maps = all_continuous_maps(x, ptl.space);
  AdjunctionVerdict v{homs.size(), maps.size(), homs.size() == maps.size()};
  for (const FrameHom& h : homs) {
    const PointMap phi = transpose_to_points(h, ox, ptl);
    if (!is_continuous(x, ptl.space, phi) || transpose_to_frame(phi, ox, ptl).map() != h.map()) v.bijection = false;
  }
  for (const PointMap& phi : maps) {
    if (transpose_to_points(transpose_to_frame(phi, ox, ptl), ox, ptl) != phi) v.bijection = false;
  }
  return v;
}

SpatialProductWitness spatial_product(const FiniteSpace& x, const FiniteSpace& y, const Limits& limits) {
  const OmegaFrame ox = omega(x, limits);
  const OmegaFrame oy = omega(y, limits);
  ProductSpace xy = product(x, y);
  OmegaFrame oxy = omega(xy.space, limits);
  PointMap p1(xy.space.size()), p2(xy.space.size());
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < y.size(); ++b) {
      p1[xy.index(a, b)] = a;
      p2[xy.index(a, b)] = b;
    }
  const FrameHom f = omega_map(ContinuousMap(xy.space, x, std::move(p1)), oxy, ox);
  const FrameHom g = omega_map(ContinuousMap(xy.space, y, std::move(p2)), oxy, oy);
  TensorFrame t = coproduct(ox.frame, oy.frame, limits);
  FrameHom h = copair(t, f, g);
  const bool iso = h.injective() && h.surjective();
  return SpatialProductWitness{std::move(t), std::move(oxy), std::move(h), iso};
}

}  // namespace finloc
