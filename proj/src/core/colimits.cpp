#include "finloc/colimits.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_set>

namespace finloc {
namespace {

bool by_size_then_value(Mask a, Mask b) {
  const int pa = popcount(a), pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

void check_subset_walk(std::size_t n, const Limits& limits, const char* what) {
  if (n > limits.max_subset_carrier) {
    throw SizeError(std::string(what) + ": would walk 2^" + std::to_string(n) + " subsets; cap is 2^" +
                    std::to_string(limits.max_subset_carrier));
  }
}

}  // namespace

PairCarrier::PairCarrier(FrameRef left, FrameRef right) : left_(std::move(left)), right_(std::move(right)) {
  const std::size_t nl = left_->size(), nr = right_->size();
  if (nl * nr > kMaxMaskCarrier) {
    throw SizeError("L × M has " + std::to_string(nl * nr) + " pairs; at most 64 supported");
  }
  down_.assign(nl * nr, 0);
  for (std::size_t a = 0; a < nl; ++a) {
    for (std::size_t b = 0; b < nr; ++b) {
      Mask d = 0;
      for (std::size_t a2 = 0; a2 < nl; ++a2) {
        if (!left_->leq(static_cast<Elem>(a2), static_cast<Elem>(a))) continue;
        for (std::size_t b2 = 0; b2 < nr; ++b2)
          if (right_->leq(static_cast<Elem>(b2), static_cast<Elem>(b))) d |= bit(a2 * nr + b2);
      }
      down_[a * nr + b] = d;
    }
  }
  for (std::size_t a = 0; a < nl; ++a)
    for (std::size_t b = 0; b < nr; ++b)
      if (static_cast<Elem>(a) == left_->bottom() || static_cast<Elem>(b) == right_->bottom()) nbar_ |= bit(a * nr + b);
}

Mask PairCarrier::down_closure(Mask u) const {
  Mask out = 0;
  for_each_bit(u, [&](std::size_t p) { out |= down_[p]; });
  return out;
}

std::string PairCarrier::pair_label(std::size_t p) const {
  return "(" + left_->label(first(p)) + "," + right_->label(second(p)) + ")";
}

std::string PairCarrier::generator_label(Mask u) const {
  const Mask rest = u & ~nbar_;
  std::string s = "{";
  bool first_item = true;
  for_each_bit(rest, [&](std::size_t p) {
    // p is maximal when no other member of rest lies above it
    bool maximal = true;
    for_each_bit(rest, [&](std::size_t q) { maximal = maximal && (q == p || !contains(down_[q], p)); });
    if (!maximal) return;
    if (!first_item) s += ',';
    s += pair_label(p);
    first_item = false;
  });
  return s + "}";
}

FinitePoset PairCarrier::product_order() const {
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < size(); ++p) labels.push_back(pair_label(p));
  return FinitePoset::from_predicate(std::move(labels), [&](std::size_t p, std::size_t q) { return contains(down_[q], p); });
}

PrenucleiValues prenuclei(const PairCarrier& c, Mask u, const Limits& limits) {
  if (!c.is_downset(u)) throw NotDownsetError("prenuclei: input is not a downset of L × M");
  const FiniteFrame& l = *c.left();
  const FiniteFrame& m = *c.right();
  const std::size_t nl = l.size(), nr = m.size();
  PrenucleiValues out{u, 0, 0};

  // σ₀: candidate D ⊆ U; only joins outside U can change anything.
  check_subset_walk(static_cast<std::size_t>(popcount(u)), limits, "sigma0");
  const std::vector<std::size_t> members = bits_of(u);
  const std::size_t k = members.size();
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << k); ++sub) {
    Elem ja = l.bottom(), jb = m.bottom();
    for_each_bit(sub, [&](std::size_t i) {
      ja = l.join(ja, c.first(members[i]));
      jb = m.join(jb, c.second(members[i]));
    });
    const std::size_t j = c.index(ja, jb);
    if (contains(out.sigma0, j)) continue;
    bool directed = true;
    for_each_bit(sub, [&](std::size_t i1) {
      for_each_bit(sub, [&](std::size_t i2) {
        if (!directed) return;
        bool bounded = false;
        for_each_bit(sub, [&](std::size_t i3) {
          bounded = bounded || (contains(c.down(c.first(members[i3]), c.second(members[i3])), members[i1]) &&
                                contains(c.down(c.first(members[i3]), c.second(members[i3])), members[i2]));
        });
        directed = bounded;
      });
    });
    if (directed) out.sigma0 |= bit(j);
  }

  // π₁: for each y, every X ⊆ {x : (x, y) ∈ U}, including X = ∅.
  check_subset_walk(nl, limits, "pi1");
  for (std::size_t y = 0; y < nr; ++y) {
    Mask row = 0;
    for (std::size_t x = 0; x < nl; ++x)
      if (contains(u, c.index(static_cast<Elem>(x), static_cast<Elem>(y)))) row |= bit(x);
    for (Mask sub = row;; sub = (sub - 1) & row) {
      Elem j = l.bottom();
      for_each_bit(sub, [&](std::size_t x) { j = l.join(j, static_cast<Elem>(x)); });
      out.pi1 |= bit(c.index(j, static_cast<Elem>(y)));
      if (sub == 0) break;
    }
  }
  // π̂₂: for each x, every finite Y ⊆ {y : (x, y) ∈ U}.
  check_subset_walk(nr, limits, "pi2");
  for (std::size_t x = 0; x < nl; ++x) {
    Mask col = 0;
    for (std::size_t y = 0; y < nr; ++y)
      if (contains(u, c.index(static_cast<Elem>(x), static_cast<Elem>(y)))) col |= bit(y);
    for (Mask sub = col;; sub = (sub - 1) & col) {
      Elem j = m.bottom();
      for_each_bit(sub, [&](std::size_t y) { j = m.join(j, static_cast<Elem>(y)); });
      out.pi2 |= bit(c.index(static_cast<Elem>(x), j));
      if (sub == 0) break;
    }
  }
  return out;
}

Mask saturate(const PairCarrier& c, Mask u) {
  const FiniteFrame& l = *c.left();
  const FiniteFrame& m = *c.right();
  const Elem nl = static_cast<Elem>(l.size()), nr = static_cast<Elem>(m.size());
  Mask cur = c.down_closure(u | c.nbar());
  for (;;) {
    Mask next = cur;
    for (Elem x = 0; x < nl; ++x) {
      Elem j = m.bottom();
      for (Elem y = 0; y < nr; ++y)
        if (contains(cur, c.index(x, y))) j = m.join(j, y);
      next |= c.down(x, j);
    }
    for (Elem y = 0; y < nr; ++y) {
      Elem j = l.bottom();
      for (Elem x = 0; x < nl; ++x)
        if (contains(cur, c.index(x, y))) j = l.join(j, x);
      next |= c.down(j, y);
    }
    if (next == cur) return cur;
    cur = next;
  }
}

Mask saturate_literal(const PairCarrier& c, Mask u, const Limits& limits) {
  Mask cur = c.down_closure(u);
  for (;;) {
    const Mask s0 = prenuclei(c, cur, limits).sigma0;
    const Mask p2 = prenuclei(c, s0, limits).pi2;
    const Mask next = prenuclei(c, p2, limits).pi1;
    if (next == cur) return cur;
    cur = next;
  }
}

std::vector<Mask> saturated_downsets_by_filter(const PairCarrier& c, const Limits& limits) {
  const DownsetFamily all = downsets(c.product_order(), limits);
  std::vector<Mask> out;
  for (Mask u : all.downsets) {
    const PrenucleiValues v = prenuclei(c, u, limits);
    if (v.sigma0 == u && v.pi1 == u && v.pi2 == u) out.push_back(u);
  }
  return out;
}

std::optional<Elem> TensorFrame::find(Mask s) const {
  auto it = index.find(s);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

Elem TensorFrame::element_of(Mask s) const {
  if (auto e = find(s)) return *e;
  throw InvariantViolation("subset is not a saturated downset of L × M");
}

TensorFrame coproduct(const FrameRef& l, const FrameRef& m, const Limits& limits) {
  PairCarrier c(l, m);
  const Elem nl = static_cast<Elem>(l->size()), nr = static_cast<Elem>(m->size());
  std::vector<Mask> generators;
  for (Elem x = 0; x < nl; ++x)
    for (Elem y = 0; y < nr; ++y) generators.push_back(c.tensor(x, y));
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  std::unordered_set<Mask> seen{c.nbar()};
  std::deque<Mask> queue{c.nbar()};
  while (!queue.empty()) {
    const Mask e = queue.front();
    queue.pop_front();
    for (Mask g : generators) {
      if (is_subset(g, e)) continue;
      const Mask s = saturate(c, e | g);
      if (seen.insert(s).second) {
        if (seen.size() > limits.max_frame_elements) {
          throw SizeError("coproduct has more than " + std::to_string(limits.max_frame_elements) + " elements");
        }
        queue.push_back(s);
      }
    }
  }
  std::vector<Mask> elements(seen.begin(), seen.end());
  std::sort(elements.begin(), elements.end(), by_size_then_value);
  std::unordered_map<Mask, Elem> index;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    index.emplace(elements[k], static_cast<Elem>(k));
    labels.push_back(c.generator_label(elements[k]));
  }
  FrameRef frame = inclusion_frame(std::move(labels), elements);

  auto lookup = [&](Mask s) {
    auto it = index.find(s);
    if (it == index.end()) throw InvariantViolation("coproduct: injection value is not saturated");
    return it->second;
  };
  std::vector<Elem> i1(l->size()), i2(m->size());
  for (Elem x = 0; x < nl; ++x) {
    Mask s = c.nbar();
    for (Elem a = 0; a < nl; ++a)
      if (l->leq(a, x)) s |= c.down(a, m->top());
    i1[static_cast<std::size_t>(x)] = lookup(s);
  }
  for (Elem y = 0; y < nr; ++y) {
    Mask s = c.nbar();
    for (Elem b = 0; b < nr; ++b)
      if (m->leq(b, y)) s |= c.down(l->top(), b);
    i2[static_cast<std::size_t>(y)] = lookup(s);
  }
  FrameHom iota1(l, frame, std::move(i1));
  FrameHom iota2(m, frame, std::move(i2));
  TensorFrame t{std::move(c), frame, std::move(elements), std::move(index), std::move(iota1), std::move(iota2)};
  for (Elem x = 0; x < nl; ++x)
    for (Elem y = 0; y < nr; ++y)
      if (frame->meet(t.iota1(x), t.iota2(y)) != t.tensor(x, y)) {
        throw InvariantViolation("coproduct: ι₁(x) ∧ ι₂(y) differs from x ⊗ y");
      }
  return t;
}

FrameHom map_tensor(const TensorFrame& lm, const TensorFrame& ln, const FrameHom& f) {
  if (!same_frame(*lm.left(), *ln.left())) throw CarrierMismatchError("map_tensor: left factors differ");
  if (!same_frame(*f.source(), *lm.right()) || !same_frame(*f.target(), *ln.right())) {
    throw CarrierMismatchError("map_tensor: f does not run between the right factors");
  }
  std::vector<Elem> h(lm.elements.size());
  for (std::size_t k = 0; k < h.size(); ++k) {
    Mask u = 0;
    for_each_bit(lm.elements[k], [&](std::size_t p) {
      u |= ln.carrier.tensor(lm.carrier.first(p), f(lm.carrier.second(p)));
    });
    h[k] = ln.join_of(u);
  }
  FrameHom out(lm.frame, ln.frame, std::move(h));
  for (Elem x = 0; x < static_cast<Elem>(lm.left()->size()); ++x)
    if (out(lm.iota1(x)) != ln.iota1(x)) throw InvariantViolation("map_tensor: (id ⊗ f) ∘ ι₁ ≠ ι₁");
  for (Elem y = 0; y < static_cast<Elem>(lm.right()->size()); ++y)
    if (out(lm.iota2(y)) != ln.iota2(f(y))) throw InvariantViolation("map_tensor: (id ⊗ f) ∘ ι₂ ≠ ι₂ ∘ f");
  return out;
}

FrameHom copair(const TensorFrame& t, const FrameHom& f, const FrameHom& g) {
  if (!same_frame(*f.source(), *t.left()) || !same_frame(*g.source(), *t.right())) {
    throw CarrierMismatchError("copair: cocone legs do not start at the factors");
  }
  if (!same_frame(*f.target(), *g.target())) throw CarrierMismatchError("copair: cocone legs need a common codomain");
  const FiniteFrame& n = *f.target();
  std::vector<Elem> h(t.elements.size());
  for (std::size_t k = 0; k < h.size(); ++k) {
    Elem acc = n.bottom();
    for_each_bit(t.elements[k], [&](std::size_t p) {
      acc = n.join(acc, n.meet(f(t.carrier.first(p)), g(t.carrier.second(p))));
    });
    h[k] = acc;
  }
  FrameHom out(t.frame, f.target(), std::move(h));
  for (Elem x = 0; x < static_cast<Elem>(t.left()->size()); ++x)
    if (out(t.iota1(x)) != f(x)) throw InvariantViolation("copair: h ∘ ι₁ ≠ F");
  for (Elem y = 0; y < static_cast<Elem>(t.right()->size()); ++y)
    if (out(t.iota2(y)) != g(y)) throw InvariantViolation("copair: h ∘ ι₂ ≠ G");
  return out;
}

std::size_t count_mediating_homs(const TensorFrame& t, const FrameHom& f, const FrameHom& g, const Limits& limits) {
  std::vector<Elem> fixed(t.elements.size(), -1);
  auto pin = [&](Elem e, Elem v) {
    Elem& slot = fixed[static_cast<std::size_t>(e)];
    if (slot >= 0 && slot != v) return false;
    slot = v;
    return true;
  };
  for (Elem x = 0; x < static_cast<Elem>(t.left()->size()); ++x)
    if (!pin(t.iota1(x), f(x))) return 0;
  for (Elem y = 0; y < static_cast<Elem>(t.right()->size()); ++y)
    if (!pin(t.iota2(y), g(y))) return 0;
  return enumerate_frame_homs(t.frame, f.target(), fixed, limits).size();
}

Elem ProductFrame::at(std::span<const Elem> coordinates) const {
  Elem k = 0;
  for (std::size_t i = 0; i < factors.size(); ++i)
    k = k * static_cast<Elem>(factors[i]->size()) + coordinates[i];
  return k;
}

ProductFrame product_frames(const std::vector<FrameRef>& family, const Limits& limits) {
  std::size_t total = 1;
  for (const auto& f : family) {
    total *= f->size();
    if (total > limits.max_frame_elements) {
      throw SizeError("product has more than " + std::to_string(limits.max_frame_elements) + " elements");
    }
  }
  // Mixed-radix enumeration; the last factor varies fastest.
  std::vector<std::vector<Elem>> coords(total, std::vector<Elem>(family.size()));
  std::vector<std::string> labels(total);
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t rest = k;
    for (std::size_t i = family.size(); i-- > 0;) {
      coords[k][i] = static_cast<Elem>(rest % family[i]->size());
      rest /= family[i]->size();
    }
    std::string s = "(";
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (i) s += ',';
      s += family[i]->label(coords[k][i]);
    }
    labels[k] = s + ")";
  }
  auto leq = [&](std::size_t p, std::size_t q) {
    for (std::size_t i = 0; i < family.size(); ++i)
      if (!family[i]->leq(coords[p][i], coords[q][i])) return false;
    return true;
  };
  FrameRef frame = frame_from_poset(FinitePoset::from_predicate(std::move(labels), leq));
  std::vector<FrameHom> projections;
  for (std::size_t i = 0; i < family.size(); ++i) {
    std::vector<Elem> m(total);
    for (std::size_t k = 0; k < total; ++k) m[k] = coords[k][i];
    projections.emplace_back(frame, family[i], std::move(m));
  }
  return ProductFrame{family, frame, std::move(coords), std::move(projections)};
}

DistributeIso distribute_iso(const FrameRef& l, const FrameRef& m1, const FrameRef& m2, const Limits& limits) {
  ProductFrame m = product_frames({m1, m2}, limits);
  TensorFrame lm = coproduct(l, m.frame, limits);
  TensorFrame lm1 = coproduct(l, m1, limits);
  TensorFrame lm2 = coproduct(l, m2, limits);
  ProductFrame rhs = product_frames({lm1.frame, lm2.frame}, limits);
  const FrameHom chi1 = map_tensor(lm, lm1, m.projections[0]);
  const FrameHom chi2 = map_tensor(lm, lm2, m.projections[1]);
  std::vector<Elem> phi(lm.elements.size());
  for (std::size_t k = 0; k < phi.size(); ++k) {
    const Elem e = static_cast<Elem>(k);
    const Elem xy[2] = {chi1(e), chi2(e)};
    phi[k] = rhs.at(xy);
  }
  FrameHom map(lm.frame, rhs.frame, std::move(phi));
  if (!map.injective() || !map.surjective()) {
    throw NotIsoError("L ⊗ (M₁ × M₂) → (L ⊗ M₁) × (L ⊗ M₂) is not bijective (" + std::to_string(lm.frame->size()) +
                      " vs " + std::to_string(rhs.frame->size()) + " elements)");
  }
  // A bijective frame hom reflects order because it preserves meets: x ≤ y ⇔ φ(x) ≤ φ(y).
  for (Elem x = 0; x < static_cast<Elem>(lm.frame->size()); ++x)
    for (Elem y = 0; y < static_cast<Elem>(lm.frame->size()); ++y)
      if (lm.frame->leq(x, y) != rhs.frame->leq(map(x), map(y))) throw NotIsoError("comparison does not reflect order");
  return DistributeIso{std::move(m), std::move(lm), std::move(lm1), std::move(lm2), std::move(rhs), std::move(map)};
}

GaloisConnection compose_localic(const GaloisConnection& g, const GaloisConnection& f) {
  // f : A → B has f.left : B → A; g : B → C has g.left : C → B.
  FrameHom left = compose(f.left, g.left);
  std::vector<Elem> right(f.right.size());
  for (std::size_t a = 0; a < right.size(); ++a) right[a] = g.apply_right(f.apply_right(static_cast<Elem>(a)));
  return GaloisConnection{std::move(left), std::move(right)};
}

PushoutLocaleResult pushout_loc(const FrameHom& f_left, const FrameHom& g_left) {
  if (!same_frame(*f_left.target(), *g_left.target())) {
    throw CarrierMismatchError("pushout_loc: f^L and g^L need a common codomain");
  }
  const FrameRef& b = f_left.source();
  const FrameRef& c = g_left.source();
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem x = 0; x < static_cast<Elem>(b->size()); ++x)
    for (Elem y = 0; y < static_cast<Elem>(c->size()); ++y)
      if (f_left(x) == g_left(y)) pairs.emplace_back(x, y);
  std::map<std::pair<Elem, Elem>, std::size_t> where;
  for (std::size_t k = 0; k < pairs.size(); ++k) where.emplace(pairs[k], k);
  for (const auto& [x1, y1] : pairs) {
    for (const auto& [x2, y2] : pairs) {
      if (!where.contains({b->meet(x1, x2), c->meet(y1, y2)}) || !where.contains({b->join(x1, x2), c->join(y1, y2)})) {
        throw NotFrameError("pushout_loc: the equalizer set is not closed under componentwise meets and joins");
      }
    }
  }
  if (!where.contains({b->bottom(), c->bottom()}) || !where.contains({b->top(), c->top()})) {
    throw NotFrameError("pushout_loc: the equalizer set misses bottom or top");
  }
  std::vector<std::string> labels;
  for (const auto& [x, y] : pairs) labels.push_back("(" + b->label(x) + "," + c->label(y) + ")");
  FrameRef apex = frame_from_poset(FinitePoset::from_predicate(std::move(labels), [&](std::size_t p, std::size_t q) {
    return b->leq(pairs[p].first, pairs[q].first) && c->leq(pairs[p].second, pairs[q].second);
  }));

  std::vector<Elem> pb(pairs.size()), pc(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    pb[k] = pairs[k].first;
    pc[k] = pairs[k].second;
  }
  GaloisConnection leg_b = right_adjoint(FrameHom(apex, b, std::move(pb)));
  GaloisConnection leg_c = right_adjoint(FrameHom(apex, c, std::move(pc)));

  // Legs by the explicit join formula, compared with the adjoints.
  auto leg_formula = [&](const FrameRef& side, bool first, const GaloisConnection& adj) {
    for (Elem x = 0; x < static_cast<Elem>(side->size()); ++x) {
      Elem acc = apex->bottom();
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const Elem coord = first ? pairs[k].first : pairs[k].second;
        if (side->leq(coord, x)) acc = apex->join(acc, static_cast<Elem>(k));
      }
      if (acc != adj.apply_right(x)) throw InvariantViolation("pushout_loc: leg formula disagrees with the adjoint");
    }
  };
  leg_formula(b, true, leg_b);
  leg_formula(c, false, leg_c);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const Elem e = static_cast<Elem>(k);
    if (f_left(leg_b.left(e)) != g_left(leg_c.left(e))) throw InvariantViolation("pushout_loc: square does not commute");
  }
  return PushoutLocaleResult{apex, std::move(pairs), std::move(leg_b), std::move(leg_c)};
}

std::size_t count_pushout_mediators(const PushoutLocaleResult& p, const FrameHom& h_b, const FrameHom& h_c,
                                    const Limits& limits) {
  std::size_t count = 0;
  for (const FrameHom& u : enumerate_frame_homs(h_b.source(), p.apex, {}, limits)) {
    bool ok = true;
    for (Elem q = 0; q < static_cast<Elem>(h_b.source()->size()) && ok; ++q)
      ok = p.leg_b.left(u(q)) == h_b(q) && p.leg_c.left(u(q)) == h_c(q);
    if (ok) ++count;
  }
  return count;
}

bool factors_through(const GaloisConnection& f, const GaloisConnection& i, const Limits& limits) {
  // f.left : X → A, i.left : X → Y; look for u : Y → A with u ∘ i.left = f.left.
  for (const FrameHom& u : enumerate_frame_homs(i.left.target(), f.left.target(), {}, limits)) {
    bool ok = true;
    for (Elem x = 0; x < static_cast<Elem>(f.left.source()->size()) && ok; ++x) ok = u(i.left(x)) == f.left(x);
    if (ok) return true;
  }
  return false;
}

bool image_contained(const GaloisConnection& f, const GaloisConnection& i) {
  std::vector<bool> in_image(i.left.source()->size(), false);
  for (Elem v : i.right) in_image[static_cast<std::size_t>(v)] = true;
  return std::all_of(f.right.begin(), f.right.end(), [&](Elem v) { return in_image[static_cast<std::size_t>(v)]; });
}

}  // namespace finloc
