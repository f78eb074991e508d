#include "finloc/lifting.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "finloc/iso.hpp"

namespace finloc {
namespace {

Mask fibre(const Arrow& f, std::size_t y) {
  Mask m = 0;
  for (std::size_t x = 0; x < f.source().size(); ++x)
    if (f(x) == y) m |= bit(x);
  return m;
}

PointMap compose_points(const PointMap& g, const PointMap& f) {
  PointMap out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = g[f[x]];
  return out;
}

PointMap identity_points(std::size_t n) {
  PointMap id(n);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

bool bijective(const PointMap& m, std::size_t n) {
  if (m.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t v : m) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::vector<PointMap> automorphisms(const FiniteSpace& x) {
  std::vector<PointMap> out;
  enumerate_continuous_maps(x, x, {}, [&](const PointMap& m) {
    if (!bijective(m, x.size())) return true;
    PointMap inv(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) inv[m[i]] = i;
    if (is_continuous(x, x, inv)) out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace

LiftingSquare::LiftingSquare(Arrow left_, Arrow right_, Arrow top_, Arrow bottom_)
    : left(std::move(left_)), right(std::move(right_)), top(std::move(top_)), bottom(std::move(bottom_)) {
  if (!(top.source() == left.source())) throw CarrierMismatchError("square: u and i start at different spaces");
  if (!(top.target() == right.source())) throw CarrierMismatchError("square: u does not land in the source of f");
  if (!(bottom.source() == left.target())) throw CarrierMismatchError("square: v does not start at the target of i");
  if (!(bottom.target() == right.target())) throw CarrierMismatchError("square: v and f end at different spaces");
  for (std::size_t a = 0; a < left.source().size(); ++a) {
    if (right(top(a)) != bottom(left(a))) {
      throw NonCommutingError("square does not commute at '" + left.source().label(a) + "'");
    }
  }
}

namespace {

std::vector<Mask> lift_constraints(const Arrow& i, const Arrow& f, const PointMap& u, const PointMap& v,
                                   bool& feasible) {
  const FiniteSpace& b = i.target();
  std::vector<Mask> allowed(b.size());
  feasible = true;
  for (std::size_t p = 0; p < b.size(); ++p) allowed[p] = fibre(f, v[p]);
  for (std::size_t a = 0; a < i.source().size(); ++a) allowed[i(a)] &= bit(u[a]);
  for (Mask m : allowed) feasible = feasible && m != 0;
  return allowed;
}

}  // namespace

std::vector<PointMap> enumerate_lifts(const LiftingSquare& s) {
  bool feasible = false;
  const auto allowed = lift_constraints(s.left, s.right, s.top.image(), s.bottom.image(), feasible);
  std::vector<PointMap> out;
  if (!feasible) return out;
  enumerate_continuous_maps(s.left.target(), s.right.source(), allowed, [&](const PointMap& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

bool has_lift(const LiftingSquare& s) {
  bool feasible = false;
  const auto allowed = lift_constraints(s.left, s.right, s.top.image(), s.bottom.image(), feasible);
  if (!feasible) return false;
  bool found = false;
  enumerate_continuous_maps(s.left.target(), s.right.source(), allowed, [&](const PointMap&) {
    found = true;
    return false;
  });
  return found;
}

void enumerate_squares(const Arrow& i, const Arrow& f,
                       const std::function<bool(const PointMap& u, const PointMap& v)>& visit) {
  const FiniteSpace& a = i.source();
  bool stop = false;
  enumerate_continuous_maps(i.target(), f.target(), {}, [&](const PointMap& v) {
    std::vector<Mask> allowed(a.size());
    for (std::size_t p = 0; p < a.size(); ++p) {
      allowed[p] = fibre(f, v[i(p)]);
      if (allowed[p] == 0) return true;
    }
    enumerate_continuous_maps(a, f.source(), allowed, [&](const PointMap& u) {
      if (!visit(u, v)) stop = true;
      return !stop;
    });
    return !stop;
  });
}

LiftVerdict lifts_against(const Arrow& i, const Arrow& f) {
  LiftVerdict verdict;
  enumerate_squares(i, f, [&](const PointMap& u, const PointMap& v) {
    ++verdict.squares;
    LiftingSquare sq(i, f, Arrow(i.source(), f.source(), u), Arrow(i.target(), f.target(), v));
    if (has_lift(sq)) return true;
    verdict.holds = false;
    verdict.witness.emplace(std::move(sq));
    return false;
  });
  return verdict;
}

LiftVerdict rlp(const Arrow& f, const std::vector<Arrow>& s) {
  LiftVerdict total;
  for (const Arrow& g : s) {
    LiftVerdict v = lifts_against(g, f);
    total.squares += v.squares;
    if (!v.holds) {
      v.squares = total.squares;
      return v;
    }
  }
  return total;
}

LiftVerdict llp(const Arrow& f, const std::vector<Arrow>& s) {
  LiftVerdict total;
  for (const Arrow& g : s) {
    LiftVerdict v = lifts_against(f, g);
    total.squares += v.squares;
    if (!v.holds) {
      v.squares = total.squares;
      return v;
    }
  }
  return total;
}

Arrow pushout_of(const Arrow& s, const Arrow& u) {
  if (!(s.source() == u.source())) throw CarrierMismatchError("pushout_of: maps start at different spaces");
  PushoutSpace p = pushout(s.source(), u.target(), s.target(), u.image(), s.image());
  return Arrow(u.target(), std::move(p.space), std::move(p.left));
}

PushoutProduct pushout_product(const Arrow& f, const Arrow& g) {
  const FiniteSpace &x = f.source(), &y = f.target(), &a = g.source(), &b = g.target();
  const ProductSpace xa = product(x, a), xb = product(x, b), ya = product(y, a), yb = product(y, b);
  PointMap to_xb(xa.space.size()), to_ya(xa.space.size());
  for (std::size_t p = 0; p < x.size(); ++p)
    for (std::size_t q = 0; q < a.size(); ++q) {
      to_xb[xa.index(p, q)] = xb.index(p, g(q));
      to_ya[xa.index(p, q)] = ya.index(f(p), q);
    }
  PushoutSpace corner = pushout(xa.space, xb.space, ya.space, to_xb, to_ya);
  PointMap cmp(corner.space.size(), 0);
  for (std::size_t p = 0; p < x.size(); ++p)
    for (std::size_t q = 0; q < b.size(); ++q) cmp[corner.left[xb.index(p, q)]] = yb.index(f(p), q);
  for (std::size_t p = 0; p < y.size(); ++p)
    for (std::size_t q = 0; q < a.size(); ++q) cmp[corner.right[ya.index(p, q)]] = yb.index(p, g(q));
  Arrow map(corner.space, yb.space, std::move(cmp));
  return PushoutProduct{std::move(corner), std::move(map)};
}

PullbackPower pullback_power(const Arrow& g, const Arrow& i, const Limits& limits) {
  const FiniteSpace &x = g.source(), &y = g.target(), &a = i.source(), &b = i.target();
  ExponentialSpace xb = exponential(b, x, limits);
  ExponentialSpace xa = exponential(a, x, limits);
  ExponentialSpace ya = exponential(a, y, limits);
  ExponentialSpace yb = exponential(b, y, limits);
  PointMap post(xa.maps.size()), pre(yb.maps.size());
  for (std::size_t k = 0; k < xa.maps.size(); ++k) post[k] = ya.index_of(compose_points(g.image(), xa.maps[k]));
  for (std::size_t k = 0; k < yb.maps.size(); ++k) pre[k] = ya.index_of(compose_points(yb.maps[k], i.image()));
  PullbackSpace corner = pullback(xa.space, yb.space, post, pre);
  PointMap cmp(xb.maps.size());
  for (std::size_t k = 0; k < xb.maps.size(); ++k) {
    const std::pair<std::size_t, std::size_t> target{xa.index_of(compose_points(xb.maps[k], i.image())),
                                                     yb.index_of(compose_points(g.image(), xb.maps[k]))};
    auto it = std::find(corner.pairs.begin(), corner.pairs.end(), target);
    if (it == corner.pairs.end()) throw InvariantViolation("pullback_power: comparison misses the pullback");
    cmp[k] = static_cast<std::size_t>(it - corner.pairs.begin());
  }
  Arrow map(xb.space, corner.space, std::move(cmp));
  return PullbackPower{std::move(xb), std::move(xa), std::move(ya), std::move(yb), std::move(corner), std::move(map)};
}

std::optional<ArrowIso> find_arrow_iso(const Arrow& f, const Arrow& g) {
  const std::size_t nx = f.source().size(), ny = f.target().size();
  if (g.source().size() != nx || g.target().size() != ny) return std::nullopt;
  const std::size_t n = nx + ny;
  // One relational structure per arrow: source order, target order, and the graph of the map.
  auto rel = [nx](const Arrow& h) {
    return [&h, nx](std::size_t p, std::size_t q) {
      if (p < nx && q < nx) return h.source().leq(p, q);
      if (p >= nx && q >= nx) return h.target().leq(p - nx, q - nx);
      if (p < nx) return h(p) == q - nx;
      return false;
    };
  };
  std::vector<int> colour(n, 0);
  for (std::size_t p = nx; p < n; ++p) colour[p] = 1;
  auto iso = find_coloured_relation_iso(n, rel(f), rel(g), colour, colour);
  if (!iso) return std::nullopt;
  ArrowIso out{PointMap(nx), PointMap(ny)};
  for (std::size_t p = 0; p < nx; ++p) out.source[p] = (*iso)[p];
  for (std::size_t q = 0; q < ny; ++q) out.target[q] = (*iso)[nx + q] - nx;
  return out;
}

std::vector<ArrowIso> arrow_automorphisms(const Arrow& f) {
  std::vector<ArrowIso> out;
  const auto src = automorphisms(f.source());
  const auto tgt = automorphisms(f.target());
  for (const PointMap& beta : tgt)
    for (const PointMap& alpha : src) {
      bool ok = true;
      for (std::size_t x = 0; x < alpha.size() && ok; ++x) ok = f(alpha[x]) == beta[f(x)];
      if (ok) out.push_back(ArrowIso{alpha, beta});
    }
  return out;
}

std::optional<RetractWitness> retract_check(const Arrow& f, const Arrow& g) {
  std::optional<RetractWitness> found;
  enumerate_squares(f, g, [&](const PointMap& a1, const PointMap& b1) {
    // b2 ∘ b1 = id and a2 ∘ a1 = id pin the retractions on the images.
    std::vector<Mask> allowed_b(g.target().size(), f.target().universe());
    for (std::size_t y = 0; y < b1.size(); ++y) allowed_b[b1[y]] &= bit(y);
    for (Mask m : allowed_b)
      if (m == 0) return true;
    enumerate_continuous_maps(g.target(), f.target(), allowed_b, [&](const PointMap& b2) {
      std::vector<Mask> allowed_a(g.source().size(), 0);
      for (std::size_t x2 = 0; x2 < allowed_a.size(); ++x2) allowed_a[x2] = fibre(f, b2[g(x2)]);
      for (std::size_t x = 0; x < a1.size(); ++x) allowed_a[a1[x]] &= bit(x);
      for (Mask m : allowed_a)
        if (m == 0) return true;
      enumerate_continuous_maps(g.source(), f.source(), allowed_a, [&](const PointMap& a2) {
        found = RetractWitness{a1, b1, a2, b2};
        return false;
      });
      return !found;
    });
    return !found;
  });
  return found;
}

std::vector<CellProblem> unsolved_problems(const Arrow& p, const std::vector<Arrow>& s) {
  std::vector<CellProblem> out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const auto autos = arrow_automorphisms(s[k]);
    std::map<std::pair<PointMap, PointMap>, bool> seen;
    enumerate_squares(s[k], p, [&](const PointMap& u, const PointMap& v) {
      // Orbit representative: least (u∘α, v∘β) over the automorphisms.
      std::pair<PointMap, PointMap> key{u, v};
      for (const ArrowIso& t : autos) {
        std::pair<PointMap, PointMap> cand{compose_points(u, t.source), compose_points(v, t.target)};
        if (cand < key) key = std::move(cand);
      }
      if (seen.contains(key)) return true;
      LiftingSquare sq(s[k], p, Arrow(s[k].source(), p.source(), u), Arrow(s[k].target(), p.target(), v));
      seen.emplace(key, true);
      if (!has_lift(sq)) out.push_back(CellProblem{k, key.first, key.second});
      return true;
    });
  }
  return out;
}

CellAttachment cell_attach(const Arrow& p, const std::vector<Arrow>& s, const std::vector<CellProblem>& problems) {
  if (problems.empty()) return CellAttachment{p.source(), identity_points(p.source().size()), p};
  std::vector<FiniteSpace> as, bs;
  for (const CellProblem& c : problems) {
    if (c.generator >= s.size()) throw InputError("cell_attach: problem names an unknown generator");
    as.push_back(s[c.generator].source());
    bs.push_back(s[c.generator].target());
  }
  const SumSpace sa = sum(as), sb = sum(bs);
  PointMap to_z(sa.space.size()), to_b(sa.space.size());
  for (std::size_t k = 0; k < problems.size(); ++k) {
    const Arrow& gen = s[problems[k].generator];
    for (std::size_t q = 0; q < gen.source().size(); ++q) {
      to_z[sa.offsets[k] + q] = problems[k].top[q];
      to_b[sa.offsets[k] + q] = sb.offsets[k] + gen(q);
    }
  }
  PushoutSpace po = pushout(sa.space, p.source(), sb.space, to_z, to_b);
  PointMap right(po.space.size(), 0);
  for (std::size_t z = 0; z < p.source().size(); ++z) right[po.left[z]] = p(z);
  for (std::size_t k = 0; k < problems.size(); ++k) {
    const Arrow& gen = s[problems[k].generator];
    for (std::size_t q = 0; q < gen.target().size(); ++q) right[po.right[sb.offsets[k] + q]] = problems[k].bottom[q];
  }
  Arrow r(po.space, p.target(), std::move(right));
  return CellAttachment{std::move(po.space), std::move(po.left), std::move(r)};
}

FactorizationTrace bounded_factorize(const Arrow& f, const std::vector<Arrow>& s, std::size_t steps) {
  std::vector<FactorizationStage> stages;
  Arrow p = f;
  PointMap i = identity_points(f.source().size());
  FactorizationVerdict verdict = FactorizationVerdict::partial;
  for (;;) {
    std::vector<CellProblem> problems = unsolved_problems(p, s);
    if (problems.empty()) {
      verdict = FactorizationVerdict::complete;
      break;
    }
    if (stages.size() >= steps) break;
    CellAttachment step = cell_attach(p, s, problems);
    i = compose_points(step.inclusion, i);
    stages.push_back(FactorizationStage{p.source(), std::move(problems), step.space, step.inclusion});
    p = std::move(step.right);
  }
  Arrow left(f.source(), p.source(), std::move(i));
  return FactorizationTrace{f, std::move(stages), std::move(left), std::move(p), verdict};
}

bool replay_trace(const FactorizationTrace& t, const std::vector<Arrow>& s) {
  Arrow p = t.original;
  PointMap i = identity_points(t.original.source().size());
  try {
    for (const FactorizationStage& st : t.stages) {
      if (!(st.before == p.source())) return false;
      for (const CellProblem& c : st.problems) {
        if (c.generator >= s.size()) return false;
        const Arrow& gen = s[c.generator];
        LiftingSquare sq(gen, p, Arrow(gen.source(), p.source(), c.top), Arrow(gen.target(), p.target(), c.bottom));
        (void)sq;
      }
      CellAttachment step = cell_attach(p, s, st.problems);
      if (!(step.space == st.after) || step.inclusion != st.inclusion) return false;
      i = compose_points(step.inclusion, i);
      p = std::move(step.right);
    }
  } catch (const Error&) {
    return false;
  }
  if (t.left.image() != i || t.right.image() != p.image() || !(t.right.source() == p.source())) return false;
  return compose_points(t.right.image(), t.left.image()) == t.original.image();
}

std::string verdict_name(FactorizationVerdict v) { return v == FactorizationVerdict::complete ? "COMPLETE" : "PARTIAL"; }

}  // namespace finloc
