#include "finloc/space.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "finloc/iso.hpp"
#include "finloc/poset.hpp"

namespace finloc {
namespace {

std::map<std::string, std::size_t> build_index(const std::vector<std::string>& points) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!index.emplace(points[i], i).second) throw DuplicateLabelError("duplicate point label '" + points[i] + "'");
  }
  return index;
}

void check_carrier(std::size_t n) {
  if (n > kMaxMaskCarrier) throw SizeError("space has " + std::to_string(n) + " points; at most 64 supported");
}

bool by_size_then_value(Mask a, Mask b) {
  const int pa = popcount(a), pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace

FiniteSpace FiniteSpace::from_opens(std::vector<std::string> points, const std::vector<Mask>& opens) {
  check_carrier(points.size());
  FiniteSpace x;
  x.index_ = build_index(points);
  const std::size_t n = points.size();
  const Mask all = full_mask(n);
  std::unordered_set<Mask> family(opens.begin(), opens.end());
  for (Mask o : opens) {
    if (!is_subset(o, all)) throw InvalidSpaceError("open set mentions a point outside the carrier");
  }
  if (!family.contains(0)) throw InvalidSpaceError("opens must contain the empty set");
  if (!family.contains(all)) throw InvalidSpaceError("opens must contain the whole space");
  for (Mask a : family) {
    for (Mask b : family) {
      if (!family.contains(a | b)) throw InvalidSpaceError("opens not closed under union");
      if (!family.contains(a & b)) throw InvalidSpaceError("opens not closed under intersection");
    }
  }
  x.nbhd_.assign(n, all);
  for (Mask o : family) for_each_bit(o, [&](std::size_t p) { x.nbhd_[p] &= o; });
  x.points_ = std::move(points);
  x.closure_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) for_each_bit(x.nbhd_[i], [&](std::size_t j) { x.closure_[j] |= bit(i); });
  return x;
}

FiniteSpace FiniteSpace::from_preorder(std::vector<std::string> points, std::vector<Mask> nbhd) {
  check_carrier(points.size());
  const std::size_t n = points.size();
  if (nbhd.size() != n) throw InvalidSpaceError("one neighbourhood per point required");
  FiniteSpace x;
  x.index_ = build_index(points);
  const Mask all = full_mask(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!contains(nbhd[i], i)) throw InvalidSpaceError("neighbourhood of '" + points[i] + "' misses the point");
    if (!is_subset(nbhd[i], all)) throw InvalidSpaceError("neighbourhood leaves the carrier");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for_each_bit(nbhd[i], [&](std::size_t j) {
      if (!is_subset(nbhd[j], nbhd[i])) throw InvalidSpaceError("specialization preorder is not transitive");
    });
  }
  x.points_ = std::move(points);
  x.nbhd_ = std::move(nbhd);
  x.closure_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) for_each_bit(x.nbhd_[i], [&](std::size_t j) { x.closure_[j] |= bit(i); });
  return x;
}

FiniteSpace FiniteSpace::discrete(std::vector<std::string> points) {
  std::vector<Mask> nb(points.size());
  for (std::size_t i = 0; i < nb.size(); ++i) nb[i] = bit(i);
  return from_preorder(std::move(points), std::move(nb));
}

FiniteSpace FiniteSpace::indiscrete(std::vector<std::string> points) {
  std::vector<Mask> nb(points.size(), full_mask(points.size()));
  return from_preorder(std::move(points), std::move(nb));
}

FiniteSpace FiniteSpace::sierpinski() { return from_opens({"x", "y"}, {0b00, 0b10, 0b11}); }

FiniteSpace FiniteSpace::point(std::string label) { return discrete({std::move(label)}); }

std::optional<std::size_t> FiniteSpace::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteSpace::index_of(const std::string& label) const {
  if (auto i = find(label)) return *i;
  throw UnknownLabelError("unknown point '" + label + "'");
}

bool FiniteSpace::is_open(Mask u) const {
  if (!is_subset(u, universe())) return false;
  bool ok = true;
  for_each_bit(u, [&](std::size_t x) { ok = ok && is_subset(nbhd_[x], u); });
  return ok;
}

Mask FiniteSpace::closure(Mask u) const {
  Mask out = 0;
  for_each_bit(u, [&](std::size_t x) { out |= closure_[x]; });
  return out;
}

Mask FiniteSpace::interior(Mask u) const {
  Mask out = 0;
  for (std::size_t x = 0; x < size(); ++x)
    if (is_subset(nbhd_[x], u)) out |= bit(x);
  return out;
}

std::vector<Mask> FiniteSpace::opens(const Limits& limits) const {
  std::unordered_set<Mask> seen{0};
  std::vector<Mask> frontier{0};
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask o : frontier) {
      for (Mask u : nbhd_) {
        const Mask v = o | u;
        if (seen.insert(v).second) {
          if (seen.size() > limits.max_downsets) throw SizeError("space has too many open sets");
          next.push_back(v);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Mask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), by_size_then_value);
  return out;
}

std::vector<Mask> FiniteSpace::closed_sets(const Limits& limits) const {
  std::vector<Mask> out;
  for (Mask o : opens(limits)) out.push_back(universe() & ~o);
  std::sort(out.begin(), out.end(), by_size_then_value);
  return out;
}

bool FiniteSpace::is_t0() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (nbhd_[i] == nbhd_[j]) return false;
  return true;
}

bool is_continuous(const FiniteSpace& s, const FiniteSpace& t, const PointMap& f) {
  if (f.size() != s.size()) return false;
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (f[x] >= t.size()) return false;
    bool ok = true;
    for_each_bit(s.nbhd(x), [&](std::size_t y) { ok = ok && t.leq(f[x], f[y]); });
    if (!ok) return false;
  }
  return true;
}

ContinuousMap::ContinuousMap(FiniteSpace source, FiniteSpace target, PointMap image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (image_.size() != source_.size()) throw NotContinuousError("assignment is not total on the source");
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (image_[x] >= target_.size()) throw NotContinuousError("assignment leaves the target");
  }
  for (std::size_t x = 0; x < source_.size(); ++x) {
    for_each_bit(source_.nbhd(x), [&](std::size_t y) {
      if (!target_.leq(image_[x], image_[y])) {
        throw NotContinuousError("specialization order not preserved: '" + source_.label(x) + "' <= '" +
                                 source_.label(y) + "'");
      }
    });
  }
}

ContinuousMap ContinuousMap::identity(const FiniteSpace& x) {
  PointMap id(x.size());
  std::iota(id.begin(), id.end(), 0);
  return ContinuousMap(x, x, std::move(id));
}

Mask ContinuousMap::image_of(Mask u) const {
  Mask out = 0;
  for_each_bit(u, [&](std::size_t x) { out |= bit(image_[x]); });
  return out;
}

Mask ContinuousMap::preimage(Mask v) const {
  Mask out = 0;
  for (std::size_t x = 0; x < image_.size(); ++x)
    if (contains(v, image_[x])) out |= bit(x);
  return out;
}

bool ContinuousMap::injective() const { return static_cast<std::size_t>(popcount(image_of(source_.universe()))) == image_.size(); }

bool ContinuousMap::surjective() const { return image_of(source_.universe()) == target_.universe(); }

ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f) {
  if (!(f.target() == g.source())) throw CarrierMismatchError("compose: f's target is not g's source");
  PointMap image(f.source().size());
  for (std::size_t x = 0; x < image.size(); ++x) image[x] = g(f(x));
  return ContinuousMap(f.source(), g.target(), std::move(image));
}

std::size_t enumerate_continuous_maps(const FiniteSpace& s, const FiniteSpace& t,
                                      const std::vector<Mask>& allowed,
                                      const std::function<bool(const PointMap&)>& visit) {
  const std::size_t n = s.size();
  PointMap h(n, 0);
  std::size_t visited = 0;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t x) -> void {
    if (stop) return;
    if (x == n) {
      ++visited;
      if (!visit(h)) stop = true;
      return;
    }
    Mask cand = t.universe();
    if (!allowed.empty()) cand &= allowed[x];
    for (std::size_t k = 0; k < x && cand != 0; ++k) {
      if (s.leq(k, x)) cand &= t.nbhd(h[k]);
      if (s.leq(x, k)) cand &= t.point_closure(h[k]);
    }
    for_each_bit(cand, [&](std::size_t y) {
      if (stop) return;
      h[x] = y;
      self(self, x + 1);
    });
  };
  rec(rec, 0);
  return visited;
}

std::vector<PointMap> all_continuous_maps(const FiniteSpace& s, const FiniteSpace& t) {
  std::vector<PointMap> out;
  enumerate_continuous_maps(s, t, {}, [&](const PointMap& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::optional<PointMap> find_homeomorphism(const FiniteSpace& s, const FiniteSpace& t) {
  if (s.size() != t.size()) return std::nullopt;
  return find_relation_iso(
      s.size(), [&](std::size_t i, std::size_t j) { return s.leq(i, j); },
      [&](std::size_t i, std::size_t j) { return t.leq(i, j); });
}

FiniteSpace subspace(const FiniteSpace& x, Mask a) {
  const std::vector<std::size_t> pts = bits_of(a & x.universe());
  std::vector<std::string> labels;
  std::vector<Mask> nb(pts.size(), 0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    labels.push_back(x.label(pts[i]));
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (x.leq(pts[i], pts[j])) nb[i] |= bit(j);
  }
  return FiniteSpace::from_preorder(std::move(labels), std::move(nb));
}

ProductSpace product(const FiniteSpace& x, const FiniteSpace& y) {
  const std::size_t n = x.size() * y.size();
  check_carrier(n);
  std::vector<std::string> labels(n);
  std::vector<Mask> nb(n, 0);
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < y.size(); ++b) {
      const std::size_t i = a * y.size() + b;
      labels[i] = "(" + x.label(a) + "," + y.label(b) + ")";
      for_each_bit(x.nbhd(a), [&](std::size_t a2) {
        for_each_bit(y.nbhd(b), [&](std::size_t b2) { nb[i] |= bit(a2 * y.size() + b2); });
      });
    }
  }
  return ProductSpace{FiniteSpace::from_preorder(std::move(labels), std::move(nb)), y.size()};
}

SumSpace sum(const std::vector<FiniteSpace>& family) {
  std::size_t n = 0;
  std::vector<std::size_t> offsets;
  for (const auto& x : family) {
    offsets.push_back(n);
    n += x.size();
  }
  check_carrier(n);
  std::vector<std::string> labels;
  std::vector<Mask> nb;
  for (std::size_t k = 0; k < family.size(); ++k) {
    for (std::size_t a = 0; a < family[k].size(); ++a) {
      labels.push_back("(" + std::to_string(k) + "," + family[k].label(a) + ")");
      nb.push_back(family[k].nbhd(a) << offsets[k]);
    }
  }
  return SumSpace{FiniteSpace::from_preorder(std::move(labels), std::move(nb)), std::move(offsets)};
}

CoproductSpace coproduct(const FiniteSpace& x, const FiniteSpace& y) {
  SumSpace s = sum({x, y});
  return CoproductSpace{std::move(s.space), x.size()};
}

PushoutSpace pushout(const FiniteSpace& a, const FiniteSpace& x, const FiniteSpace& y,
                     const PointMap& f, const PointMap& g) {
  if (f.size() != a.size() || g.size() != a.size()) throw CarrierMismatchError("pushout: span maps do not start at A");
  const std::size_t nx = x.size(), ny = y.size(), n = nx + ny;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t p = 0; p < a.size(); ++p) {
    std::size_t r1 = find(f[p]), r2 = find(nx + g[p]);
    if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
  }
  std::vector<std::size_t> cls(n);
  std::vector<std::size_t> rep_class(n, n);
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = find(v);
    if (rep_class[r] == n) {
      rep_class[r] = labels.size();
      labels.push_back(v < nx ? "(0," + x.label(v) + ")" : "(1," + y.label(v - nx) + ")");
    }
    cls[v] = rep_class[r];
  }
  check_carrier(labels.size());
  const std::size_t m = labels.size();
  std::vector<Mask> rel(m, 0);
  for (std::size_t c = 0; c < m; ++c) rel[c] |= bit(c);
  for (std::size_t u = 0; u < nx; ++u)
    for_each_bit(x.nbhd(u), [&](std::size_t w) { rel[cls[u]] |= bit(cls[w]); });
  for (std::size_t u = 0; u < ny; ++u)
    for_each_bit(y.nbhd(u), [&](std::size_t w) { rel[cls[nx + u]] |= bit(cls[nx + w]); });
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      if (contains(rel[i], k)) rel[i] |= rel[k];
  PointMap left(nx), right(ny);
  for (std::size_t u = 0; u < nx; ++u) left[u] = cls[u];
  for (std::size_t u = 0; u < ny; ++u) right[u] = cls[nx + u];
  return PushoutSpace{FiniteSpace::from_preorder(std::move(labels), std::move(rel)), std::move(left), std::move(right)};
}

PullbackSpace pullback(const FiniteSpace& x, const FiniteSpace& y, const PointMap& f, const PointMap& g) {
  ProductSpace xy = product(x, y);
  Mask keep = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < y.size(); ++b)
      if (f[a] == g[b]) {
        keep |= bit(xy.index(a, b));
        pairs.emplace_back(a, b);
      }
  return PullbackSpace{subspace(xy.space, keep), std::move(pairs)};
}

std::size_t ExponentialSpace::index_of(const PointMap& m) const {
  auto it = std::find(maps.begin(), maps.end(), m);
  if (it == maps.end()) throw NotContinuousError("map is not a point of the exponential");
  return static_cast<std::size_t>(it - maps.begin());
}

ExponentialSpace exponential(const FiniteSpace& a, const FiniteSpace& x, const Limits& limits) {
  ExponentialSpace e;
  enumerate_continuous_maps(a, x, {}, [&](const PointMap& m) {
    e.maps.push_back(m);
    if (e.maps.size() > kMaxMaskCarrier || e.maps.size() > limits.max_maps) {
      throw SizeError("exponential has more than 64 points");
    }
    return true;
  });
  const std::size_t n = e.maps.size();
  std::vector<std::string> labels(n);
  std::vector<Mask> nb(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = "[";
    for (std::size_t p = 0; p < a.size(); ++p) {
      if (p) s += ',';
      s += x.label(e.maps[i][p]);
    }
    labels[i] = s + "]";
    for (std::size_t j = 0; j < n; ++j) {
      bool le = true;
      for (std::size_t p = 0; p < a.size() && le; ++p) le = x.leq(e.maps[i][p], e.maps[j][p]);
      if (le) nb[i] |= bit(j);
    }
  }
  e.space = FiniteSpace::from_preorder(std::move(labels), std::move(nb));
  return e;
}

std::vector<Mask> irreducible_closed_sets(const FiniteSpace& x) {
  const std::vector<Mask> closed = x.closed_sets();
  std::vector<Mask> out;
  for (Mask f : closed) {
    if (f == 0) continue;
    bool decomposes = false;
    for (std::size_t i = 0; i < closed.size() && !decomposes; ++i) {
      const Mask f1 = closed[i];
      if (f1 == f || !is_subset(f1, f)) continue;
      for (std::size_t j = i; j < closed.size(); ++j) {
        const Mask f2 = closed[j];
        if (f2 != f && is_subset(f2, f) && (f1 | f2) == f) {
          decomposes = true;
          break;
        }
      }
    }
    if (!decomposes) out.push_back(f);
  }
  return out;
}

bool is_sober(const FiniteSpace& x) {
  for (Mask f : irreducible_closed_sets(x)) {
    int generic = 0;
    for (std::size_t p = 0; p < x.size(); ++p)
      if (x.point_closure(p) == f) ++generic;
    if (generic != 1) return false;
  }
  return true;
}

bool is_hausdorff(const FiniteSpace& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if ((x.nbhd(i) & x.nbhd(j)) != 0) return false;
  return true;
}

SoberQuotient soberify(const FiniteSpace& x) {
  const std::size_t n = x.size();
  PointMap q(n, n);
  std::vector<Mask> members;
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i] != n) continue;
    Mask cls = 0;
    for (std::size_t j = i; j < n; ++j) {
      if (x.nbhd(j) == x.nbhd(i)) {
        q[j] = members.size();
        cls |= bit(j);
      }
    }
    members.push_back(cls);
  }
  std::vector<std::string> labels;
  std::vector<Mask> nb(members.size(), 0);
  for (std::size_t c = 0; c < members.size(); ++c) {
    labels.push_back(popcount(members[c]) == 1 ? x.label(bits_of(members[c]).front()) : subset_label(x.labels(), members[c]));
    const std::size_t rep = bits_of(members[c]).front();
    for_each_bit(x.nbhd(rep), [&](std::size_t j) { nb[c] |= bit(q[j]); });
  }
  FiniteSpace s = FiniteSpace::from_preorder(std::move(labels), std::move(nb));
  if (!is_sober(s)) throw InvariantViolation("soberify: Kolmogorov quotient is not sober");
  ContinuousMap quotient(x, s, std::move(q));
  return SoberQuotient{std::move(s), std::move(quotient)};
}

SoberGlueVerdict sober_glue_check(const FiniteSpace& x, Mask a, Mask b) {
  if ((a & b) != 0) throw HypothesisError("A and B overlap");
  if ((a | b) != x.universe()) throw HypothesisError("A and B do not cover X");
  if (!x.is_closed(a)) throw HypothesisError("A is not closed in X");
  for_each_bit(b, [&](std::size_t p) {
    if (x.point_closure(p) != bit(p)) throw HypothesisError("point '" + x.label(p) + "' of B is not closed in X");
  });
  SoberGlueVerdict v;
  v.a_sober = is_sober(subspace(x, a));
  v.b_hausdorff = is_hausdorff(subspace(x, b));
  v.x_sober = is_sober(x);
  v.implication_holds = !(v.a_sober && v.b_hausdorff) || v.x_sober;
  return v;
}

}  // namespace finloc
