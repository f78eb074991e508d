#include "finloc/frame.hpp"

#include <algorithm>
#include <numeric>

namespace finloc {
namespace {

// Least element of `candidates` if it exists: the first in a linear extension
// whose up-set (down-set) is all of them.
std::optional<std::size_t> least_of(const Bitset& candidates, const std::vector<Bitset>& cone,
                                    const std::vector<std::size_t>& rank) {
  std::size_t best = Bitset::npos;
  for (std::size_t j = candidates.find_first(); j != Bitset::npos; j = candidates.find_next(j)) {
    if (best == Bitset::npos || rank[j] < rank[best]) best = j;
  }
  if (best == Bitset::npos || cone[best].count() != candidates.count()) return std::nullopt;
  return best;
}

std::optional<std::string> hom_violation(const FiniteFrame& s, const FiniteFrame& t, std::span<const Elem> f) {
  if (f.size() != s.size()) return "assignment is not total";
  for (Elem v : f) {
    if (v < 0 || static_cast<std::size_t>(v) >= t.size()) return "assignment leaves the target";
  }
  auto at = [&](Elem x) { return f[static_cast<std::size_t>(x)]; };
  if (at(s.bottom()) != t.bottom()) return "bottom not preserved: f(" + s.label(s.bottom()) + ") = " + t.label(at(s.bottom()));
  if (at(s.top()) != t.top()) return "top not preserved: f(" + s.label(s.top()) + ") = " + t.label(at(s.top()));
  const Elem n = static_cast<Elem>(s.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (at(s.join(a, b)) != t.join(at(a), at(b))) return "join of (" + s.label(a) + ", " + s.label(b) + ") not preserved";
      if (at(s.meet(a, b)) != t.meet(at(a), at(b))) return "meet of (" + s.label(a) + ", " + s.label(b) + ") not preserved";
    }
  }
  return std::nullopt;
}

}  // namespace

Elem FiniteFrame::join_all(std::span<const Elem> xs) const {
  Elem acc = bottom_;
  for (Elem x : xs) acc = join(acc, x);
  return acc;
}

Elem FiniteFrame::meet_all(std::span<const Elem> xs) const {
  Elem acc = top_;
  for (Elem x : xs) acc = meet(acc, x);
  return acc;
}

FrameRef frame_from_poset(FinitePoset order) {
  const std::size_t n = order.size();
  if (n == 0) throw NotLatticeError("the empty poset has no bottom or top");
  auto frame = std::make_shared<FiniteFrame>();
  std::vector<Bitset> ups(n), downs(n);
  for (std::size_t i = 0; i < n; ++i) {
    ups[i] = order.up(i);
    downs[i] = order.down(i);
  }
  std::vector<std::size_t> rank(n), rank_rev(n);
  const auto& lin = order.linear_extension();
  for (std::size_t k = 0; k < n; ++k) {
    rank[lin[k]] = k;
    rank_rev[lin[k]] = n - 1 - k;
  }
  frame->meet_.assign(n * n, 0);
  frame->join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const auto j = least_of(ups[a] & ups[b], ups, rank);
      if (!j) throw NotLatticeError("'" + order.label(a) + "' and '" + order.label(b) + "' have no join");
      const auto m = least_of(downs[a] & downs[b], downs, rank_rev);
      if (!m) throw NotLatticeError("'" + order.label(a) + "' and '" + order.label(b) + "' have no meet");
      frame->join_[a * n + b] = frame->join_[b * n + a] = static_cast<Elem>(*j);
      frame->meet_[a * n + b] = frame->meet_[b * n + a] = static_cast<Elem>(*m);
    }
  }
  const Elem first = static_cast<Elem>(lin.front());
  const Elem last = static_cast<Elem>(lin.back());
  Elem bottom = first, top = last;
  for (std::size_t a = 0; a < n; ++a) {
    bottom = frame->meet_[static_cast<std::size_t>(bottom) * n + a];
    top = frame->join_[static_cast<std::size_t>(top) * n + a];
  }
  frame->bottom_ = bottom;
  frame->top_ = top;
  auto J = [&](std::size_t x, std::size_t y) { return static_cast<std::size_t>(frame->join_[x * n + y]); };
  auto M = [&](std::size_t x, std::size_t y) { return static_cast<std::size_t>(frame->meet_[x * n + y]); };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        if (M(a, J(b, c)) != J(M(a, b), M(a, c))) {
          throw NotDistributiveError("not distributive: " + order.label(a) + " ∧ (" + order.label(b) + " ∨ " +
                                         order.label(c) + ") = " + order.label(M(a, J(b, c))) + " but (" +
                                         order.label(a) + " ∧ " + order.label(b) + ") ∨ (" + order.label(a) +
                                         " ∧ " + order.label(c) + ") = " + order.label(J(M(a, b), M(a, c))),
                                     order.label(a), order.label(b), order.label(c));
        }
      }
    }
  }
  frame->join_preimages_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      frame->join_preimages_[J(a, b)].emplace_back(static_cast<Elem>(a), static_cast<Elem>(b));
  frame->order_ = std::move(order);
  return frame;
}

FrameRef inclusion_frame(std::vector<std::string> labels, const std::vector<Mask>& sets) {
  if (labels.size() != sets.size()) throw InputError("inclusion_frame: one label per set required");
  return frame_from_poset(
      FinitePoset::from_predicate(std::move(labels), [&](std::size_t i, std::size_t j) { return is_subset(sets[i], sets[j]); }));
}

std::optional<FrameHom> find_frame_iso(const FrameRef& a, const FrameRef& b) {
  auto p = find_order_isomorphism(a->order(), b->order());
  if (!p) return std::nullopt;
  return FrameHom(a, b, std::vector<Elem>(p->begin(), p->end()));
}

bool same_frame(const FiniteFrame& a, const FiniteFrame& b) { return a.order() == b.order(); }

FrameRef chain_frame(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return frame_from_poset(FinitePoset::from_predicate(std::move(labels), [](std::size_t i, std::size_t j) { return i <= j; }));
}

FrameRef two_frame() { return chain_frame(2); }

FrameRef trivial_frame() { return chain_frame(1); }

FrameRef boolean_frame(std::size_t atoms) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < atoms; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  const FinitePoset antichain = FinitePoset::from_pairs(std::move(names), {});
  return frame_from_poset(downset_order(downsets(antichain)));
}

FrameHom::FrameHom(FrameRef source, FrameRef target, std::vector<Elem> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (!source_ || !target_) throw NotHomError("null frame");
  if (auto why = hom_violation(*source_, *target_, map_)) throw NotHomError(*why);
}

FrameHom FrameHom::identity(const FrameRef& f) {
  std::vector<Elem> id(f->size());
  std::iota(id.begin(), id.end(), 0);
  return FrameHom(f, f, std::move(id));
}

bool FrameHom::injective() const {
  std::vector<Elem> v = map_;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool FrameHom::surjective() const {
  std::vector<bool> hit(target_->size(), false);
  for (Elem v : map_) hit[static_cast<std::size_t>(v)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

FrameHom compose(const FrameHom& g, const FrameHom& f) {
  if (f.target() != g.source() && !same_frame(*f.target(), *g.source())) {
    throw CarrierMismatchError("compose: f's target is not g's source");
  }
  std::vector<Elem> m(f.source()->size());
  for (std::size_t x = 0; x < m.size(); ++x) m[x] = g(f(static_cast<Elem>(x)));
  return FrameHom(f.source(), g.target(), std::move(m));
}

std::vector<FrameHom> enumerate_frame_homs(const FrameRef& l, const FrameRef& m, std::span<const Elem> fixed,
                                           const Limits& limits) {
  const FiniteFrame& L = *l;
  const FiniteFrame& M = *m;
  const std::size_t n = L.size();
  const std::vector<std::size_t>& order = L.linear_extension();
  const auto& preimages = L.join_preimages();
  std::vector<Elem> f(n, -1);
  std::vector<FrameHom> out;

  auto admissible = [&](std::size_t depth, Elem x, Elem y) {
    if (x == L.bottom() && y != M.bottom()) return false;
    if (x == L.top() && y != M.top()) return false;
    if (!fixed.empty() && fixed[static_cast<std::size_t>(x)] >= 0 && fixed[static_cast<std::size_t>(x)] != y) return false;
    for (std::size_t d = 0; d < depth; ++d) {
      const Elem z = static_cast<Elem>(order[d]);
      const Elem fz = f[static_cast<std::size_t>(z)];
      if (f[static_cast<std::size_t>(L.meet(x, z))] != M.meet(y, fz)) return false;
      if (L.join(x, z) == x && M.join(y, fz) != y) return false;
    }
    for (const auto& [a, b] : preimages[static_cast<std::size_t>(x)]) {
      if (a == x || b == x) continue;
      if (M.join(f[static_cast<std::size_t>(a)], f[static_cast<std::size_t>(b)]) != y) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == n) {
      if (out.size() >= limits.max_maps) throw SizeError("too many frame homomorphisms");
      out.emplace_back(l, m, f);
      return;
    }
    const Elem x = static_cast<Elem>(order[depth]);
    for (Elem y = 0; y < static_cast<Elem>(M.size()); ++y) {
      if (!admissible(depth, x, y)) continue;
      f[static_cast<std::size_t>(x)] = y;
      self(self, depth + 1);
      f[static_cast<std::size_t>(x)] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<FrameHom> enumerate_frame_homs_brute(const FrameRef& l, const FrameRef& m) {
  const std::size_t n = l->size(), k = m->size();
  double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(k);
  if (total > 5e6) throw SizeError("brute-force hom enumeration too large");
  std::vector<FrameHom> out;
  std::vector<Elem> f(n, 0);
  for (;;) {
    if (!hom_violation(*l, *m, f)) out.emplace_back(l, m, f);
    std::size_t i = 0;
    while (i < n && ++f[i] == static_cast<Elem>(k)) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

bool GaloisConnection::right_injective() const {
  std::vector<Elem> v = right;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool GaloisConnection::right_surjective() const {
  std::vector<bool> hit(left.source()->size(), false);
  for (Elem v : right) hit[static_cast<std::size_t>(v)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

GaloisConnection right_adjoint(const FrameHom& f) {
  const FiniteFrame& M = *f.source();
  const FiniteFrame& L = *f.target();
  const Elem nm = static_cast<Elem>(M.size()), nl = static_cast<Elem>(L.size());
  std::vector<Elem> g(L.size());
  for (Elem y = 0; y < nl; ++y) {
    Elem acc = M.bottom();
    for (Elem x = 0; x < nm; ++x)
      if (L.leq(f(x), y)) acc = M.join(acc, x);
    g[static_cast<std::size_t>(y)] = acc;
  }
  auto G = [&](Elem y) { return g[static_cast<std::size_t>(y)]; };
  for (Elem x = 0; x < nm; ++x) {
    for (Elem y = 0; y < nl; ++y) {
      if (L.leq(f(x), y) != M.leq(x, G(y))) throw InvariantViolation("right_adjoint: adjunction fails");
    }
    if (f(G(f(x))) != f(x)) throw InvariantViolation("right_adjoint: fgf != f");
  }
  if (G(L.top()) != M.top()) throw InvariantViolation("right_adjoint: top not preserved");
  for (Elem y = 0; y < nl; ++y) {
    if (G(f(G(y))) != G(y)) throw InvariantViolation("right_adjoint: gfg != g");
    for (Elem z = y + 1; z < nl; ++z)
      if (G(L.meet(y, z)) != M.meet(G(y), G(z))) throw InvariantViolation("right_adjoint: meet not preserved");
  }
  return GaloisConnection{f, std::move(g)};
}

bool way_below(const FiniteFrame& l, Elem a, Elem b, const Limits& limits) {
  const std::size_t n = l.size();
  if (n > limits.max_way_below_elements) {
    throw SizeError("way_below: frame has " + std::to_string(n) + " elements; cap is " +
                    std::to_string(limits.max_way_below_elements));
  }
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Elem> join_of(subsets, l.bottom());
  for (std::size_t k = 1; k < subsets; ++k) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(k));
    join_of[k] = l.join(join_of[k & (k - 1)], static_cast<Elem>(low));
  }
  for (std::size_t k = 0; k < subsets; ++k) {
    if (join_of[k] != b) continue;
    bool covered = false;
    // every subset of a finite K is finite; walk K' ⊆ K including ∅
    for (std::size_t sub = k;; sub = (sub - 1) & k) {
      if (l.leq(a, join_of[sub])) {
        covered = true;
        break;
      }
      if (sub == 0) break;
    }
    if (!covered) return false;
  }
  return true;
}

bool is_locally_compact(const FiniteFrame& l, const Limits& limits) {
  const Elem n = static_cast<Elem>(l.size());
  for (Elem a = 0; a < n; ++a) {
    Elem acc = l.bottom();
    for (Elem x = 0; x < n; ++x)
      if (way_below(l, x, a, limits)) acc = l.join(acc, x);
    if (acc != a) return false;
  }
  return true;
}

bool is_prenucleus(const FiniteFrame& l, std::span<const Elem> k) {
  const Elem n = static_cast<Elem>(l.size());
  if (k.size() != l.size()) return false;
  auto K = [&](Elem x) { return k[static_cast<std::size_t>(x)]; };
  for (Elem x = 0; x < n; ++x) {
    if (K(x) < 0 || K(x) >= n || !l.leq(x, K(x))) return false;
    for (Elem y = 0; y < n; ++y) {
      if (l.leq(x, y) && !l.leq(K(x), K(y))) return false;
      if (!l.leq(l.meet(K(x), y), K(l.meet(x, y)))) return false;
    }
  }
  return true;
}

bool is_nucleus(const FiniteFrame& l, std::span<const Elem> k) {
  const Elem n = static_cast<Elem>(l.size());
  if (k.size() != l.size()) return false;
  auto K = [&](Elem x) { return k[static_cast<std::size_t>(x)]; };
  for (Elem x = 0; x < n; ++x) {
    if (K(x) < 0 || K(x) >= n || !l.leq(x, K(x)) || K(K(x)) != K(x)) return false;
    for (Elem y = 0; y < n; ++y) {
      if (l.leq(x, y) && !l.leq(K(x), K(y))) return false;
      if (K(l.meet(x, y)) != l.meet(K(x), K(y))) return false;
    }
  }
  return true;
}

namespace {

std::vector<Elem> fixed_points_of(std::span<const Elem> k) {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < k.size(); ++x)
    if (k[x] == static_cast<Elem>(x)) out.push_back(static_cast<Elem>(x));
  return out;
}

}  // namespace

Prenucleus::Prenucleus(FrameRef frame, std::vector<Elem> map) : frame_(std::move(frame)), map_(std::move(map)) {
  if (!is_prenucleus(*frame_, map_)) throw NotPrenucleusError("map violates the prenucleus laws");
}

std::vector<Elem> Prenucleus::fixed_points() const { return fixed_points_of(map_); }

Nucleus::Nucleus(FrameRef frame, std::vector<Elem> map) : frame_(std::move(frame)), map_(std::move(map)) {
  if (!is_nucleus(*frame_, map_)) throw InvariantViolation("map violates the nucleus laws");
}

std::vector<Elem> Nucleus::fixed_points() const { return fixed_points_of(map_); }

Nucleus nucleus_from_prenucleus(const Prenucleus& k0) {
  const FiniteFrame& l = *k0.frame();
  const std::vector<Elem> fix = k0.fixed_points();
  std::vector<Elem> k(l.size());
  for (Elem x = 0; x < static_cast<Elem>(l.size()); ++x) {
    Elem acc = l.top();
    for (Elem y : fix)
      if (l.leq(x, y)) acc = l.meet(acc, y);
    k[static_cast<std::size_t>(x)] = acc;
  }
  Nucleus out(k0.frame(), std::move(k));
  if (out.fixed_points() != fix) throw InvariantViolation("generated nucleus changed the fixed points");
  return out;
}

std::vector<Elem> iterate_to_fixpoint(const Prenucleus& k0) {
  std::vector<Elem> out(k0.map().size());
  for (std::size_t x = 0; x < out.size(); ++x) {
    Elem cur = static_cast<Elem>(x);
    while (k0(cur) != cur) cur = k0(cur);
    out[x] = cur;
  }
  return out;
}

bool density_hypothesis(const FrameHom& f, std::span<const Elem> generators) {
  const FiniteFrame& n = *f.target();
  std::vector<bool> in_image(n.size(), false);
  for (Elem v : f.map()) in_image[static_cast<std::size_t>(v)] = true;
  for (Elem g : generators)
    if (!in_image[static_cast<std::size_t>(g)]) return false;
  for (Elem y = 0; y < static_cast<Elem>(n.size()); ++y) {
    Elem acc = n.bottom();
    for (Elem g : generators)
      if (n.leq(g, y)) acc = n.join(acc, g);
    if (acc != y) return false;
  }
  return true;
}

}  // namespace finloc
