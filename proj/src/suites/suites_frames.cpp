#include <algorithm>
#include <random>

#include "finloc/corpus.hpp"
#include "suite_util.hpp"

namespace finloc::suites {
namespace {

using detail::frame_witness;

bool monotone(const FinitePoset& p, const FinitePoset& q, const std::vector<std::size_t>& m) {
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.leq(a, b) && !q.leq(m[a], m[b])) return false;
  return true;
}

std::vector<std::vector<std::size_t>> monotone_maps(const FinitePoset& p, const FinitePoset& q) {
  std::vector<std::vector<std::size_t>> out;
  if (q.size() == 0) {
    if (p.size() == 0) out.emplace_back();
    return out;
  }
  std::vector<std::size_t> m(p.size(), 0);
  for (;;) {
    if (monotone(p, q, m)) out.push_back(m);
    std::size_t k = 0;
    while (k < m.size() && ++m[k] == q.size()) m[k++] = 0;
    if (k == m.size()) break;
  }
  return out;
}

void downset_frames(const SuiteOptions&, SuiteContext& ctx) {
  std::size_t count = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const FinitePoset& p : corpus::posets(n)) {
      ++count;
      const DownsetFamily d = downsets(p);
      std::vector<Mask> oracle = downsets_by_filter(p);
      std::vector<Mask> got = d.downsets;
      std::sort(oracle.begin(), oracle.end());
      std::sort(got.begin(), got.end());
      ctx.check(oracle == got, "downset enumeration disagrees with the filtering oracle", io::poset_to_json(p));
      try {
        frame_from_poset(downset_order(d));
        ctx.check(true, "");
      } catch (const Error& e) {
        ctx.error("downsets do not form a frame", e);
      }
    }
  }
  ctx.set_corpus("all posets up to isomorphism with at most 5 points (" + std::to_string(count) + ")");
}

void downset_functor(const SuiteOptions&, SuiteContext& ctx) {
  std::vector<FinitePoset> ps;
  for (std::size_t n = 0; n <= 3; ++n)
    for (FinitePoset& p : corpus::posets(n)) ps.push_back(std::move(p));
  for (const FinitePoset& p : ps) {
    const DownsetFamily dp = downsets(p);
    for (const FinitePoset& q : ps) {
      const auto fs = monotone_maps(p, q);
      for (const FinitePoset& r : ps) {
        const auto gs = monotone_maps(q, r);
        for (const auto& fm : fs) {
          const MonotoneMap f(p, q, fm);
          for (const auto& gm : gs) {
            const MonotoneMap g(q, r, gm);
            const MonotoneMap gf = compose(g, f);
            for (Mask u : dp.downsets) {
              ctx.check(downset_image(gf, u) == downset_image(g, downset_image(f, u)),
                        "D(g.f) differs from Dg.Df",
                        io::Json{{"p", io::poset_to_json(p)}, {"q", io::poset_to_json(q)}, {"r", io::poset_to_json(r)}});
            }
          }
        }
      }
    }
  }
  ctx.set_corpus("composable monotone maps among posets with at most 3 points, every downset");
}

void frame_def(const SuiteOptions&, SuiteContext& ctx) {
  // Known counts of lattices and of distributive lattices on 1..6 elements.
  const std::size_t lattice_counts[] = {0, 1, 1, 1, 2, 5, 15};
  const std::size_t distributive_counts[] = {0, 1, 1, 1, 2, 3, 5};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t lattices = 0, accepted = 0;
    for (const FinitePoset& p : corpus::posets(n)) {
      const bool lattice = corpus::is_lattice_brute(p);
      const bool distributive = lattice && corpus::is_distributive_brute(p);
      lattices += lattice ? 1 : 0;
      bool ok = false;
      try {
        frame_from_poset(p);
        ok = distributive;
        ++accepted;
      } catch (const NotDistributiveError&) {
        ok = lattice && !distributive;
      } catch (const NotLatticeError&) {
        ok = !lattice;
      }
      ctx.check(ok, "frame_from_poset verdict disagrees with the brute-force oracle", io::poset_to_json(p));
    }
    ctx.check(lattices == lattice_counts[n], "lattice count", io::Json{{"n", n}, {"count", lattices}});
    ctx.check(accepted == distributive_counts[n], "distributive lattice count", io::Json{{"n", n}, {"count", accepted}});
  }
  // The binary law implies the law for arbitrary families on small frames.
  for (const FrameRef& f : corpus::frames(4)) {
    const Elem n = static_cast<Elem>(f->size());
    for (Elem a = 0; a < n; ++a) {
      for (Mask k = 0; k < bit(static_cast<std::size_t>(n)); ++k) {
        std::vector<Elem> fam, meets;
        for_each_bit(k, [&](std::size_t x) {
          fam.push_back(static_cast<Elem>(x));
          meets.push_back(f->meet(a, static_cast<Elem>(x)));
        });
        ctx.check(f->meet(a, f->join_all(fam)) == f->join_all(meets), "infinitary distributive law", frame_witness(f));
      }
    }
  }
  ctx.set_corpus("all posets with 1..6 points; infinitary law on frames with at most 4 elements");
}

void galois_adjoint(const SuiteOptions& o, SuiteContext& ctx) {
  const auto fs = corpus::frames(o.max_frame_size + 1);
  std::vector<std::pair<FrameRef, FrameRef>> pairs;
  for (const FrameRef& m : fs)
    for (const FrameRef& l : fs) pairs.emplace_back(m, l);
  parallel_cases(ctx, pairs.size(), o.jobs, [&](std::size_t idx, SuiteContext& c) {
    const auto& [m, l] = pairs[idx];
    const auto homs = enumerate_frame_homs(m, l);
    if (m->size() <= 4 && l->size() <= 4) {
      c.check(homs.size() == enumerate_frame_homs_brute(m, l).size(), "hom enumeration disagrees with brute force",
              io::Json{{"source", frame_witness(m)}, {"target", frame_witness(l)}});
    }
    for (const FrameHom& f : homs) {
      const GaloisConnection gc = right_adjoint(f);
      const auto& g = gc.right;
      bool ok = true;
      const Elem nm = static_cast<Elem>(m->size()), nl = static_cast<Elem>(l->size());
      for (Elem x = 0; x < nm; ++x)
        for (Elem y = 0; y < nl; ++y) ok = ok && (l->leq(f(x), y) == m->leq(x, g[static_cast<std::size_t>(y)]));
      for (Elem x = 0; x < nm; ++x) ok = ok && f(g[static_cast<std::size_t>(f(x))]) == f(x);
      for (Elem y = 0; y < nl; ++y) {
        const Elem gy = g[static_cast<std::size_t>(y)];
        ok = ok && g[static_cast<std::size_t>(f(gy))] == gy;
      }
      for (Elem y1 = 0; y1 < nl; ++y1)
        for (Elem y2 = 0; y2 < nl; ++y2)
          ok = ok && g[static_cast<std::size_t>(l->meet(y1, y2))] ==
                         m->meet(g[static_cast<std::size_t>(y1)], g[static_cast<std::size_t>(y2)]);
      ok = ok && g[static_cast<std::size_t>(l->top())] == m->top();
      ok = ok && (f.surjective() == gc.right_injective()) && (f.injective() == gc.right_surjective());
      c.check(ok, "Galois law or duality fails", io::hom_to_json(f));
    }
  });
  ctx.set_corpus("every frame hom between frames with at most " + std::to_string(o.max_frame_size + 1) + " elements");
}

void way_below_suite(const SuiteOptions& o, SuiteContext& ctx) {
  for (const FrameRef& f : corpus::frames(o.max_frame_size + 1)) {
    const Elem n = static_cast<Elem>(f->size());
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        ctx.check(way_below(*f, a, b) == f->leq(a, b), "way below differs from the order",
                  io::Json{{"frame", frame_witness(f)}, {"a", f->label(a)}, {"b", f->label(b)}});
    ctx.check(is_locally_compact(*f), "finite frame not locally compact", frame_witness(f));
  }
  ctx.set_corpus("frames with at most " + std::to_string(o.max_frame_size + 1) + " elements");
}

bool nucleus_laws(const FiniteFrame& l, const std::vector<Elem>& k) {
  const Elem n = static_cast<Elem>(l.size());
  auto at = [&](Elem x) { return k[static_cast<std::size_t>(x)]; };
  for (Elem x = 0; x < n; ++x) {
    if (!l.leq(x, at(x)) || at(at(x)) != at(x)) return false;
    for (Elem y = 0; y < n; ++y) {
      if (l.leq(x, y) && !l.leq(at(x), at(y))) return false;
      if (at(l.meet(x, y)) != l.meet(at(x), at(y))) return false;
    }
  }
  return true;
}

void nucleus_generation(const SuiteOptions& o, SuiteContext& ctx) {
  constexpr std::size_t kSamples = 1000;
  std::vector<FrameRef> fs;
  for (const FrameRef& f : corpus::frames(o.max_frame_size + 1))
    if (f->size() > 1) fs.push_back(f);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::size_t> pick_frame(0, fs.size() - 1);
  std::size_t accepted = 0, drawn = 0;
  while (accepted < kSamples && drawn < 1000 * kSamples) {
    ++drawn;
    const FrameRef& l = fs[pick_frame(rng)];
    const Elem n = static_cast<Elem>(l->size());
    std::vector<Elem> map(l->size());
    for (Elem x = 0; x < n; ++x) {
      std::vector<Elem> above;
      for (Elem y = 0; y < n; ++y)
        if (l->leq(x, y)) above.push_back(y);
      std::uniform_int_distribution<std::size_t> pick(0, above.size() - 1);
      map[static_cast<std::size_t>(x)] = above[pick(rng)];
    }
    if (!is_prenucleus(*l, map)) continue;
    ++accepted;
    const Prenucleus k0(l, map);
    const Nucleus k = nucleus_from_prenucleus(k0);
    const bool laws = nucleus_laws(*l, k.map());
    const bool fix = k.fixed_points() == k0.fixed_points();
    const bool iterated = iterate_to_fixpoint(k0) == k.map();
    io::Json w{{"frame", frame_witness(l)}, {"k0", map}};
    ctx.check(laws && fix && iterated, "generated nucleus fails a law", w);
  }
  ctx.check(accepted == kSamples, "could not draw enough prenuclei", io::Json{{"accepted", accepted}});
  ctx.set_corpus(std::to_string(accepted) + " random prenuclei (seed " + std::to_string(o.seed) + ") on frames with at most " +
                 std::to_string(o.max_frame_size + 1) + " elements");
}

void sober_glue(const SuiteOptions&, SuiteContext& ctx) {
  std::size_t instances = 0;
  for (const FiniteSpace& x : corpus::spaces_up_to(4)) {
    const Mask all = x.universe();
    for (Mask a = 0;; a = (a - all) & all) {
      const Mask b = all & ~a;
      bool hyp = x.is_closed(a);
      for_each_bit(b, [&](std::size_t p) { hyp = hyp && x.is_closed(bit(p)); });
      if (hyp) {
        ++instances;
        const SoberGlueVerdict v = sober_glue_check(x, a, b);
        ctx.check(v.implication_holds && (!(v.a_sober && v.b_hausdorff) || v.x_sober), "sober gluing counterexample",
                  io::Json{{"space", io::space_to_json(x)}, {"a", a}});
      }
      if (a == all) break;
    }
  }
  ctx.set_corpus("all decompositions of spaces with at most 4 points (" + std::to_string(instances) + " valid)");
}

void soberification(const SuiteOptions&, SuiteContext& ctx) {
  const auto xs = corpus::spaces_up_to(4);
  for (const FiniteSpace& x : xs) {
    const SoberQuotient q = soberify(x);
    const bool t0 = x.is_t0();
    ctx.check(t0 == is_sober(x), "finite T0 differs from sober", io::space_to_json(x));
    ctx.check(is_sober(q.space), "soberification not sober", io::space_to_json(x));
    ctx.check(find_homeomorphism(q.space, x).has_value() == t0, "soberification changes a T0 space",
              io::space_to_json(x));
  }
  // Universal property against sober targets with at most 3 points.
  std::vector<FiniteSpace> small, sober;
  for (const FiniteSpace& x : corpus::spaces_up_to(3)) {
    small.push_back(x);
    if (is_sober(x)) sober.push_back(x);
  }
  for (const FiniteSpace& x : small) {
    const SoberQuotient q = soberify(x);
    for (const FiniteSpace& t : sober) {
      for (const PointMap& f : all_continuous_maps(x, t)) {
        std::size_t factorizations = 0;
        for (const PointMap& h : all_continuous_maps(q.space, t)) {
          bool eq = true;
          for (std::size_t p = 0; p < x.size(); ++p) eq = eq && h[q.quotient(p)] == f[p];
          factorizations += eq ? 1 : 0;
        }
        ctx.check(factorizations == 1, "quotient is not universal",
                  io::Json{{"source", io::space_to_json(x)}, {"target", io::space_to_json(t)}});
      }
    }
  }
  ctx.set_corpus("spaces with at most 4 points; universality against sober spaces with at most 3 points");
}

}  // namespace

void register_frames(std::vector<Suite>& out) {
  out.push_back({"DownsetFrames", "frames", downset_frames});
  out.push_back({"DownsetFunctor", "frames", downset_functor});
  out.push_back({"FrameDef", "frames", frame_def});
  out.push_back({"GaloisAdjoint", "frames", galois_adjoint});
  out.push_back({"WayBelow", "frames", way_below_suite});
  out.push_back({"NucleusGeneration", "frames", nucleus_generation});
  out.push_back({"SoberSpaceLemma", "frames", sober_glue});
  out.push_back({"Soberification", "frames", soberification});
}

}  // namespace finloc::suites
