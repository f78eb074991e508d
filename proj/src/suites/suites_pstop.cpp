#include <algorithm>

#include "finloc/corpus.hpp"
#include "finloc/pstop.hpp"
#include "suite_util.hpp"

namespace finloc::suites {
namespace {

std::vector<PointMap> all_point_maps(std::size_t n, std::size_t m) {
  std::vector<PointMap> out;
  if (m == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  PointMap f(n, 0);
  for (;;) {
    out.push_back(f);
    std::size_t k = 0;
    while (k < n && ++f[k] == m) f[k++] = 0;
    if (k == n) break;
  }
  return out;
}

std::vector<PsSpace> ps_corpus(std::size_t max_points, bool dedup) {
  std::vector<PsSpace> out;
  for (std::size_t n = 1; n <= max_points; ++n) {
    auto s = all_pseudotopologies(n, dedup);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

Mask image(const PointMap& f, Mask a) {
  Mask out = 0;
  for_each_bit(a, [&](std::size_t x) { out |= bit(f[x]); });
  return out;
}

bool opens_finer(const FiniteSpace& fine, const FiniteSpace& coarse) {
  for (Mask u : coarse.opens())
    if (!fine.is_open(u)) return false;
  return true;
}

io::Json map_witness(const PsSpace& xi, const PsSpace& zeta, const PointMap& f) {
  return io::Json{{"source", io::psspace_to_json(xi)}, {"target", io::psspace_to_json(zeta)}, {"map", f}};
}

std::string corpus_text(const std::vector<PsSpace>& c, std::size_t max_points) {
  return std::to_string(c.size()) + " pseudotopologies up to isomorphism on 1.." + std::to_string(max_points) + " points";
}

void subspace_lemma(const SuiteOptions& o, SuiteContext& ctx) {
  const auto corpus = ps_corpus(o.max_points, true);
  for (const PsSpace& xi : corpus) {
    const FiniteSpace t = top_modification(xi);
    for (Mask a = 1; a <= xi.universe(); ++a) {
      const FiniteSpace lhs = top_modification(ps_subspace(xi, a));
      ctx.check(opens_finer(lhs, subspace(t, a)), "tau of the subspace is not finer than the subspace of tau",
                io::Json{{"space", io::psspace_to_json(xi)}, {"a", a}});
    }
  }
  ctx.set_corpus(corpus_text(corpus, o.max_points) + ", every nonempty subset");
}

template <class Body>
void for_continuous_maps(const std::vector<PsSpace>& corpus, std::size_t jobs, SuiteContext& ctx, Body body) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = 0; j < corpus.size(); ++j) pairs.emplace_back(i, j);
  parallel_cases(ctx, pairs.size(), jobs, [&](std::size_t idx, SuiteContext& c) {
    const PsSpace& xi = corpus[pairs[idx].first];
    const PsSpace& zeta = corpus[pairs[idx].second];
    for (const PointMap& f : all_point_maps(xi.size(), zeta.size()))
      if (check_continuity(f, xi, zeta).continuous) body(xi, zeta, f, c);
  });
}

void subspace_restriction(const SuiteOptions& o, SuiteContext& ctx) {
  const auto corpus = ps_corpus(o.max_points, true);
  for_continuous_maps(corpus, o.jobs, ctx, [](const PsSpace& xi, const PsSpace& zeta, const PointMap& f, SuiteContext& c) {
    for (Mask a = 1; a <= xi.universe(); ++a) {
      const Mask fa = image(f, a);
      for (Mask b = 1; b <= zeta.universe(); ++b) {
        if (!is_subset(fa, b)) continue;
        const PointMap r = restrict_map(f, a, b);
        c.check(check_continuity(r, ps_subspace(xi, a), ps_subspace(zeta, b)).continuous,
                "restriction of a continuous map is not continuous", map_witness(xi, zeta, f));
      }
    }
  });
  ctx.set_corpus(corpus_text(corpus, o.max_points) + ", every continuous map and every A, B with f(A) in B");
}

void compact_image(const SuiteOptions& o, SuiteContext& ctx) {
  const auto corpus = ps_corpus(o.max_points, true);
  for_continuous_maps(corpus, o.jobs, ctx, [](const PsSpace& xi, const PsSpace& zeta, const PointMap& f, SuiteContext& c) {
    for (Mask a = 0; a <= xi.universe(); ++a)
      for (Mask b = 0; b <= xi.universe(); ++b) {
        if (!compact_at(xi, a, b)) continue;
        c.check(compact_at(zeta, image(f, a), image(f, b)), "image of a compact set is not compact",
                io::Json{{"map", map_witness(xi, zeta, f)}, {"a", a}, {"b", b}});
      }
  });
  ctx.set_corpus(corpus_text(corpus, o.max_points) + ", every continuous map and every A, B");
}

bool is_bijection(const PointMap& f, std::size_t m) {
  if (f.size() != m) return false;
  std::vector<bool> hit(m, false);
  for (std::size_t y : f) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

void compact_balanced(const SuiteOptions& o, SuiteContext& ctx) {
  const auto corpus = ps_corpus(o.max_points, true);
  std::size_t instances = 0;
  for (const PsSpace& zeta : corpus) {
    // Finite Hausdorff topological codomains are exactly the discrete ones.
    if (!is_topological(zeta) || !is_hausdorff(top_modification(zeta))) continue;
    for (const PsSpace& xi : corpus) {
      for (const PointMap& f : all_point_maps(xi.size(), zeta.size())) {
        if (!is_bijection(f, zeta.size()) || !check_continuity(f, xi, zeta).continuous) continue;
        ++instances;
        PointMap inv(f.size());
        for (std::size_t x = 0; x < f.size(); ++x) inv[f[x]] = x;
        const bool homeo = check_continuity(inv, zeta, xi).continuous;
        bool singletons = true;
        for (std::size_t x = 0; x < xi.size(); ++x) singletons = singletons && xi.lim(x) == bit(x);
        ctx.check(homeo && singletons, "continuous bijection onto a Hausdorff space is not a homeomorphism",
                  map_witness(xi, zeta, f));
      }
    }
  }
  ctx.set_corpus(corpus_text(corpus, o.max_points) + ", " + std::to_string(instances) + " continuous bijections");
}

void pushouts(const SuiteOptions& o, SuiteContext& ctx) {
  std::vector<PsSpace> tops;
  for (const PsSpace& xi : ps_corpus(o.max_points, true))
    if (is_topological(xi)) tops.push_back(xi);
  std::vector<PsSpace> apexes;
  for (const PsSpace& xi : tops)
    if (xi.size() <= 2) apexes.push_back(xi);
  std::size_t spans = 0, hausdorff = 0;
  for (const PsSpace& a : apexes)
    for (const PsSpace& b : tops)
      for (const PsSpace& c : tops) {
        const FiniteSpace ta = top_modification(a), tb = top_modification(b), tc = top_modification(c);
        for (const PointMap& f : all_continuous_maps(ta, tb))
          for (const PointMap& g : all_continuous_maps(ta, tc)) {
            ++spans;
            const PushoutSpace p = pushout(ta, tb, tc, f, g);
            const PsSpace fin = final_structure(p.space.labels(), {b, c}, {p.left, p.right});
            const io::Json w{{"a", io::psspace_to_json(a)}, {"b", io::psspace_to_json(b)}, {"c", io::psspace_to_json(c)},
                             {"f", f}, {"g", g}};
            // τ is a left adjoint, so it carries the PsTop pushout to the Top pushout.
            ctx.check(top_modification(fin) == p.space, "tau of the PsTop pushout is not the Top pushout", w);
            if (is_hausdorff(p.space)) {
              ++hausdorff;
              ctx.check(fin == as_pseudotopology(p.space), "Hausdorff Top pushout is not the PsTop pushout", w);
            }
          }
      }
  ctx.set_corpus(std::to_string(spans) + " spans of topological pseudotopologies (apex at most 2 points), " +
                 std::to_string(hausdorff) + " with Hausdorff pushout");
}

void tau_iota(const SuiteOptions& o, SuiteContext& ctx) {
  const auto corpus = ps_corpus(o.max_points, true);
  std::vector<FiniteSpace> ys;
  for (const FiniteSpace& y : corpus::spaces_up_to(o.max_points))
    if (y.size() > 0) ys.push_back(y);
  for (const PsSpace& xi : corpus) {
    const FiniteSpace t = top_modification(xi);
    std::vector<Mask> by_filter = top_modification_opens_by_filter(xi);
    std::sort(by_filter.begin(), by_filter.end());
    std::vector<Mask> opens = t.opens();
    std::sort(opens.begin(), opens.end());
    ctx.check(opens == by_filter, "Horn-closure modification differs from the open-set criterion", io::psspace_to_json(xi));
    PointMap id(xi.size());
    for (std::size_t x = 0; x < id.size(); ++x) id[x] = x;
    ctx.check(check_continuity(id, xi, as_pseudotopology(t)).continuous, "unit is not continuous", io::psspace_to_json(xi));
    for (const FiniteSpace& y : ys) {
      const PsSpace iy = as_pseudotopology(y);
      for (const PointMap& f : all_point_maps(xi.size(), y.size()))
        ctx.check(check_continuity(f, xi, iy).continuous == is_continuous(t, y, f), "tau -| iota bijection fails",
                  io::Json{{"space", io::psspace_to_json(xi)}, {"target", io::space_to_json(y)}, {"map", f}});
    }
  }
  ctx.set_corpus(corpus_text(corpus, o.max_points) + " against spaces with at most " + std::to_string(o.max_points) +
                 " points");
}

void lattice(const SuiteOptions& o, SuiteContext& ctx) {
  for (std::size_t n = 1; n <= o.max_points; ++n) {
    const auto all = all_pseudotopologies(n, false);
    for (const PsSpace& xi : all)
      for (const PsSpace& zeta : all) {
        const PsSpace m = ps_meet(xi, zeta);
        const PsSpace j = ps_join(xi, zeta);
        bool ok = true;
        for (const PsSpace& eta : all) {
          ok = ok && ((finer(xi, eta) && finer(zeta, eta)) == finer(m, eta));
          ok = ok && ((finer(eta, xi) && finer(eta, zeta)) == finer(eta, j));
        }
        ctx.check(ok, "meet or join misses its universal property",
                  io::Json{{"xi", io::psspace_to_json(xi)}, {"zeta", io::psspace_to_json(zeta)}});
      }
  }
  const auto sources = ps_corpus(2, true);
  for (std::size_t m = 1; m <= o.max_points + 1; ++m) {
    const auto candidates = all_pseudotopologies(m, false);
    const auto labels = candidates.front().labels();
    // Final structure for one-map families.
    struct Family {
      std::vector<PsSpace> spaces;
      std::vector<PointMap> maps;
    };
    std::vector<Family> singles;
    for (const PsSpace& x : sources)
      for (const PointMap& f : all_point_maps(x.size(), m)) singles.push_back({{x}, {f}});
    std::vector<Family> families = singles;
    if (m <= o.max_points)
      for (std::size_t i = 0; i < singles.size(); ++i)
        for (std::size_t k = i + 1; k < singles.size(); ++k)
          families.push_back({{singles[i].spaces[0], singles[k].spaces[0]}, {singles[i].maps[0], singles[k].maps[0]}});
    for (const Family& fam : families) {
      const PsSpace fin = final_structure(labels, fam.spaces, fam.maps);
      bool ok = true;
      for (const PsSpace& eta : candidates) {
        bool all_cont = true;
        for (std::size_t k = 0; k < fam.maps.size(); ++k)
          all_cont = all_cont && check_continuity(fam.maps[k], fam.spaces[k], eta).continuous;
        ok = ok && all_cont == finer(fin, eta);
      }
      ctx.check(ok, "final structure misses its universal property", io::psspace_to_json(fin));
    }
    // Initial structure for one-map families into the small corpus.
    for (const PsSpace& y : sources)
      for (const PointMap& g : all_point_maps(m, y.size())) {
        const PsSpace ini = initial_structure(labels, {y}, {g});
        bool ok = true;
        for (const PsSpace& zeta : candidates) ok = ok && check_continuity(g, zeta, y).continuous == finer(zeta, ini);
        ctx.check(ok, "initial structure misses its universal property", io::psspace_to_json(ini));
      }
  }
  const PsSpace two = PsSpace::discrete({"0", "1"});
  const PsSpace fold = final_structure({"*"}, {two}, {{0, 0}});
  ctx.check(fold.size() == 1 && fold.lim(0) == 1, "final structure under the fold map is not the point");
  ctx.set_corpus("all pseudotopologies on 1.." + std::to_string(o.max_points) + " points; final/initial families on carriers up to " +
                 std::to_string(o.max_points + 1) + " points");
}

void compactness(const SuiteOptions& o, SuiteContext& ctx) {
  const auto corpus = ps_corpus(o.max_points, true);
  for (const PsSpace& xi : corpus) {
    const Mask x = xi.universe();
    ctx.check(compact_at(xi, x, x) && compact_at_literal(xi, x, x), "finite space is not compact", io::psspace_to_json(xi));
    ctx.check(adherence(xi, {x}) == x, "adherence of {X} is not X", io::psspace_to_json(xi));
    for (Mask a = 0; a <= x; ++a)
      for (Mask b = 0; b <= x; ++b)
        ctx.check(compact_at(xi, a, b) == compact_at_literal(xi, a, b), "fast compactness differs from the literal form",
                  io::Json{{"space", io::psspace_to_json(xi)}, {"a", a}, {"b", b}});
  }
  ctx.set_corpus(corpus_text(corpus, o.max_points));
}

void monotone_tau(const SuiteOptions& o, SuiteContext& ctx) {
  for (std::size_t n = 1; n <= o.max_points; ++n) {
    const auto all = all_pseudotopologies(n, false);
    std::vector<FiniteSpace> taus;
    for (const PsSpace& xi : all) taus.push_back(top_modification(xi));
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j)
        if (finer(all[i], all[j]))
          ctx.check(opens_finer(taus[i], taus[j]), "tau is not monotone",
                    io::Json{{"xi", io::psspace_to_json(all[i])}, {"zeta", io::psspace_to_json(all[j])}});
  }
  ctx.set_corpus("all comparable pairs of pseudotopologies on 1.." + std::to_string(o.max_points) + " points");
}

void ultra_continuity(const SuiteOptions& o, SuiteContext& ctx) {
  const auto corpus = ps_corpus(o.max_points, true);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = 0; j < corpus.size(); ++j) pairs.emplace_back(i, j);
  parallel_cases(ctx, pairs.size(), o.jobs, [&](std::size_t idx, SuiteContext& c) {
    const PsSpace& xi = corpus[pairs[idx].first];
    const PsSpace& zeta = corpus[pairs[idx].second];
    for (const PointMap& f : all_point_maps(xi.size(), zeta.size()))
      c.check(check_continuity(f, xi, zeta).continuous == continuous_on_ultrafilters(f, xi, zeta),
              "ultrafilter continuity differs from filter continuity", map_witness(xi, zeta, f));
  });
  ctx.set_corpus(corpus_text(corpus, o.max_points) + ", every map");
}

}  // namespace

void register_pstop(std::vector<Suite>& out) {
  out.push_back({"SubspaceLemma", "pstop-lemmas", subspace_lemma});
  out.push_back({"SubspaceRestiction", "pstop-lemmas", subspace_restriction});
  out.push_back({"CompactImageCompact", "pstop-lemmas", compact_image});
  out.push_back({"CompactSpacesBalanced", "pstop-lemmas", compact_balanced});
  out.push_back({"PushoutsInPsTop", "pstop-lemmas", pushouts});
  out.push_back({"TopModificationAdjunction", "pstop-lemmas", tau_iota});
  out.push_back({"PsTopLattice", "pstop-lemmas", lattice});
  out.push_back({"FiniteCompactness", "pstop-lemmas", compactness});
  out.push_back({"TopModificationMonotone", "pstop-lemmas", monotone_tau});
  out.push_back({"UltrafilterContinuity", "pstop-lemmas", ultra_continuity});
}

}  // namespace finloc::suites
