#include <map>
#include <random>

#include "finloc/corpus.hpp"
#include "finloc/lifting.hpp"
#include "suite_util.hpp"

namespace finloc::suites {
namespace {

io::Json arrow_witness(const Arrow& f) { return io::map_to_json(f); }

std::vector<Arrow> small_arrows() { return corpus::arrows(corpus::spaces_up_to(2), true); }

bool iso(const Arrow& f, const Arrow& g) { return find_arrow_iso(f, g).has_value(); }

struct Triple {
  Arrow f, i, g;
};

void check_adjunction(const Arrow& pp, const Arrow& pb, const Triple& t, SuiteContext& c) {
  const bool lhs = lifts_against(pp, t.g).holds;
  const bool rhs = lifts_against(t.f, pb).holds;
  c.check(lhs == rhs, "pushout product lifts against g but f does not lift against the pullback power (or conversely)",
          io::Json{{"f", arrow_witness(t.f)}, {"i", arrow_witness(t.i)}, {"g", arrow_witness(t.g)}, {"pushout_product", lhs},
                   {"pullback_power", rhs}});
}

void adjunction(const SuiteOptions& o, SuiteContext& ctx) {
  const auto arrows = small_arrows();
  const std::size_t n = arrows.size();
  // Pushout products f ×̂ i and pullback powers g ▷ i are shared across triples.
  std::vector<std::optional<Arrow>> pp(n * n), pb(n * n);
  parallel_cases(ctx, n * n, o.jobs, [&](std::size_t k, SuiteContext&) {
    pp[k] = pushout_product(arrows[k / n], arrows[k % n]).map;
    pb[k] = pullback_power(arrows[k / n], arrows[k % n]).map;
  });
  parallel_cases(ctx, n * n * n, o.jobs, [&](std::size_t k, SuiteContext& c) {
    const std::size_t fi = k / (n * n), ii = (k / n) % n, gi = k % n;
    check_adjunction(*pp[fi * n + ii], *pb[gi * n + ii], {arrows[fi], arrows[ii], arrows[gi]}, c);
  });
  // Constructions are built while drawing: a triple whose pullback-power corner
  // would exceed the 64-point carrier cap is redrawn, so the sample depends only on the seed.
  constexpr std::size_t kRandom = 500;
  std::mt19937_64 rng(o.seed);
  struct Drawn {
    Triple t;
    Arrow pp, pb;
  };
  std::vector<Drawn> random;
  std::size_t redrawn = 0;
  while (random.size() < kRandom) {
    Arrow f = corpus::random_arrow(3, rng);
    Arrow i = corpus::random_arrow(3, rng);
    Arrow g = corpus::random_arrow(3, rng);
    try {
      Arrow pp_map = pushout_product(f, i).map;
      Arrow pb_map = pullback_power(g, i).map;
      random.push_back({{std::move(f), std::move(i), std::move(g)}, std::move(pp_map), std::move(pb_map)});
    } catch (const SizeError&) {
      ++redrawn;
    }
  }
  parallel_cases(ctx, random.size(), o.jobs, [&](std::size_t k, SuiteContext& c) {
    check_adjunction(random[k].pp, random[k].pb, random[k].t, c);
  });
  ctx.set_corpus(std::to_string(n * n * n) + " triples of arrows between spaces with at most 2 points, plus " +
                 std::to_string(kRandom) + " random triples with at most 3 points (seed " + std::to_string(o.seed) + ", " +
                 std::to_string(redrawn) + " redrawn over the carrier cap)");
}

void symmetry(const SuiteOptions& o, SuiteContext& ctx) {
  const auto arrows = small_arrows();
  const std::size_t n = arrows.size();
  std::vector<std::optional<Arrow>> pp(n * n);
  parallel_cases(ctx, n * n, o.jobs, [&](std::size_t k, SuiteContext& c) {
    pp[k] = pushout_product(arrows[k / n], arrows[k % n]).map;
    const Arrow swapped = pushout_product(arrows[k % n], arrows[k / n]).map;
    c.check(iso(*pp[k], swapped), "f x^ g is not isomorphic to g x^ f",
            io::Json{{"f", arrow_witness(arrows[k / n])}, {"g", arrow_witness(arrows[k % n])}});
  });
  parallel_cases(ctx, n * n * n, o.jobs, [&](std::size_t k, SuiteContext& c) {
    const std::size_t a = k / (n * n), b = (k / n) % n, d = k % n;
    const Arrow lhs = pushout_product(*pp[a * n + b], arrows[d]).map;
    const Arrow rhs = pushout_product(arrows[a], *pp[b * n + d]).map;
    c.check(iso(lhs, rhs), "pushout product is not associative up to isomorphism",
            io::Json{{"f", arrow_witness(arrows[a])}, {"g", arrow_witness(arrows[b])}, {"h", arrow_witness(arrows[d])}});
  });
  ctx.set_corpus(std::to_string(n) + " arrows between spaces with at most 2 points: all pairs and triples");
}

void identity_unit(const SuiteOptions&, SuiteContext& ctx) {
  const auto spaces = corpus::spaces_up_to(2);
  const auto arrows = small_arrows();
  const FiniteSpace empty = corpus::empty_space();
  for (const FiniteSpace& a : spaces) {
    const Arrow bang(empty, a, {});
    for (const Arrow& f : arrows) {
      const Arrow lhs = pushout_product(bang, f).map;
      const ProductSpace ax = product(a, f.source()), ay = product(a, f.target());
      PointMap m(ax.space.size());
      for (std::size_t p = 0; p < a.size(); ++p)
        for (std::size_t x = 0; x < f.source().size(); ++x) m[ax.index(p, x)] = ay.index(p, f(x));
      const Arrow rhs(ax.space, ay.space, m);
      ctx.check(iso(lhs, rhs), "!_A x^ f is not id_A x f", io::Json{{"a", io::space_to_json(a)}, {"f", arrow_witness(f)}});
    }
  }
  ctx.set_corpus(std::to_string(spaces.size()) + " spaces A and " + std::to_string(arrows.size()) +
                 " arrows f, at most 2 points");
}

void arrow_category(const SuiteOptions& o, SuiteContext& ctx) {
  const auto all = corpus::arrows(corpus::spaces_up_to(2), false);
  const auto reps = small_arrows();
  std::vector<std::pair<std::size_t, std::size_t>> isos;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b)
      if (iso(all[a], all[b])) isos.emplace_back(a, b);
  parallel_cases(ctx, isos.size(), o.jobs, [&](std::size_t k, SuiteContext& c) {
    const Arrow& f = all[isos[k].first];
    const Arrow& f2 = all[isos[k].second];
    for (const Arrow& g : reps) {
      const io::Json w{{"f", arrow_witness(f)}, {"f_iso", arrow_witness(f2)}, {"g", arrow_witness(g)}};
      c.check(iso(pushout_product(f, g).map, pushout_product(f2, g).map), "pushout product is not iso-invariant", w);
      c.check(iso(pullback_power(f, g).map, pullback_power(f2, g).map), "pullback power is not iso-invariant", w);
    }
  });
  ctx.set_corpus(std::to_string(isos.size()) + " isomorphic arrow pairs against " + std::to_string(reps.size()) +
                 " arrows, at most 2 points");
}

bool composes_to(const Arrow& p, const Arrow& i, const Arrow& f) {
  if (i.source() != f.source() || p.target() != f.target()) return false;
  for (std::size_t x = 0; x < f.source().size(); ++x)
    if (p(i(x)) != f(x)) return false;
  return true;
}

void cell_complex(const SuiteOptions& o, SuiteContext& ctx) {
  const auto cases = corpus::factorization_regression();
  std::size_t complete = 0;
  for (const auto& c : cases) {
    const FactorizationTrace t = bounded_factorize(c.map, c.generators, o.steps);
    const bool lifts = rlp(t.right, c.generators).holds;
    const io::Json w{{"case", c.name}, {"verdict", verdict_name(t.verdict)}};
    ctx.check(composes_to(t.right, t.left, c.map), "p . i differs from f", w);
    ctx.check(replay_trace(t, c.generators), "trace does not replay", w);
    ctx.check(t.stages.size() <= o.steps, "more stages than the bound", w);
    if (t.verdict == FactorizationVerdict::complete) {
      ++complete;
      ctx.check(lifts, "COMPLETE right factor fails the rlp", w);
    } else {
      ctx.check(!lifts, "PARTIAL verdict for a right factor that has the rlp", w);
    }
  }
  ctx.set_corpus(std::to_string(cases.size()) + " regression maps, " + std::to_string(complete) + " COMPLETE at " +
                 std::to_string(o.steps) + " steps");
}

// Pushouts of s along every map out of its domain into a small space.
std::vector<Arrow> pushouts_of(const Arrow& s, const std::vector<FiniteSpace>& spaces) {
  std::vector<Arrow> out;
  for (const FiniteSpace& c : spaces)
    for (const PointMap& u : all_continuous_maps(s.source(), c)) out.push_back(pushout_of(s, Arrow(s.source(), c, u)));
  return out;
}

void rlp_cof(const SuiteOptions& o, SuiteContext& ctx) {
  const auto spaces = corpus::spaces_up_to(2);
  const auto arrows = small_arrows();
  parallel_cases(ctx, arrows.size(), o.jobs, [&](std::size_t k, SuiteContext& c) {
    const std::vector<Arrow> s{arrows[k]};
    std::vector<Arrow> closed = s;
    for (const Arrow& q : pushouts_of(arrows[k], spaces)) closed.push_back(q);
    for (const Arrow& f : arrows)
      c.check(rlp(f, s).holds == rlp(f, closed).holds, "rlp(S) differs from rlp of S with its pushouts",
              io::Json{{"s", arrow_witness(arrows[k])}, {"f", arrow_witness(f)}});
  });
  ctx.set_corpus(std::to_string(arrows.size()) + " generators against " + std::to_string(arrows.size()) +
                 " arrows, pushouts into spaces with at most 2 points");
}

void llp_rlp(const SuiteOptions& o, SuiteContext& ctx) {
  const auto spaces = corpus::spaces_up_to(2);
  const auto arrows = small_arrows();
  parallel_cases(ctx, arrows.size(), o.jobs, [&](std::size_t k, SuiteContext& c) {
    const std::vector<Arrow> s{arrows[k]};
    std::vector<Arrow> right;
    for (const Arrow& f : arrows)
      if (rlp(f, s).holds) right.push_back(f);
    const io::Json w{{"s", arrow_witness(arrows[k])}, {"rlp_class", right.size()}};
    c.check(llp(arrows[k], right).holds, "generator fails the llp against its own rlp class", w);
    for (const Arrow& q : pushouts_of(arrows[k], spaces))
      c.check(llp(q, right).holds, "pushout of a generator fails the llp against the rlp class", w);
  });
  ctx.set_corpus(std::to_string(arrows.size()) + " singleton generating sets over arrows with at most 2 points");
}

void exponential_law(const SuiteOptions&, SuiteContext& ctx) {
  const auto spaces = corpus::spaces_up_to(2);
  std::size_t triples = 0;
  for (const FiniteSpace& z : spaces)
    for (const FiniteSpace& a : spaces)
      for (const FiniteSpace& x : spaces) {
        ++triples;
        const ProductSpace za = product(z, a);
        const ExponentialSpace xa = exponential(a, x);
        const auto uncurried = all_continuous_maps(za.space, x);
        const auto curried = all_continuous_maps(z, xa.space);
        std::map<PointMap, int> seen;
        bool ok = uncurried.size() == curried.size();
        for (const PointMap& g : uncurried) {
          PointMap c(z.size());
          for (std::size_t p = 0; p < z.size(); ++p) {
            PointMap slice(a.size());
            for (std::size_t q = 0; q < a.size(); ++q) slice[q] = g[za.index(p, q)];
            c[p] = xa.index_of(slice);
          }
          ok = ok && is_continuous(z, xa.space, c) && seen.emplace(c, 0).second;
        }
        ctx.check(ok, "currying is not a bijection",
                  io::Json{{"z", io::space_to_json(z)}, {"a", io::space_to_json(a)}, {"x", io::space_to_json(x)}});
      }
  ctx.set_corpus(std::to_string(triples) + " triples of spaces with at most 2 points");
}

}  // namespace

void register_lifting(std::vector<Suite>& out) {
  out.push_back({"PushProdAndPullPowerLemma", "lifting", adjunction});
  out.push_back({"PushProdSymmetry", "lifting", symmetry});
  out.push_back({"PushProdIdentity1", "lifting", identity_unit});
  out.push_back({"PushProdArrowCategory", "lifting", arrow_category});
  out.push_back({"CellComplexSOA", "lifting", cell_complex});
  out.push_back({"RlpCofClosure", "lifting", rlp_cof});
  out.push_back({"LlpRlpContainment", "lifting", llp_rlp});
  out.push_back({"ExponentialLaw", "lifting", exponential_law});
}

}  // namespace finloc::suites
