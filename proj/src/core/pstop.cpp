#include "finloc/pstop.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "finloc/iso.hpp"
#include "finloc/kernels.hpp"

namespace finloc {
namespace {

void same_carrier(const PsSpace& a, const PsSpace& b) {
  if (a.size() != b.size()) throw CarrierMismatchError("pseudotopologies live on carriers of different sizes");
}

std::vector<Mask> point_table(const PointMap& f) {
  std::vector<Mask> t(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) t[x] = bit(f[x]);
  return t;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

}  // namespace

PsSpace::PsSpace(std::vector<std::string> points, std::vector<Mask> lim) {
  const std::size_t n = points.size();
  if (n > kMaxMaskCarrier) throw SizeError("pseudotopological space has more than 64 points");
  if (lim.size() != n) throw InvalidPsSpaceError("one limit set per point required");
  std::set<std::string> seen;
  for (const auto& p : points)
    if (!seen.insert(p).second) throw DuplicateLabelError("duplicate point label '" + p + "'");
  for (std::size_t x = 0; x < n; ++x) {
    if (!is_subset(lim[x], full_mask(n))) throw InvalidPsSpaceError("limit set leaves the carrier");
    if (!contains(lim[x], x)) throw InvalidPsSpaceError("'" + points[x] + "' is not a limit of its own ultrafilter");
  }
  points_ = std::move(points);
  lim_ = std::move(lim);
}

PsSpace PsSpace::discrete(std::vector<std::string> points) {
  std::vector<Mask> lim(points.size());
  for (std::size_t x = 0; x < lim.size(); ++x) lim[x] = bit(x);
  return PsSpace(std::move(points), std::move(lim));
}

PsSpace PsSpace::indiscrete(std::vector<std::string> points) {
  std::vector<Mask> lim(points.size(), full_mask(points.size()));
  return PsSpace(std::move(points), std::move(lim));
}

std::size_t PsSpace::index_of(const std::string& label) const {
  auto it = std::find(points_.begin(), points_.end(), label);
  if (it == points_.end()) throw UnknownLabelError("unknown point '" + label + "'");
  return static_cast<std::size_t>(it - points_.begin());
}

Mask lim_filter(const PsSpace& xi, FilterRep f) {
  Mask out = xi.universe();
  for_each_bit(f.base, [&](std::size_t x) { out &= xi.lim(x); });
  return out;
}

std::vector<Mask> lim_all_filters(const PsSpace& xi) {
  const std::vector<Mask> bases = kernels::all_subsets(xi.size());
  std::vector<Mask> out(bases.size());
  kernels::and_gather(bases, xi.lims(), xi.universe(), out);
  return out;
}

ContinuityVerdict check_continuity(const PointMap& f, const PsSpace& xi, const PsSpace& zeta) {
  if (f.size() != xi.size()) throw CarrierMismatchError("map is not total on the source");
  for (std::size_t v : f)
    if (v >= zeta.size()) throw CarrierMismatchError("map leaves the target");
  const std::vector<Mask> bases = kernels::all_subsets(xi.size());
  const std::vector<Mask> table = point_table(f);
  std::vector<Mask> lims(bases.size()), image_of_lim(bases.size()), pushed(bases.size()), target_lim(bases.size());
  kernels::and_gather(bases, xi.lims(), xi.universe(), lims);
  kernels::or_gather(lims, table, image_of_lim);
  kernels::or_gather(bases, table, pushed);
  kernels::and_gather(pushed, zeta.lims(), zeta.universe(), target_lim);
  for (std::size_t i = 0; i < bases.size(); ++i)
    if (!is_subset(image_of_lim[i], target_lim[i])) return ContinuityVerdict{false, FilterRep{bases[i]}};
  return ContinuityVerdict{};
}

bool continuous_on_ultrafilters(const PointMap& f, const PsSpace& xi, const PsSpace& zeta) {
  for (std::size_t x = 0; x < xi.size(); ++x) {
    Mask image = 0;
    for_each_bit(xi.lim(x), [&](std::size_t z) { image |= bit(f[z]); });
    if (!is_subset(image, zeta.lim(f[x]))) return false;
  }
  return true;
}

bool finer(const PsSpace& xi, const PsSpace& zeta) {
  same_carrier(xi, zeta);
  for (std::size_t x = 0; x < xi.size(); ++x)
    if (!is_subset(xi.lim(x), zeta.lim(x))) return false;
  return true;
}

PsSpace ps_meet(const PsSpace& xi, const PsSpace& zeta) {
  same_carrier(xi, zeta);
  std::vector<Mask> lim(xi.size());
  for (std::size_t x = 0; x < lim.size(); ++x) lim[x] = xi.lim(x) | zeta.lim(x);
  return PsSpace(xi.labels(), std::move(lim));
}

PsSpace ps_join(const PsSpace& xi, const PsSpace& zeta) {
  same_carrier(xi, zeta);
  std::vector<Mask> lim(xi.size());
  for (std::size_t x = 0; x < lim.size(); ++x) lim[x] = (xi.lim(x) & zeta.lim(x)) | bit(x);
  return PsSpace(xi.labels(), std::move(lim));
}

PsSpace final_structure(std::vector<std::string> points, const std::vector<PsSpace>& sources,
                        const std::vector<PointMap>& maps) {
  if (sources.size() != maps.size()) throw InputError("final_structure: one map per source required");
  const std::size_t n = points.size();
  std::vector<Mask> lim(n);
  for (std::size_t y = 0; y < n; ++y) lim[y] = bit(y);
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (maps[k].size() != sources[k].size()) throw CarrierMismatchError("final_structure: map not total");
    for (std::size_t x = 0; x < maps[k].size(); ++x) {
      if (maps[k][x] >= n) throw CarrierMismatchError("final_structure: map leaves the carrier");
      for_each_bit(sources[k].lim(x), [&](std::size_t z) { lim[maps[k][x]] |= bit(maps[k][z]); });
    }
  }
  return PsSpace(std::move(points), std::move(lim));
}

PsSpace initial_structure(std::vector<std::string> points, const std::vector<PsSpace>& targets,
                          const std::vector<PointMap>& maps) {
  if (targets.size() != maps.size()) throw InputError("initial_structure: one map per target required");
  const std::size_t n = points.size();
  std::vector<Mask> lim(n, full_mask(n));
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (maps[k].size() != n) throw CarrierMismatchError("initial_structure: map not total");
    for (std::size_t x = 0; x < n; ++x) {
      if (maps[k][x] >= targets[k].size()) throw CarrierMismatchError("initial_structure: map leaves the target");
      Mask pre = 0;
      for (std::size_t z = 0; z < n; ++z)
        if (contains(targets[k].lim(maps[k][x]), maps[k][z])) pre |= bit(z);
      lim[x] &= pre;
    }
  }
  return PsSpace(std::move(points), std::move(lim));
}

FiniteSpace top_modification(const PsSpace& xi) {
  // Horn rules z ∈ O ⇒ x ∈ O for every z ∈ lim(x•); the least open containing
  // z is the Horn closure of {z}.
  std::vector<kernels::HornRule> rules;
  for (std::size_t x = 0; x < xi.size(); ++x)
    for_each_bit(xi.lim(x), [&](std::size_t z) {
      if (z != x) rules.push_back({bit(z), bit(x)});
    });
  std::vector<Mask> nbhd(xi.size());
  for (std::size_t z = 0; z < nbhd.size(); ++z) nbhd[z] = bit(z);
  kernels::horn_closure(nbhd, rules);
  return FiniteSpace::from_preorder(xi.labels(), std::move(nbhd));
}

std::vector<Mask> top_modification_opens_by_filter(const PsSpace& xi) {
  std::vector<Mask> out;
  for (Mask o : kernels::all_subsets(xi.size())) {
    bool open = true;
    for (std::size_t x = 0; x < xi.size() && open; ++x)
      if ((xi.lim(x) & o) != 0 && !contains(o, x)) open = false;
    if (open) out.push_back(o);
  }
  return out;
}

PsSpace as_pseudotopology(const FiniteSpace& y) {
  std::vector<Mask> lim(y.size(), 0);
  for (std::size_t x = 0; x < y.size(); ++x)
    for (std::size_t z = 0; z < y.size(); ++z)
      if (contains(y.nbhd(z), x)) lim[x] |= bit(z);
  return PsSpace(y.labels(), std::move(lim));
}

bool is_topological(const PsSpace& xi) { return as_pseudotopology(top_modification(xi)) == xi; }

PsSpace ps_subspace(const PsSpace& xi, Mask a) {
  a &= xi.universe();
  if (a == 0) throw EmptySubspaceError("subspace of the empty set");
  const std::vector<std::size_t> pts = bits_of(a);
  std::vector<std::string> labels;
  std::vector<Mask> lim(pts.size(), 0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    labels.push_back(xi.label(pts[i]));
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (contains(xi.lim(pts[i]), pts[j])) lim[i] |= bit(j);
  }
  return PsSpace(std::move(labels), std::move(lim));
}

PointMap restrict_map(const PointMap& f, Mask a, Mask b) {
  const std::vector<std::size_t> src = bits_of(a);
  const std::vector<std::size_t> dst = bits_of(b);
  PointMap out;
  for (std::size_t x : src) {
    auto it = std::find(dst.begin(), dst.end(), f[x]);
    if (it == dst.end()) throw CarrierMismatchError("restrict_map: f(A) is not inside B");
    out.push_back(static_cast<std::size_t>(it - dst.begin()));
  }
  return out;
}

std::vector<Mask> grill(std::size_t n, const std::vector<Mask>& collection) {
  const std::vector<Mask> all = kernels::all_subsets(n);
  std::vector<std::uint8_t> ok(all.size());
  kernels::meets_all(all, collection, ok);
  std::vector<Mask> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (ok[i]) out.push_back(all[i]);
  return out;
}

Mask adherence(const PsSpace& xi, const std::vector<Mask>& collection) {
  // A filter ↑B meshes 𝒜 iff B itself meets every member of 𝒜.
  const std::vector<Mask> bases = kernels::all_subsets(xi.size());
  std::vector<std::uint8_t> mesh(bases.size());
  kernels::meets_all(bases, collection, mesh);
  std::vector<Mask> lims(bases.size());
  kernels::and_gather(bases, xi.lims(), xi.universe(), lims);
  Mask out = 0;
  for (std::size_t i = 0; i < bases.size(); ++i)
    if (mesh[i]) out |= lims[i];
  return out;
}

std::vector<Mask> filter_members(std::size_t n, Mask base) {
  std::vector<Mask> out;
  const Mask rest = full_mask(n) & ~base;
  for (Mask sub = rest;; sub = (sub - 1) & rest) {
    out.push_back(base | sub);
    if (sub == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool compact_at_literal(const PsSpace& xi, Mask a, Mask b) {
  const std::size_t n = xi.size();
  for (Mask c : kernels::all_subsets(n)) {
    const std::vector<Mask> members = filter_members(n, c);
    const std::vector<Mask> g = grill(n, members);
    if (!std::binary_search(g.begin(), g.end(), a)) continue;
    if ((adherence(xi, members) & b) == 0) return false;
  }
  return true;
}

bool compact_at(const PsSpace& xi, Mask a, Mask b) {
  for (Mask c : kernels::all_subsets(xi.size())) {
    if ((a & c) == 0) continue;  // A ∉ (↑C)^#
    Mask adh = 0;
    for_each_bit(c, [&](std::size_t x) { adh |= xi.lim(x); });
    if ((adh & b) == 0) return false;
  }
  return true;
}

bool ps_hausdorff(const PsSpace& xi) {
  for (std::size_t x = 0; x < xi.size(); ++x)
    if (popcount(xi.lim(x)) > 1) return false;
  return true;
}

std::vector<PsSpace> all_pseudotopologies(std::size_t n, bool dedup) {
  if (n > 5) throw SizeError("all_pseudotopologies: at most 5 points");
  const std::vector<std::string> labels = default_labels(n);
  std::vector<PsSpace> out;
  std::set<Mask> codes;
  std::vector<Mask> lim(n);
  auto rec = [&](auto&& self, std::size_t x) -> void {
    if (x == n) {
      if (dedup && !codes.insert(canonical_relation_code(lim)).second) return;
      out.emplace_back(labels, lim);
      return;
    }
    const Mask rest = full_mask(n) & ~bit(x);
    for (Mask sub = 0;; sub = (sub - rest) & rest) {
      lim[x] = sub | bit(x);
      self(self, x + 1);
      if (sub == rest) break;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace finloc
