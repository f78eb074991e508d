#pragma once

// Finite pseudotopological spaces. On a finite carrier every ultrafilter is
// principal, so a pseudotopology is just lim(x•) ⊆ X for each point x, and
// every proper filter is ↑A for a unique nonempty A.

#include <optional>
#include <string>
#include <vector>

#include "finloc/common.hpp"
#include "finloc/limits.hpp"
#include "finloc/space.hpp"

namespace finloc {

class PsSpace {
 public:
  PsSpace() = default;

  /// lim[x] = lim(x•) must contain x. Throws InvalidPsSpaceError, DuplicateLabelError, SizeError.
  PsSpace(std::vector<std::string> points, std::vector<Mask> lim);

  static PsSpace discrete(std::vector<std::string> points);
  static PsSpace indiscrete(std::vector<std::string> points);

  std::size_t size() const noexcept { return points_.size(); }
  const std::string& label(std::size_t i) const { return points_[i]; }
  const std::vector<std::string>& labels() const noexcept { return points_; }
  std::size_t index_of(const std::string& label) const;
  Mask universe() const noexcept { return full_mask(size()); }
  Mask lim(std::size_t x) const { return lim_[x]; }
  const std::vector<Mask>& lims() const noexcept { return lim_; }

  friend bool operator==(const PsSpace& a, const PsSpace& b) { return a.points_ == b.points_ && a.lim_ == b.lim_; }

 private:
  std::vector<std::string> points_;
  std::vector<Mask> lim_;
};

/// ↑A for nonempty A; the improper filter (all subsets) has base ∅.
struct FilterRep {
  Mask base = 0;
  bool improper() const noexcept { return base == 0; }
};

/// ⋂_{x ∈ A} lim(x•); the whole carrier for the improper filter.
Mask lim_filter(const PsSpace& xi, FilterRep f);

/// lim_filter for every subset of the carrier, indexed by base mask.
std::vector<Mask> lim_all_filters(const PsSpace& xi);

struct ContinuityVerdict {
  bool continuous = true;
  std::optional<FilterRep> witness;
};

/// f(lim_ξ F) ⊆ lim_ζ f_*F for every filter F, including the improper one.
ContinuityVerdict check_continuity(const PointMap& f, const PsSpace& xi, const PsSpace& zeta);

/// Ultrafilter-only test: f(lim(x•)) ⊆ lim(f(x)•).
bool continuous_on_ultrafilters(const PointMap& f, const PsSpace& xi, const PsSpace& zeta);

/// ξ finer than ζ: lim_ξ(x•) ⊆ lim_ζ(x•) for all x.
bool finer(const PsSpace& xi, const PsSpace& zeta);

/// Pointwise union (infimum) and intersection (supremum). Throws CarrierMismatchError.
PsSpace ps_meet(const PsSpace& xi, const PsSpace& zeta);
PsSpace ps_join(const PsSpace& xi, const PsSpace& zeta);

/// Finest pseudotopology on `points` making every f_k : X_k → Y continuous.
PsSpace final_structure(std::vector<std::string> points, const std::vector<PsSpace>& sources,
                        const std::vector<PointMap>& maps);

/// Coarsest pseudotopology on `points` making every g_k : X → Y_k continuous.
PsSpace initial_structure(std::vector<std::string> points, const std::vector<PsSpace>& targets,
                          const std::vector<PointMap>& maps);

/// τξ: O is open iff lim(x•) ∩ O ≠ ∅ implies x ∈ O.
FiniteSpace top_modification(const PsSpace& xi);

/// Reference τξ: filters every subset through the open-set criterion.
std::vector<Mask> top_modification_opens_by_filter(const PsSpace& xi);

/// ι Y: lim(x•) = {z : every neighbourhood of z contains x}.
PsSpace as_pseudotopology(const FiniteSpace& y);

/// ξ = ι τ ξ.
bool is_topological(const PsSpace& xi);

/// ξ|A with lim(a•) = lim_ξ(a•) ∩ A, points in index order. Throws EmptySubspaceError.
PsSpace ps_subspace(const PsSpace& xi, Mask a);

/// Restricts x ↦ f(x) to A → B, re-indexed into the subspaces.
PointMap restrict_map(const PointMap& f, Mask a, Mask b);

/// 𝒜^#: every subset meeting all members of 𝒜.
std::vector<Mask> grill(std::size_t n, const std::vector<Mask>& collection);

/// adh 𝒜 = ⋃ lim F over all filters F meshing 𝒜 (the improper filter meshes only the empty collection).
Mask adherence(const PsSpace& xi, const std::vector<Mask>& collection);

/// Every superset of `base`: the members of ↑base as an explicit collection.
std::vector<Mask> filter_members(std::size_t n, Mask base);

/// A is ξ-compact at B: for every filter F with A ∈ F^#, adh F ∩ B ≠ ∅.
/// The literal form evaluates grills and adherences from their definitions.
bool compact_at_literal(const PsSpace& xi, Mask a, Mask b);

/// Same verdict via adh(↑C) = ⋃_{x ∈ C} lim(x•).
bool compact_at(const PsSpace& xi, Mask a, Mask b);

/// Every ultrafilter converges to at most one point.
bool ps_hausdorff(const PsSpace& xi);

/// All pseudotopologies on n points; with dedup, one per isomorphism class. n ≤ 5.
std::vector<PsSpace> all_pseudotopologies(std::size_t n, bool dedup);

}  // namespace finloc
