#pragma once

// The Ω ⊣ pt adjunction between finite spaces and finite locales.

#include <optional>
#include <vector>

#include "finloc/colimits.hpp"
#include "finloc/frame.hpp"
#include "finloc/space.hpp"

namespace finloc {

/// Ω X: the opens of X ordered by inclusion. Element k is opens[k].
struct OmegaFrame {
  FiniteSpace space;
  FrameRef frame;
  std::vector<Mask> opens;

  /// Throws InvariantViolation when u is not open.
  Elem element_of(Mask u) const;
};

OmegaFrame omega(const FiniteSpace& x, const Limits& limits = default_limits());

/// Ω f = f⁻¹ : Ω Y → Ω X.
FrameHom omega_map(const ContinuousMap& f, const OmegaFrame& ox, const OmegaFrame& oy);

/// pt L. Point k is the frame hom points[k] : L → 2; it is the prime filter ↑p
/// of a join-irreducible p, labelled like p. Opens are Σ_a = {p : p(a) = ⊤}.
struct PointSpace {
  FrameRef frame;
  FiniteSpace space;
  std::vector<Elem> generators;  // join-irreducible behind each point
  std::vector<FrameHom> points;
  std::vector<Mask> sigma;       // sigma[a] = Σ_a
};

/// Throws SizeError when L has more than 64 points.
PointSpace pt(const FrameRef& l, const Limits& limits = default_limits());

/// Reference: every frame hom L → 2 by exhaustive enumeration.
std::vector<FrameHom> points_by_enumeration(const FrameRef& l, const Limits& limits = default_limits());

struct SpatialVerdict {
  bool spatial = false;
  OmegaFrame omega_pt;
  /// a ↦ Σ_a as a map L → Ω(pt L); an isomorphism exactly when spatial.
  std::vector<Elem> comparison;
};

SpatialVerdict is_spatial(const FrameRef& l, const Limits& limits = default_limits());

/// Transposes across Frm(L, Ω X) ≅ Top(X, pt L).
PointMap transpose_to_points(const FrameHom& h, const OmegaFrame& ox, const PointSpace& ptl);
FrameHom transpose_to_frame(const PointMap& phi, const OmegaFrame& ox, const PointSpace& ptl);

struct AdjunctionVerdict {
  std::size_t frame_homs = 0;
  std::size_t continuous_maps = 0;
  bool bijection = false;
};

/// Enumerates both hom-sets and checks the transposes are mutually inverse.
/// Throws HypothesisError when X is not sober.
AdjunctionVerdict adjunction_check(const FiniteSpace& x, const FrameRef& l, const Limits& limits = default_limits());

/// Comparison Ω X ⊗ Ω Y → Ω(X × Y), copairing the preimage maps of the projections.
struct SpatialProductWitness {
  TensorFrame tensor;
  OmegaFrame omega_product;
  FrameHom comparison;
  bool iso = false;
};

SpatialProductWitness spatial_product(const FiniteSpace& x, const FiniteSpace& y,
                                      const Limits& limits = default_limits());

}  // namespace finloc
