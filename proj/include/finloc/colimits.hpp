#pragma once

// Colimits of finite frames: the coproduct L ⊗ M as saturated downsets of
// L × M, copairing, products of frames, and pushouts of locales computed as
// pullbacks of frame homomorphisms.
//
// A subset of L × M is a Mask over pair indices a·|M| + b, so |L|·|M| ≤ 64.

#include <optional>
#include <unordered_map>
#include <vector>

#include "finloc/frame.hpp"

namespace finloc {

/// Pair bookkeeping for subsets of L × M.
class PairCarrier {
 public:
  PairCarrier(FrameRef left, FrameRef right);

  const FrameRef& left() const noexcept { return left_; }
  const FrameRef& right() const noexcept { return right_; }
  std::size_t size() const noexcept { return left_->size() * right_->size(); }
  std::size_t index(Elem a, Elem b) const {
    return static_cast<std::size_t>(a) * right_->size() + static_cast<std::size_t>(b);
  }
  Elem first(std::size_t p) const { return static_cast<Elem>(p / right_->size()); }
  Elem second(std::size_t p) const { return static_cast<Elem>(p % right_->size()); }

  /// ↓(a, b) in the product order.
  Mask down(Elem a, Elem b) const { return down_[index(a, b)]; }
  Mask down_closure(Mask u) const;
  bool is_downset(Mask u) const { return down_closure(u) == u; }
  /// n̄ = {(a, b) : a = ⊥ or b = ⊥}.
  Mask nbar() const noexcept { return nbar_; }
  /// x ⊗ y = ↓(x, y) ∪ n̄.
  Mask tensor(Elem x, Elem y) const { return down(x, y) | nbar_; }
  /// Product order on L × M as a poset labelled "(a,b)".
  FinitePoset product_order() const;
  std::string pair_label(std::size_t p) const;
  /// Maximal pairs of u outside n̄, rendered "{(a,b),...}"; identifies u among sets containing n̄.
  std::string generator_label(Mask u) const;

 private:
  FrameRef left_, right_;
  std::vector<Mask> down_;
  Mask nbar_ = 0;
};

/// The three prenuclei evaluated literally from their set-builder definitions.
struct PrenucleiValues {
  Mask sigma0 = 0;  // U ∪ {⋁D : D ⊆ U nonempty, updirected}
  Mask pi1 = 0;     // {(⋁X, y) : X × {y} ⊆ U}
  Mask pi2 = 0;     // {(x, ⋁Y) : {x} × Y ⊆ U, Y finite}
};

/// Throws NotDownsetError, or SizeError when a quantifier would walk more than
/// 2^limits.max_subset_carrier subsets.
PrenucleiValues prenuclei(const PairCarrier& c, Mask u, const Limits& limits = default_limits());

/// Least saturated downset containing U ∪ n̄ by fixpoint iteration of row and
/// column joins (σ₀ is the identity on finite frames and is skipped).
Mask saturate(const PairCarrier& c, Mask u);

/// Reference saturation iterating the literal prenuclei π₁ ∘ π̂₂ ∘ σ₀.
Mask saturate_literal(const PairCarrier& c, Mask u, const Limits& limits = default_limits());

/// Reference enumeration: every downset of L × M fixed by all three literal prenuclei.
std::vector<Mask> saturated_downsets_by_filter(const PairCarrier& c, const Limits& limits = default_limits());

/// L ⊗ M. Element k of `frame` is the saturated downset elements[k].
struct TensorFrame {
  PairCarrier carrier;
  FrameRef frame;
  std::vector<Mask> elements;
  std::unordered_map<Mask, Elem> index;
  FrameHom iota1;  // L → L ⊗ M
  FrameHom iota2;  // M → L ⊗ M

  const FrameRef& left() const noexcept { return carrier.left(); }
  const FrameRef& right() const noexcept { return carrier.right(); }
  std::optional<Elem> find(Mask s) const;
  /// Throws InvariantViolation when s is not an element.
  Elem element_of(Mask s) const;
  Elem tensor(Elem x, Elem y) const { return element_of(carrier.tensor(x, y)); }
  Elem nbar() const { return frame->bottom(); }
  /// Join in L ⊗ M of a family of pair subsets, as an element.
  Elem join_of(Mask u) const { return element_of(saturate(carrier, u)); }
};

/// Enumerates L ⊗ M as the join-closure of tensor elements. Throws SizeError
/// when |L|·|M| > 64 or the element count exceeds limits.max_frame_elements.
TensorFrame coproduct(const FrameRef& l, const FrameRef& m, const Limits& limits = default_limits());

/// id ⊗ f : L ⊗ M → L ⊗ N, (id ⊗ f)(S) = ⋁_{(a,b) ∈ S} a ⊗ f(b). Certifies
/// (id ⊗ f) ∘ ι₁ = ι₁ and (id ⊗ f) ∘ ι₂ = ι₂ ∘ f.
FrameHom map_tensor(const TensorFrame& lm, const TensorFrame& ln, const FrameHom& f);

/// The mediating map h(S) = ⋁_{(a,b) ∈ S} F(a) ∧ G(b); certifies h ∘ ι₁ = F and h ∘ ι₂ = G.
FrameHom copair(const TensorFrame& t, const FrameHom& f, const FrameHom& g);

/// Number of frame homs h : L ⊗ M → N with h ∘ ι₁ = F and h ∘ ι₂ = G, by
/// exhaustive search. The coproduct property says this is exactly one.
std::size_t count_mediating_homs(const TensorFrame& t, const FrameHom& f, const FrameHom& g,
                                 const Limits& limits = default_limits());

/// Product of frames with the pointwise order; element labels "(a,b,...)".
struct ProductFrame {
  std::vector<FrameRef> factors;
  FrameRef frame;
  std::vector<std::vector<Elem>> coords;
  std::vector<FrameHom> projections;

  /// Element with the given coordinates.
  Elem at(std::span<const Elem> coordinates) const;
};

/// Throws SizeError beyond limits.max_frame_elements.
ProductFrame product_frames(const std::vector<FrameRef>& family, const Limits& limits = default_limits());

struct DistributeIso {
  ProductFrame m;   // M₁ × M₂
  TensorFrame lm;   // L ⊗ (M₁ × M₂)
  TensorFrame lm1;  // L ⊗ M₁
  TensorFrame lm2;  // L ⊗ M₂
  ProductFrame rhs; // (L ⊗ M₁) × (L ⊗ M₂)
  FrameHom map;     // S ↦ ((id ⊗ p₁)S, (id ⊗ p₂)S)
};

/// Builds L ⊗ (M₁ × M₂) → (L ⊗ M₁) × (L ⊗ M₂) from id ⊗ p_k and certifies it is
/// an order isomorphism. Throws NotIsoError otherwise.
DistributeIso distribute_iso(const FrameRef& l, const FrameRef& m1, const FrameRef& m2,
                             const Limits& limits = default_limits());

/// Localic composite g ∘ f of localic maps f : A → B and g : B → C, each given
/// by its Galois connection (left adjoint = frame hom in the opposite direction).
GaloisConnection compose_localic(const GaloisConnection& g, const GaloisConnection& f);

/// Pushout in Loc of B ← A → C given by frame homs fL : B → A and gL : C → A.
struct PushoutLocaleResult {
  FrameRef apex;
  std::vector<std::pair<Elem, Elem>> pairs;  // apex element k is (b, c) = pairs[k]
  GaloisConnection leg_b;                    // left adjoint: projection P → B
  GaloisConnection leg_c;                    // left adjoint: projection P → C
};

/// P = {(b, c) : fL(b) = gL(c)} with componentwise operations (verified closed,
/// NotFrameError otherwise). Legs i_B(x) = ⋁{(b,c) ∈ P : b ≤ x}, cross-checked
/// against the right adjoint of the projection; the square is checked to commute.
PushoutLocaleResult pushout_loc(const FrameHom& f_left, const FrameHom& g_left);

/// Number of frame homs u : Q → P with p_B ∘ u = h_B and p_C ∘ u = h_C.
std::size_t count_pushout_mediators(const PushoutLocaleResult& p, const FrameHom& h_b, const FrameHom& h_c,
                                    const Limits& limits = default_limits());

/// A localic map f : A → X factors through the localic map i : Y → X when some
/// frame hom u : Y → A satisfies u ∘ i^L = f^L. Searched exhaustively.
bool factors_through(const GaloisConnection& f, const GaloisConnection& i, const Limits& limits = default_limits());

/// Image test: f^R(A) ⊆ i^R(Y).
bool image_contained(const GaloisConnection& f, const GaloisConnection& i);

}  // namespace finloc
