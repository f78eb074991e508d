#pragma once

// Finite frames (finite distributive lattices), frame homomorphisms, Galois
// connections, way-below and nuclei.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finloc/common.hpp"
#include "finloc/limits.hpp"
#include "finloc/poset.hpp"

namespace finloc {

class FiniteFrame;
using FrameRef = std::shared_ptr<const FiniteFrame>;

/// A finite lattice with validated distributivity. Meets and joins are
/// tabulated once; frames are immutable and shared through FrameRef.
class FiniteFrame {
 public:
  std::size_t size() const noexcept { return order_.size(); }
  const FinitePoset& order() const noexcept { return order_; }
  const std::string& label(Elem a) const { return order_.label(static_cast<std::size_t>(a)); }
  Elem index_of(const std::string& label) const { return static_cast<Elem>(order_.index_of(label)); }

  bool leq(Elem a, Elem b) const { return order_.leq(static_cast<std::size_t>(a), static_cast<std::size_t>(b)); }
  Elem meet(Elem a, Elem b) const { return meet_[idx(a, b)]; }
  Elem join(Elem a, Elem b) const { return join_[idx(a, b)]; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  /// Join / meet of a finite family (bottom / top when empty).
  Elem join_all(std::span<const Elem> xs) const;
  Elem meet_all(std::span<const Elem> xs) const;

  /// Elements in a linear extension of the order (bottom first).
  const std::vector<std::size_t>& linear_extension() const noexcept { return order_.linear_extension(); }

  /// For each element w, the pairs (a, b), a < b positionally, with a ∨ b = w.
  const std::vector<std::vector<std::pair<Elem, Elem>>>& join_preimages() const noexcept { return join_preimages_; }

  friend FrameRef frame_from_poset(FinitePoset order);

 private:
  std::size_t idx(Elem a, Elem b) const { return static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b); }

  FinitePoset order_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  Elem bottom_ = 0;
  Elem top_ = 0;
  std::vector<std::vector<std::pair<Elem, Elem>>> join_preimages_;
};

/// Computes meet/join tables, checks every pair has both and that the binary
/// distributive law holds for all triples. Throws NotLatticeError or
/// NotDistributiveError (with the witness triple).
FrameRef frame_from_poset(FinitePoset order);

/// Frame of a family of distinct subsets ordered by inclusion; labels[i] names sets[i].
/// Throws NotLatticeError / NotDistributiveError when the family is not a frame.
FrameRef inclusion_frame(std::vector<std::string> labels, const std::vector<Mask>& sets);

/// Structural equality: same labels, same order.
bool same_frame(const FiniteFrame& a, const FiniteFrame& b);

/// Common frames, labelled by position.
FrameRef two_frame();                 // 0 < 1
FrameRef trivial_frame();             // one element, 0 = 1
FrameRef chain_frame(std::size_t n);  // 0 < 1 < ... < n-1
FrameRef boolean_frame(std::size_t atoms);

/// A validated frame homomorphism source → target.
class FrameHom {
 public:
  /// check_frame_hom: verifies bottom, top, binary joins and binary meets.
  /// Throws NotHomError with a witness.
  FrameHom(FrameRef source, FrameRef target, std::vector<Elem> map);

  static FrameHom identity(const FrameRef& f);

  const FrameRef& source() const noexcept { return source_; }
  const FrameRef& target() const noexcept { return target_; }
  Elem operator()(Elem x) const { return map_[static_cast<std::size_t>(x)]; }
  const std::vector<Elem>& map() const noexcept { return map_; }
  bool injective() const;
  bool surjective() const;

  friend bool operator==(const FrameHom& a, const FrameHom& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.map_ == b.map_;
  }

 private:
  FrameRef source_;
  FrameRef target_;
  std::vector<Elem> map_;
};

inline FrameHom check_frame_hom(FrameRef source, FrameRef target, std::vector<Elem> map) {
  return FrameHom(std::move(source), std::move(target), std::move(map));
}

/// Order isomorphism between frames as a FrameHom, or nullopt.
std::optional<FrameHom> find_frame_iso(const FrameRef& a, const FrameRef& b);

/// g ∘ f.
FrameHom compose(const FrameHom& g, const FrameHom& f);

/// Every frame homomorphism l → m. fixed[x] ≥ 0 pins the image of x.
std::vector<FrameHom> enumerate_frame_homs(const FrameRef& l, const FrameRef& m,
                                           std::span<const Elem> fixed = {},
                                           const Limits& limits = default_limits());

/// Reference enumeration over every raw assignment; only for tiny frames.
std::vector<FrameHom> enumerate_frame_homs_brute(const FrameRef& l, const FrameRef& m);

/// f : L ⇄ M : g with f a frame hom and g its right adjoint (the localic map).
struct GaloisConnection {
  FrameHom left;
  std::vector<Elem> right;

  Elem apply_right(Elem y) const { return right[static_cast<std::size_t>(y)]; }
  bool right_injective() const;
  bool right_surjective() const;
};

/// g(y) = ⋁{x : f(x) ≤ y}. The returned connection is certified: adjunction,
/// fgf = f, gfg = g, and g preserves all meets.
GaloisConnection right_adjoint(const FrameHom& f);

/// Literal evaluation: for every K ⊆ L with ⋁K = b there is a finite K' ⊆ K
/// with a ≤ ⋁K'. Throws SizeError beyond limits.max_way_below_elements.
bool way_below(const FiniteFrame& l, Elem a, Elem b, const Limits& limits = default_limits());

/// a = ⋁{x : x ≪ a} for every a.
bool is_locally_compact(const FiniteFrame& l, const Limits& limits = default_limits());

/// Order-preserving, inflationary, k(x) ∧ y ≤ k(x ∧ y). Throws NotPrenucleusError.
class Prenucleus {
 public:
  Prenucleus(FrameRef frame, std::vector<Elem> map);
  const FrameRef& frame() const noexcept { return frame_; }
  Elem operator()(Elem x) const { return map_[static_cast<std::size_t>(x)]; }
  const std::vector<Elem>& map() const noexcept { return map_; }
  std::vector<Elem> fixed_points() const;

 private:
  FrameRef frame_;
  std::vector<Elem> map_;
};

/// Checks the prenucleus laws without throwing.
bool is_prenucleus(const FiniteFrame& l, std::span<const Elem> map);

/// Monotone, inflationary, idempotent and binary-meet preserving.
bool is_nucleus(const FiniteFrame& l, std::span<const Elem> map);

class Nucleus {
 public:
  /// Throws InvariantViolation when the map is not a nucleus.
  Nucleus(FrameRef frame, std::vector<Elem> map);
  const FrameRef& frame() const noexcept { return frame_; }
  Elem operator()(Elem x) const { return map_[static_cast<std::size_t>(x)]; }
  const std::vector<Elem>& map() const noexcept { return map_; }
  std::vector<Elem> fixed_points() const;

 private:
  FrameRef frame_;
  std::vector<Elem> map_;
};

/// k(x) = ⋀{y ∈ Fix(k₀) : x ≤ y}.
Nucleus nucleus_from_prenucleus(const Prenucleus& k0);

/// Cross-check route: iterate k₀ from x until it stabilises.
std::vector<Elem> iterate_to_fixpoint(const Prenucleus& k0);

/// If every element of the codomain is a join of members of `generators` and
/// all generators lie in the image of f, f is surjective. Returns whether the
/// hypothesis holds; when it does the caller can compare with f.surjective().
bool density_hypothesis(const FrameHom& f, std::span<const Elem> generators);

}  // namespace finloc
