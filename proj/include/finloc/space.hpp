#pragma once

// Finite (Alexandrov) topological spaces and the constructions the lifting
// machinery needs. A finite space is stored through its minimal open
// neighbourhoods ↑x, so opens are exactly the up-sets of the specialization
// preorder x ≤ y ⇔ y ∈ ↑x. Open families are enumerated on demand.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "finloc/common.hpp"
#include "finloc/limits.hpp"

namespace finloc {

using PointMap = std::vector<std::size_t>;

class FiniteSpace {
 public:
  FiniteSpace() = default;

  /// Checks ∅ and the full set are open and opens are closed under ∪ and ∩.
  /// Throws DuplicateLabelError, SizeError or InvalidSpaceError.
  static FiniteSpace from_opens(std::vector<std::string> points, const std::vector<Mask>& opens);

  /// nbhd[i] must contain i and be closed: j ∈ nbhd[i] implies nbhd[j] ⊆ nbhd[i].
  static FiniteSpace from_preorder(std::vector<std::string> points, std::vector<Mask> nbhd);

  static FiniteSpace discrete(std::vector<std::string> points);
  static FiniteSpace indiscrete(std::vector<std::string> points);
  /// Points x, y with opens ∅, {y}, {x, y}.
  static FiniteSpace sierpinski();
  static FiniteSpace point(std::string label = "*");

  std::size_t size() const noexcept { return points_.size(); }
  const std::string& label(std::size_t i) const { return points_[i]; }
  const std::vector<std::string>& labels() const noexcept { return points_; }
  std::optional<std::size_t> find(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;
  Mask universe() const noexcept { return full_mask(size()); }

  /// Minimal open neighbourhood ↑x.
  Mask nbhd(std::size_t x) const { return nbhd_[x]; }
  /// Closure of {x}, i.e. ↓x.
  Mask point_closure(std::size_t x) const { return closure_[x]; }
  const std::vector<Mask>& nbhds() const noexcept { return nbhd_; }
  const std::vector<Mask>& point_closures() const noexcept { return closure_; }
  bool leq(std::size_t x, std::size_t y) const { return contains(nbhd_[x], y); }

  bool is_open(Mask u) const;
  bool is_closed(Mask u) const { return is_open(universe() & ~u); }
  Mask closure(Mask u) const;
  Mask interior(Mask u) const;

  /// All opens, ordered by (cardinality, mask value).
  std::vector<Mask> opens(const Limits& limits = default_limits()) const;
  std::vector<Mask> closed_sets(const Limits& limits = default_limits()) const;

  bool is_t0() const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.points_ == b.points_ && a.nbhd_ == b.nbhd_;
  }

 private:
  std::vector<std::string> points_;
  std::map<std::string, std::size_t> index_;
  std::vector<Mask> nbhd_;
  std::vector<Mask> closure_;
};

/// Continuous map between finite spaces; validated at construction.
class ContinuousMap {
 public:
  /// Throws NotContinuousError with the offending point pair.
  ContinuousMap(FiniteSpace source, FiniteSpace target, PointMap image);

  static ContinuousMap identity(const FiniteSpace& x);

  const FiniteSpace& source() const noexcept { return source_; }
  const FiniteSpace& target() const noexcept { return target_; }
  std::size_t operator()(std::size_t x) const { return image_[x]; }
  const PointMap& image() const noexcept { return image_; }
  Mask image_of(Mask u) const;
  Mask preimage(Mask v) const;
  bool injective() const;
  bool surjective() const;

 private:
  FiniteSpace source_;
  FiniteSpace target_;
  PointMap image_;
};

/// True iff x ≤ y implies f(x) ≤ f(y), equivalently preimages of opens are open.
bool is_continuous(const FiniteSpace& s, const FiniteSpace& t, const PointMap& f);

/// g ∘ f; throws CarrierMismatchError when f's target is not g's source.
ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f);

/// Visits every continuous map s → t with f(x) ∈ allowed[x] (allowed may be
/// empty = unconstrained). The visitor returns false to stop early.
/// Returns the number of maps visited.
std::size_t enumerate_continuous_maps(const FiniteSpace& s, const FiniteSpace& t,
                                      const std::vector<Mask>& allowed,
                                      const std::function<bool(const PointMap&)>& visit);

std::vector<PointMap> all_continuous_maps(const FiniteSpace& s, const FiniteSpace& t);

/// Homeomorphism s → t as a point map, or nullopt.
std::optional<PointMap> find_homeomorphism(const FiniteSpace& s, const FiniteSpace& t);

FiniteSpace subspace(const FiniteSpace& x, Mask a);

struct ProductSpace {
  FiniteSpace space;
  std::size_t right_size = 0;
  std::size_t index(std::size_t a, std::size_t b) const { return a * right_size + b; }
};

/// Product with points "(a,b)" at index a * |y| + b.
ProductSpace product(const FiniteSpace& x, const FiniteSpace& y);

struct CoproductSpace {
  FiniteSpace space;
  std::size_t left_size = 0;
};

/// Disjoint union; left points first, labels tagged "(0,a)" / "(1,b)".
CoproductSpace coproduct(const FiniteSpace& x, const FiniteSpace& y);

/// Coproduct of a family; summand k occupies a contiguous block starting at offsets[k].
struct SumSpace {
  FiniteSpace space;
  std::vector<std::size_t> offsets;
};
SumSpace sum(const std::vector<FiniteSpace>& family);

struct PushoutSpace {
  FiniteSpace space;
  PointMap left;   // X → P
  PointMap right;  // Y → P
};

/// Pushout of X ← A → Y: the set quotient of X ⊔ Y with the generated preorder.
PushoutSpace pushout(const FiniteSpace& a, const FiniteSpace& x, const FiniteSpace& y,
                     const PointMap& f, const PointMap& g);

struct PullbackSpace {
  FiniteSpace space;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// Pullback of X → Z ← Y as a subspace of X × Y.
PullbackSpace pullback(const FiniteSpace& x, const FiniteSpace& y, const PointMap& f, const PointMap& g);

struct ExponentialSpace {
  FiniteSpace space;
  std::vector<PointMap> maps;  // the point of index k is maps[k]
  std::size_t index_of(const PointMap& m) const;
};

/// X^A: continuous maps A → X ordered pointwise.
ExponentialSpace exponential(const FiniteSpace& a, const FiniteSpace& x, const Limits& limits = default_limits());

// Sober spaces.

/// Nonempty closed sets that are not the union of two proper closed subsets,
/// found by exhaustive decomposition search.
std::vector<Mask> irreducible_closed_sets(const FiniteSpace& x);

/// Every irreducible closed set is the closure of exactly one point.
bool is_sober(const FiniteSpace& x);

/// Finite Hausdorff: distinct points have disjoint neighbourhoods.
bool is_hausdorff(const FiniteSpace& x);

struct SoberQuotient {
  FiniteSpace space;
  ContinuousMap quotient;
};

/// Kolmogorov quotient, checked sober after construction.
SoberQuotient soberify(const FiniteSpace& x);

struct SoberGlueVerdict {
  bool a_sober = false;
  bool b_hausdorff = false;
  bool x_sober = false;
  /// a_sober ∧ b_hausdorff ⇒ x_sober.
  bool implication_holds = false;
};

/// X = A ⊔ B, A closed, every point of B closed; evaluates both sides of
/// "A sober and B Hausdorff implies X sober". Throws HypothesisError.
SoberGlueVerdict sober_glue_check(const FiniteSpace& x, Mask a, Mask b);

}  // namespace finloc
