#pragma once

// Lifting problems, pushout products, pullback powers and a bounded small
// object argument in the category of finite spaces (finite preorders).

#include <optional>
#include <string>
#include <vector>

#include "finloc/limits.hpp"
#include "finloc/space.hpp"

namespace finloc {

using Arrow = ContinuousMap;

/// Commuting square  A --u--> X
///                   i|       |f
///                   B --v--> Y
struct LiftingSquare {
  /// Throws CarrierMismatchError when corners disagree, NonCommutingError when f∘u ≠ v∘i.
  LiftingSquare(Arrow left, Arrow right, Arrow top, Arrow bottom);

  Arrow left;    // i : A → B
  Arrow right;   // f : X → Y
  Arrow top;     // u : A → X
  Arrow bottom;  // v : B → Y
};

/// Every h : B → X with h∘i = u and f∘h = v.
std::vector<PointMap> enumerate_lifts(const LiftingSquare& s);
bool has_lift(const LiftingSquare& s);

/// Visits every commuting square from i to f as (u, v). The visitor returns false to stop.
void enumerate_squares(const Arrow& i, const Arrow& f,
                       const std::function<bool(const PointMap& u, const PointMap& v)>& visit);

struct LiftVerdict {
  bool holds = true;
  std::optional<LiftingSquare> witness;  // first square without a diagonal
  std::size_t squares = 0;
};

/// i ⧄ f: every commuting square from i to f has a diagonal.
LiftVerdict lifts_against(const Arrow& i, const Arrow& f);

/// f has the right lifting property against every member of s.
LiftVerdict rlp(const Arrow& f, const std::vector<Arrow>& s);
/// f has the left lifting property against every member of s.
LiftVerdict llp(const Arrow& f, const std::vector<Arrow>& s);

/// Pushout of s : A → B along u : A → C, as the map C → C ⊔_A B.
Arrow pushout_of(const Arrow& s, const Arrow& u);

/// f ×̂ g : X×B ⊔_{X×A} Y×A → Y×B for f : X → Y and g : A → B.
struct PushoutProduct {
  PushoutSpace corner;
  Arrow map;
};
PushoutProduct pushout_product(const Arrow& f, const Arrow& g);

/// g ▷ i : X^B → X^A ×_{Y^A} Y^B, h ↦ (h∘i, g∘h), for g : X → Y and i : A → B.
struct PullbackPower {
  ExponentialSpace xb, xa, ya, yb;
  PullbackSpace corner;
  Arrow map;
};
PullbackPower pullback_power(const Arrow& g, const Arrow& i, const Limits& limits = default_limits());

/// Arrow-category isomorphism (α on sources, β on targets with g∘α = β∘f).
struct ArrowIso {
  PointMap source;
  PointMap target;
};
std::optional<ArrowIso> find_arrow_iso(const Arrow& f, const Arrow& g);

/// Every arrow automorphism of f.
std::vector<ArrowIso> arrow_automorphisms(const Arrow& f);

/// f is a retract of g: arrow maps f → g → f composing to the identity.
struct RetractWitness {
  PointMap in_source, in_target;    // f → g
  PointMap out_source, out_target;  // g → f
};
std::optional<RetractWitness> retract_check(const Arrow& f, const Arrow& g);

/// An unsolved lifting problem of generator `generator` against the current right factor.
struct CellProblem {
  std::size_t generator = 0;
  PointMap top;     // A_k → Z
  PointMap bottom;  // B_k → Y
};

struct FactorizationStage {
  FiniteSpace before;
  std::vector<CellProblem> problems;
  FiniteSpace after;
  PointMap inclusion;  // Z_n → Z_{n+1}
};

enum class FactorizationVerdict { complete, partial };

struct FactorizationTrace {
  Arrow original;
  std::vector<FactorizationStage> stages;
  Arrow left;   // i : X → Z, a relative cell complex
  Arrow right;  // p : Z → Y
  FactorizationVerdict verdict = FactorizationVerdict::partial;
};

/// Every lifting problem of members of s against p without a diagonal, one per
/// orbit under the arrow automorphisms of the generator.
std::vector<CellProblem> unsolved_problems(const Arrow& p, const std::vector<Arrow>& s);

/// One cell-attachment step: the pushout of Z ← ⊔A_k → ⊔B_k along the problems,
/// with the induced map to Y.
struct CellAttachment {
  FiniteSpace space;
  PointMap inclusion;  // Z → Z'
  Arrow right;         // Z' → Y
};
CellAttachment cell_attach(const Arrow& p, const std::vector<Arrow>& s, const std::vector<CellProblem>& problems);

/// Runs at most `steps` attachment steps. COMPLETE once the right factor has
/// the rlp against s; PARTIAL when the bound is reached first.
FactorizationTrace bounded_factorize(const Arrow& f, const std::vector<Arrow>& s, std::size_t steps);

/// Recomputes every stage from its recorded problems and checks p∘i = f,
/// i = composite of stage inclusions, and the recorded spaces.
bool replay_trace(const FactorizationTrace& t, const std::vector<Arrow>& s);

std::string verdict_name(FactorizationVerdict v);

}  // namespace finloc
