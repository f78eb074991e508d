#pragma once

// Test corpora shared by the suites, the unit tests and the acceptance run.
// Every generator is deterministic; random draws take an explicit engine.

#include <random>
#include <string>
#include <vector>

#include "finloc/frame.hpp"
#include "finloc/lifting.hpp"
#include "finloc/poset.hpp"
#include "finloc/space.hpp"

namespace finloc::corpus {

/// "0", "1", ..., "n-1".
std::vector<std::string> numbered_labels(std::size_t n);

/// One poset per isomorphism class on exactly n points (n ≤ 8), labelled so
/// that label order is a linear extension.
std::vector<FinitePoset> posets(std::size_t n);

/// One finite frame per isomorphism class with at most max_size elements,
/// ordered by size. Built as downset lattices of posets.
std::vector<FrameRef> frames(std::size_t max_size);

/// Brute-force oracles that do not use the frame tables.
bool is_lattice_brute(const FinitePoset& p);
bool is_distributive_brute(const FinitePoset& p);

/// Every lattice on exactly n points up to isomorphism (bounded posets passing is_lattice_brute).
std::vector<FinitePoset> lattices(std::size_t n);

/// Every topology on exactly n points (n ≤ 5); with dedup, one per homeomorphism class.
std::vector<FiniteSpace> spaces(std::size_t n, bool dedup = true);

/// spaces(k) for k = 0..max_points, concatenated.
std::vector<FiniteSpace> spaces_up_to(std::size_t max_points, bool dedup = true);

FiniteSpace empty_space();

/// ∅ → ∗.
Arrow empty_to_point();
/// ∗ ⊔ ∗ → ∗.
Arrow fold_map();

/// Every continuous map between members of `objects` (both orders, including
/// endomaps); with dedup, one per arrow-category isomorphism class.
std::vector<Arrow> arrows(const std::vector<FiniteSpace>& objects, bool dedup);

/// Uniform over labelled topologies on n points.
FiniteSpace random_space(std::size_t n, std::mt19937_64& rng);

/// Uniform continuous map between two random spaces with 1..max_points points.
Arrow random_arrow(std::size_t max_points, std::mt19937_64& rng);

struct FactorizationCase {
  std::string name;
  Arrow map;
  std::vector<Arrow> generators;
  std::size_t steps = 3;
};

/// The fixed 20-case regression set for the bounded small object argument.
std::vector<FactorizationCase> factorization_regression();

}  // namespace finloc::corpus
