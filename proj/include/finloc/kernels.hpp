#pragma once

// Batched bitset kernels for the exhaustive enumeration loops.
//
// Every kernel processes a span of candidate subsets (64-bit masks over a
// carrier of at most 64 points) independently, so the inner loops are
// data-parallel across candidates. A scalar reference backend is always built;
// an AVX2 backend processes four candidates per instruction and is selected at
// runtime when the CPU supports it. FINLOC_KERNELS=scalar in the environment
// forces the reference path.

#include <cstdint>
#include <span>
#include <string_view>

#include "finloc/common.hpp"

namespace finloc::kernels {

/// Horn clause over carrier points: premise ⊆ S implies conclusion ⊆ S.
struct HornRule {
  Mask premise = 0;
  Mask conclusion = 0;
};

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b) noexcept;

/// True when the AVX2 backend is compiled in and the CPU supports it.
bool avx2_available() noexcept;

/// Backend used by the unqualified entry points below.
Backend active_backend() noexcept;

/// out[i] = OR of table[e] over e ∈ sets[i].
void or_gather(std::span<const Mask> sets, std::span<const Mask> table, std::span<Mask> out);

/// out[i] = AND of table[e] over e ∈ sets[i]; the empty set maps to universe.
void and_gather(std::span<const Mask> sets, std::span<const Mask> table, Mask universe,
                std::span<Mask> out);

/// out[i] = 1 iff sets[i] satisfies every rule.
void horn_check(std::span<const Mask> sets, std::span<const HornRule> rules,
                std::span<std::uint8_t> out);

/// Replaces every seed by the least superset satisfying every rule.
void horn_closure(std::span<Mask> seeds, std::span<const HornRule> rules);

/// out[i] = 1 iff sets[i] intersects every member of family.
void meets_all(std::span<const Mask> sets, std::span<const Mask> family,
               std::span<std::uint8_t> out);

namespace scalar {
void or_gather(std::span<const Mask> sets, std::span<const Mask> table, std::span<Mask> out);
void and_gather(std::span<const Mask> sets, std::span<const Mask> table, Mask universe,
                std::span<Mask> out);
void horn_check(std::span<const Mask> sets, std::span<const HornRule> rules,
                std::span<std::uint8_t> out);
void horn_closure(std::span<Mask> seeds, std::span<const HornRule> rules);
void meets_all(std::span<const Mask> sets, std::span<const Mask> family,
               std::span<std::uint8_t> out);
}  // namespace scalar

#if defined(FINLOC_HAVE_AVX2)
namespace avx2 {
void or_gather(std::span<const Mask> sets, std::span<const Mask> table, std::span<Mask> out);
void and_gather(std::span<const Mask> sets, std::span<const Mask> table, Mask universe,
                std::span<Mask> out);
void horn_check(std::span<const Mask> sets, std::span<const HornRule> rules,
                std::span<std::uint8_t> out);
void horn_closure(std::span<Mask> seeds, std::span<const HornRule> rules);
void meets_all(std::span<const Mask> sets, std::span<const Mask> family,
               std::span<std::uint8_t> out);
}  // namespace avx2
#endif

/// Every subset of an n-point carrier, in increasing mask order. n ≤ 26.
std::vector<Mask> all_subsets(std::size_t n);

}  // namespace finloc::kernels
