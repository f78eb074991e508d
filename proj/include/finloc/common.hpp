#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace finloc {

/// Subset of a carrier with at most 64 points, bit i = point i.
using Mask = std::uint64_t;

/// Positional index of a frame element.
using Elem = int;

inline constexpr std::size_t kMaxMaskCarrier = 64;

inline constexpr Mask bit(std::size_t i) noexcept { return Mask{1} << i; }

inline constexpr Mask full_mask(std::size_t n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline constexpr bool contains(Mask m, std::size_t i) noexcept { return (m >> i) & 1U; }

inline constexpr bool is_subset(Mask a, Mask b) noexcept { return (a & ~b) == 0; }

inline int popcount(Mask m) noexcept { return std::popcount(m); }

/// Calls fn(i) for every set bit, lowest first.
template <class Fn>
inline void for_each_bit(Mask m, Fn&& fn) {
  while (m != 0) {
    const int i = std::countr_zero(m);
    fn(static_cast<std::size_t>(i));
    m &= m - 1;
  }
}

inline std::vector<std::size_t> bits_of(Mask m) {
  std::vector<std::size_t> out;
  for_each_bit(m, [&](std::size_t i) { out.push_back(i); });
  return out;
}

// Errors. Every failure the library reports is an Error carrying a stable kind
// string; the CLI maps kinds to exit codes and JSON diagnostics.

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define FINLOC_DEFINE_ERROR(Name)                                              \
  class Name : public Error {                                                  \
   public:                                                                     \
    explicit Name(const std::string& message) : Error(#Name, message) {}       \
  }

FINLOC_DEFINE_ERROR(CycleError);
FINLOC_DEFINE_ERROR(DuplicateLabelError);
FINLOC_DEFINE_ERROR(UnknownLabelError);
FINLOC_DEFINE_ERROR(SizeError);
FINLOC_DEFINE_ERROR(NotDownsetError);
FINLOC_DEFINE_ERROR(InvalidSpaceError);
FINLOC_DEFINE_ERROR(NotLatticeError);
FINLOC_DEFINE_ERROR(NotHomError);
FINLOC_DEFINE_ERROR(NotMonotoneError);
FINLOC_DEFINE_ERROR(NotContinuousError);
FINLOC_DEFINE_ERROR(NotPrenucleusError);
FINLOC_DEFINE_ERROR(NotFrameError);
FINLOC_DEFINE_ERROR(NotIsoError);
FINLOC_DEFINE_ERROR(HypothesisError);
FINLOC_DEFINE_ERROR(CarrierMismatchError);
FINLOC_DEFINE_ERROR(EmptySubspaceError);
FINLOC_DEFINE_ERROR(NonCommutingError);
FINLOC_DEFINE_ERROR(InvalidPsSpaceError);
FINLOC_DEFINE_ERROR(InputError);
/// A law the library certifies internally failed; always a bug.
FINLOC_DEFINE_ERROR(InvariantViolation);

#undef FINLOC_DEFINE_ERROR

/// Distributivity failure with the offending triple a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c).
class NotDistributiveError : public Error {
 public:
  NotDistributiveError(const std::string& message, std::string a, std::string b, std::string c)
      : Error("NotDistributiveError", message), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}
  const std::string& a() const noexcept { return a_; }
  const std::string& b() const noexcept { return b_; }
  const std::string& c() const noexcept { return c_; }

 private:
  std::string a_, b_, c_;
};

}  // namespace finloc
