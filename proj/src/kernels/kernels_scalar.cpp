#include "finloc/kernels.hpp"

namespace finloc::kernels::scalar {

void or_gather(std::span<const Mask> sets, std::span<const Mask> table, std::span<Mask> out) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    Mask acc = 0;
    for_each_bit(sets[i], [&](std::size_t e) { acc |= table[e]; });
    out[i] = acc;
  }
}

void and_gather(std::span<const Mask> sets, std::span<const Mask> table, Mask universe,
                std::span<Mask> out) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    Mask acc = universe;
    for_each_bit(sets[i], [&](std::size_t e) { acc &= table[e]; });
    out[i] = acc;
  }
}

void horn_check(std::span<const Mask> sets, std::span<const HornRule> rules,
                std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const Mask s = sets[i];
    bool ok = true;
    for (const HornRule& r : rules) {
      if (is_subset(r.premise, s) && !is_subset(r.conclusion, s)) {
        ok = false;
        break;
      }
    }
    out[i] = ok ? 1 : 0;
  }
}

void horn_closure(std::span<Mask> seeds, std::span<const HornRule> rules) {
  for (Mask& s : seeds) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const HornRule& r : rules) {
        if (is_subset(r.premise, s) && !is_subset(r.conclusion, s)) {
          s |= r.conclusion;
          changed = true;
        }
      }
    }
  }
}

void meets_all(std::span<const Mask> sets, std::span<const Mask> family,
               std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool ok = true;
    for (Mask a : family) {
      if ((sets[i] & a) == 0) {
        ok = false;
        break;
      }
    }
    out[i] = ok ? 1 : 0;
  }
}

}  // namespace finloc::kernels::scalar
