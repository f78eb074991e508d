#include <immintrin.h>

#include "finloc/kernels.hpp"

namespace finloc::kernels::avx2 {
namespace {

constexpr std::size_t kLanes = 4;

inline __m256i load4(const Mask* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store4(Mask* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

inline __m256i splat(Mask m) { return _mm256_set1_epi64x(static_cast<long long>(m)); }

// All-ones in every lane where (v & m) == m.
inline __m256i contains_all(__m256i v, __m256i m) {
  return _mm256_cmpeq_epi64(_mm256_and_si256(v, m), m);
}

inline void store_flags(std::uint8_t* out, __m256i lanes) {
  const int bits = _mm256_movemask_pd(_mm256_castsi256_pd(lanes));
  for (std::size_t k = 0; k < kLanes; ++k) out[k] = static_cast<std::uint8_t>((bits >> k) & 1);
}

}  // namespace

void or_gather(std::span<const Mask> sets, std::span<const Mask> table, std::span<Mask> out) {
  const std::size_t n = sets.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i s = load4(sets.data() + i);
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t e = 0; e < table.size(); ++e) {
      const __m256i has = contains_all(s, splat(bit(e)));
      acc = _mm256_or_si256(acc, _mm256_and_si256(has, splat(table[e])));
    }
    store4(out.data() + i, acc);
  }
  scalar::or_gather(sets.subspan(i), table, out.subspan(i));
}

void and_gather(std::span<const Mask> sets, std::span<const Mask> table, Mask universe,
                std::span<Mask> out) {
  const std::size_t n = sets.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i s = load4(sets.data() + i);
    __m256i acc = splat(universe);
    for (std::size_t e = 0; e < table.size(); ++e) {
      const __m256i has = contains_all(s, splat(bit(e)));
      // lanes without e contribute all-ones
      const __m256i term = _mm256_or_si256(splat(table[e]), _mm256_xor_si256(has, splat(~Mask{0})));
      acc = _mm256_and_si256(acc, term);
    }
    store4(out.data() + i, acc);
  }
  scalar::and_gather(sets.subspan(i), table, universe, out.subspan(i));
}

void horn_check(std::span<const Mask> sets, std::span<const HornRule> rules,
                std::span<std::uint8_t> out) {
  const std::size_t n = sets.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i s = load4(sets.data() + i);
    __m256i ok = splat(~Mask{0});
    for (const HornRule& r : rules) {
      const __m256i fires = contains_all(s, splat(r.premise));
      const __m256i holds = contains_all(s, splat(r.conclusion));
      ok = _mm256_andnot_si256(_mm256_andnot_si256(holds, fires), ok);
    }
    store_flags(out.data() + i, ok);
  }
  scalar::horn_check(sets.subspan(i), rules, out.subspan(i));
}

void horn_closure(std::span<Mask> seeds, std::span<const HornRule> rules) {
  const std::size_t n = seeds.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i s = load4(seeds.data() + i);
    for (;;) {
      __m256i changed = _mm256_setzero_si256();
      for (const HornRule& r : rules) {
        const __m256i fires = contains_all(s, splat(r.premise));
        const __m256i next = _mm256_or_si256(s, _mm256_and_si256(fires, splat(r.conclusion)));
        changed = _mm256_or_si256(changed, _mm256_xor_si256(next, s));
        s = next;
      }
      if (_mm256_testz_si256(changed, changed)) break;
    }
    store4(seeds.data() + i, s);
  }
  scalar::horn_closure(seeds.subspan(i), rules);
}

void meets_all(std::span<const Mask> sets, std::span<const Mask> family,
               std::span<std::uint8_t> out) {
  const std::size_t n = sets.size();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i s = load4(sets.data() + i);
    __m256i ok = splat(~Mask{0});
    for (Mask a : family) {
      const __m256i empty = _mm256_cmpeq_epi64(_mm256_and_si256(s, splat(a)), _mm256_setzero_si256());
      ok = _mm256_andnot_si256(empty, ok);
    }
    store_flags(out.data() + i, ok);
  }
  scalar::meets_all(sets.subspan(i), family, out.subspan(i));
}

}  // namespace finloc::kernels::avx2
