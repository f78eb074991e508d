#include <cstdlib>
#include <string>

#include "finloc/kernels.hpp"

namespace finloc::kernels {
namespace {

Backend detect() noexcept {
  if (const char* env = std::getenv("FINLOC_KERNELS"); env != nullptr && std::string(env) == "scalar") {
    return Backend::scalar;
  }
  return avx2_available() ? Backend::avx2 : Backend::scalar;
}

}  // namespace

std::string_view backend_name(Backend b) noexcept {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

bool avx2_available() noexcept {
#if defined(FINLOC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend active_backend() noexcept {
  static const Backend backend = detect();
  return backend;
}

#if defined(FINLOC_HAVE_AVX2)
#define FINLOC_DISPATCH(fn, ...)                                                \
  do {                                                                         \
    if (active_backend() == Backend::avx2) {                                   \
      avx2::fn(__VA_ARGS__);                                                   \
    } else {                                                                   \
      scalar::fn(__VA_ARGS__);                                                 \
    }                                                                          \
  } while (false)
#else
#define FINLOC_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

void or_gather(std::span<const Mask> sets, std::span<const Mask> table, std::span<Mask> out) {
  FINLOC_DISPATCH(or_gather, sets, table, out);
}

void and_gather(std::span<const Mask> sets, std::span<const Mask> table, Mask universe,
                std::span<Mask> out) {
  FINLOC_DISPATCH(and_gather, sets, table, universe, out);
}

void horn_check(std::span<const Mask> sets, std::span<const HornRule> rules,
                std::span<std::uint8_t> out) {
  FINLOC_DISPATCH(horn_check, sets, rules, out);
}

void horn_closure(std::span<Mask> seeds, std::span<const HornRule> rules) {
  FINLOC_DISPATCH(horn_closure, seeds, rules);
}

void meets_all(std::span<const Mask> sets, std::span<const Mask> family,
               std::span<std::uint8_t> out) {
  FINLOC_DISPATCH(meets_all, sets, family, out);
}

#undef FINLOC_DISPATCH

std::vector<Mask> all_subsets(std::size_t n) {
  if (n > 26) throw SizeError("all_subsets: carrier of " + std::to_string(n) + " points exceeds 26");
  std::vector<Mask> out(std::size_t{1} << n);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Mask>(i);
  return out;
}

}  // namespace finloc::kernels
