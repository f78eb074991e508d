#include <doctest.h>

#include <random>
#include <vector>

#include "finloc/kernels.hpp"

using namespace finloc;
namespace k = finloc::kernels;

namespace {

std::vector<Mask> random_masks(std::size_t n, std::size_t width, std::mt19937_64& rng) {
  std::vector<Mask> out(n);
  for (auto& m : out) m = rng() & full_mask(width);
  return out;
}

std::vector<k::HornRule> random_rules(std::size_t n, std::size_t width, std::mt19937_64& rng) {
  std::vector<k::HornRule> out(n);
  for (auto& r : out) {
    r.premise = rng() & rng() & full_mask(width);
    r.conclusion = Mask{1} << (rng() % width);
  }
  return out;
}

}  // namespace

TEST_CASE("backend selection") {
  CHECK(k::backend_name(k::Backend::scalar) == "scalar");
  if (k::avx2_available()) {
    CHECK(k::backend_name(k::Backend::avx2) == "avx2");
  }
  CHECK(k::all_subsets(3) == std::vector<Mask>{0, 1, 2, 3, 4, 5, 6, 7});
}

#if defined(FINLOC_HAVE_AVX2)
TEST_CASE("avx2 kernels agree with the scalar reference") {
  if (!k::avx2_available()) return;
  std::mt19937_64 rng(7);
  // Lengths that are and are not multiples of the vector width.
  for (std::size_t len : {0u, 1u, 3u, 4u, 5u, 17u, 64u, 1023u}) {
    for (std::size_t width : {1u, 6u, 13u, 40u, 64u}) {
      const auto sets = random_masks(len, width, rng);
      const auto table = random_masks(width, 64, rng);
      std::vector<Mask> a(len), b(len);
      k::scalar::or_gather(sets, table, a);
      k::avx2::or_gather(sets, table, b);
      CHECK(a == b);

      const Mask uni = full_mask(width);
      k::scalar::and_gather(sets, table, uni, a);
      k::avx2::and_gather(sets, table, uni, b);
      CHECK(a == b);

      const auto rules = random_rules(1 + rng() % 12, width, rng);
      std::vector<std::uint8_t> x(len), y(len);
      k::scalar::horn_check(sets, rules, x);
      k::avx2::horn_check(sets, rules, y);
      CHECK(x == y);

      std::vector<Mask> s1 = sets, s2 = sets;
      k::scalar::horn_closure(s1, rules);
      k::avx2::horn_closure(s2, rules);
      CHECK(s1 == s2);

      const auto family = random_masks(1 + rng() % 6, width, rng);
      k::scalar::meets_all(sets, family, x);
      k::avx2::meets_all(sets, family, y);
      CHECK(x == y);
    }
  }
}
#endif

TEST_CASE("dispatching entry points match the reference") {
  std::mt19937_64 rng(11);
  const auto sets = random_masks(101, 10, rng);
  const auto table = random_masks(10, 64, rng);
  std::vector<Mask> a(sets.size()), b(sets.size());
  k::or_gather(sets, table, a);
  k::scalar::or_gather(sets, table, b);
  CHECK(a == b);
  // Closure results satisfy every rule and are the least such supersets.
  const auto rules = random_rules(8, 10, rng);
  std::vector<Mask> c = sets;
  k::horn_closure(c, rules);
  std::vector<std::uint8_t> ok(c.size());
  k::horn_check(c, rules, ok);
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(ok[i] == 1);
    CHECK(is_subset(sets[i], c[i]));
  }
}
