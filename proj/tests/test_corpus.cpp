#include <doctest.h>

#include "finloc/corpus.hpp"
#include "finloc/pstop.hpp"

using namespace finloc;

// Counts of unlabelled objects; standard enumerations used as fixed oracles.
TEST_CASE("poset counts") {
  const std::size_t expected[] = {1, 2, 5, 16, 63};
  for (std::size_t n = 1; n <= 5; ++n) CHECK(corpus::posets(n).size() == expected[n - 1]);
}

TEST_CASE("lattice and distributive lattice counts") {
  const std::size_t lattices[] = {1, 1, 1, 2, 5, 15};
  const std::size_t distributive[] = {1, 1, 1, 2, 3, 5};
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto ls = corpus::lattices(n);
    CHECK(ls.size() == lattices[n - 1]);
    std::size_t d = 0;
    for (const auto& l : ls) d += corpus::is_distributive_brute(l);
    CHECK(d == distributive[n - 1]);
  }
  CHECK(corpus::frames(5).size() == 8);
}

TEST_CASE("topology counts") {
  const std::size_t unlabelled[] = {1, 1, 3, 9, 33};
  const std::size_t labelled[] = {1, 1, 4, 29, 355};
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(corpus::spaces(n, true).size() == unlabelled[n]);
    CHECK(corpus::spaces(n, false).size() == labelled[n]);
  }
}

TEST_CASE("pseudotopology counts") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(all_pseudotopologies(n, false).size() == (std::size_t{1} << (n * (n - 1))));
  CHECK(all_pseudotopologies(2, true).size() == 3);
}

TEST_CASE("random draws are reproducible") {
  std::mt19937_64 a(7), b(7);
  for (int k = 0; k < 20; ++k) {
    const Arrow f = corpus::random_arrow(3, a);
    const Arrow g = corpus::random_arrow(3, b);
    CHECK(f.image() == g.image());
    CHECK(f.source() == g.source());
  }
}

TEST_CASE("regression set has 20 cases") {
  const auto cases = corpus::factorization_regression();
  CHECK(cases.size() == 20);
}
