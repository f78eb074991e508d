#pragma once

// Isomorphism search for small binary relations.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "finloc/common.hpp"

namespace finloc {

/// Finds a bijection p on [0, n) with a(i, j) ⇔ b(p[i], p[j]) and
/// colour_b[p[i]] = colour_a[i], or nullopt. Candidates are pruned by
/// (colour, out-degree, in-degree, loop) signatures and by consistency with
/// every previously assigned point.
template <class RelA, class RelB>
std::optional<std::vector<std::size_t>> find_coloured_relation_iso(std::size_t n, const RelA& a, const RelB& b,
                                                                   const std::vector<int>& colour_a,
                                                                   const std::vector<int>& colour_b) {
  using Sig = std::tuple<int, std::size_t, std::size_t, bool>;
  auto signatures = [n](const auto& rel, const std::vector<int>& colour) {
    std::vector<Sig> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t out = 0, in = 0;
      for (std::size_t j = 0; j < n; ++j) {
        out += rel(i, j) ? 1 : 0;
        in += rel(j, i) ? 1 : 0;
      }
      sig[i] = {colour.empty() ? 0 : colour[i], out, in, rel(i, i)};
    }
    return sig;
  };
  const std::vector<Sig> sa = signatures(a, colour_a);
  const std::vector<Sig> sb = signatures(b, colour_b);
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }
  std::vector<std::vector<std::size_t>> cand(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sa[i] == sb[j]) cand[i].push_back(j);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return cand[x].size() < cand[y].size(); });

  std::vector<std::size_t> p(n, n);
  std::vector<bool> used(n, false);
  auto consistent = [&](std::size_t depth, std::size_t i, std::size_t j) {
    for (std::size_t d = 0; d < depth; ++d) {
      const std::size_t k = order[d];
      if (a(i, k) != b(j, p[k]) || a(k, i) != b(p[k], j)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t i = order[depth];
    for (std::size_t j : cand[i]) {
      if (used[j] || !consistent(depth, i, j)) continue;
      used[j] = true;
      p[i] = j;
      if (self(self, depth + 1)) return true;
      used[j] = false;
    }
    p[i] = n;
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return p;
}

/// Uncoloured form of find_coloured_relation_iso.
template <class RelA, class RelB>
std::optional<std::vector<std::size_t>> find_relation_iso(std::size_t n, const RelA& a, const RelB& b) {
  return find_coloured_relation_iso(n, a, b, {}, {});
}

/// Relation on at most 8 points as rows of bits (rows[i] bit j = i R j).
/// Returns the lexicographically least row encoding over all relabellings.
Mask canonical_relation_code(std::span<const Mask> rows);

}  // namespace finloc
