#include "finloc/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "finloc/iso.hpp"

namespace finloc {

Mask canonical_relation_code(std::span<const Mask> rows) {
  const std::size_t n = rows.size();
  if (n > 8) throw SizeError("canonical_relation_code: at most 8 points");
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Mask best = ~Mask{0};
  do {
    Mask code = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (contains(rows[p[i]], p[j])) code |= bit(i * n + j);
    best = std::min(best, code);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

namespace corpus {
namespace {

// Posets as up-rows: rows[i] bit j ⇔ i ≤ j.
using Rows = std::vector<Mask>;

bool transitive(const Rows& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool ok = true;
    for_each_bit(rows[i], [&](std::size_t j) { ok = ok && is_subset(rows[j], rows[i]); });
    if (!ok) return false;
  }
  return true;
}

std::vector<Rows> poset_rows(std::size_t n) {
  std::vector<Rows> level{Rows{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rows> next;
    std::set<Mask> seen;
    for (const Rows& r : level) {
      // The new point k is placed above an arbitrary downset D.
      for (Mask d = 0; d <= full_mask(k); ++d) {
        bool closed = true;
        for_each_bit(d, [&](std::size_t i) {
          for (std::size_t j = 0; j < k; ++j)
            if (contains(r[j], i) && !contains(d, j)) closed = false;
        });
        if (!closed) continue;
        Rows ext = r;
        for_each_bit(d, [&](std::size_t i) { ext[i] |= bit(k); });
        ext.push_back(bit(k));
        if (seen.insert(canonical_relation_code(ext)).second) next.push_back(std::move(ext));
      }
    }
    level = std::move(next);
  }
  return level;
}

FinitePoset poset_of(const Rows& rows) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for_each_bit(rows[i], [&](std::size_t j) {
      if (i != j) pairs.emplace_back(i, j);
    });
  return FinitePoset::from_pairs(numbered_labels(rows.size()), pairs);
}

// Least upper bound by search, or n when none exists.
std::size_t brute_join(const FinitePoset& p, std::size_t a, std::size_t b) {
  const std::size_t n = p.size();
  for (std::size_t u = 0; u < n; ++u) {
    if (!p.leq(a, u) || !p.leq(b, u)) continue;
    bool least = true;
    for (std::size_t v = 0; v < n && least; ++v)
      if (p.leq(a, v) && p.leq(b, v) && !p.leq(u, v)) least = false;
    if (least) return u;
  }
  return n;
}

std::size_t brute_meet(const FinitePoset& p, std::size_t a, std::size_t b) {
  const std::size_t n = p.size();
  for (std::size_t l = 0; l < n; ++l) {
    if (!p.leq(l, a) || !p.leq(l, b)) continue;
    bool greatest = true;
    for (std::size_t v = 0; v < n && greatest; ++v)
      if (p.leq(v, a) && p.leq(v, b) && !p.leq(v, l)) greatest = false;
    if (greatest) return l;
  }
  return n;
}

Arrow arrow(const FiniteSpace& s, const FiniteSpace& t, PointMap m) { return Arrow(s, t, std::move(m)); }

}  // namespace

std::vector<std::string> numbered_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::vector<FinitePoset> posets(std::size_t n) {
  if (n > 8) throw SizeError("posets: at most 8 points");
  std::vector<FinitePoset> out;
  for (const Rows& r : poset_rows(n)) out.push_back(poset_of(r));
  return out;
}

std::vector<FrameRef> frames(std::size_t max_size) {
  if (max_size == 0) return {};
  if (max_size > 9) throw SizeError("frames: at most 9 elements");
  std::vector<FrameRef> out;
  // A distributive lattice with s elements has at most s - 1 join-irreducibles.
  for (std::size_t m = 0; m + 1 <= max_size; ++m) {
    for (const FinitePoset& p : posets(m)) {
      DownsetFamily d = downsets(p);
      if (d.downsets.size() > max_size) continue;
      out.push_back(frame_from_poset(downset_order(d)));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const FrameRef& a, const FrameRef& b) { return a->size() < b->size(); });
  return out;
}

bool is_lattice_brute(const FinitePoset& p) {
  const std::size_t n = p.size();
  if (n == 0) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (brute_join(p, a, b) == n || brute_meet(p, a, b) == n) return false;
  return true;
}

bool is_distributive_brute(const FinitePoset& p) {
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t lhs = brute_meet(p, a, brute_join(p, b, c));
        const std::size_t rhs = brute_join(p, brute_meet(p, a, b), brute_meet(p, a, c));
        if (lhs != rhs) return false;
      }
  return true;
}

std::vector<FinitePoset> lattices(std::size_t n) {
  std::vector<FinitePoset> out;
  for (FinitePoset& p : posets(n))
    if (is_lattice_brute(p)) out.push_back(std::move(p));
  return out;
}

std::vector<FiniteSpace> spaces(std::size_t n, bool dedup) {
  if (n > 5) throw SizeError("spaces: at most 5 points");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::vector<FiniteSpace> out;
  std::set<Mask> seen;
  const std::size_t count = std::size_t{1} << slots.size();
  for (std::size_t code = 0; code < count; ++code) {
    Rows rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = bit(i);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((code >> s) & 1U) rows[slots[s].first] |= bit(slots[s].second);
    if (!transitive(rows)) continue;
    if (dedup && !seen.insert(canonical_relation_code(rows)).second) continue;
    out.push_back(FiniteSpace::from_preorder(numbered_labels(n), rows));
  }
  return out;
}

std::vector<FiniteSpace> spaces_up_to(std::size_t max_points, bool dedup) {
  std::vector<FiniteSpace> out;
  for (std::size_t n = 0; n <= max_points; ++n) {
    auto s = spaces(n, dedup);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

FiniteSpace empty_space() { return FiniteSpace::discrete({}); }

Arrow empty_to_point() { return arrow(empty_space(), FiniteSpace::point(), {}); }

Arrow fold_map() { return arrow(FiniteSpace::discrete({"0", "1"}), FiniteSpace::point(), {0, 0}); }

std::vector<Arrow> arrows(const std::vector<FiniteSpace>& objects, bool dedup) {
  std::vector<Arrow> out;
  for (const FiniteSpace& s : objects)
    for (const FiniteSpace& t : objects)
      for (PointMap& m : all_continuous_maps(s, t)) {
        Arrow a(s, t, std::move(m));
        if (dedup) {
          bool fresh = true;
          for (const Arrow& b : out)
            if (b.source().size() == s.size() && b.target().size() == t.size() && find_arrow_iso(a, b)) {
              fresh = false;
              break;
            }
          if (!fresh) continue;
        }
        out.push_back(std::move(a));
      }
  return out;
}

FiniteSpace random_space(std::size_t n, std::mt19937_64& rng) {
  const std::vector<FiniteSpace> all = spaces(n, false);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

Arrow random_arrow(std::size_t max_points, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(1, max_points);
  const std::size_t ns = size(rng);
  const std::size_t nt = size(rng);
  const FiniteSpace s = random_space(ns, rng);
  const FiniteSpace t = random_space(nt, rng);
  const std::vector<PointMap> maps = all_continuous_maps(s, t);
  std::uniform_int_distribution<std::size_t> pick(0, maps.size() - 1);
  return Arrow(s, t, maps[pick(rng)]);
}

std::vector<FactorizationCase> factorization_regression() {
  const FiniteSpace e = empty_space();
  const FiniteSpace p = FiniteSpace::point();
  const FiniteSpace d2 = FiniteSpace::discrete({"0", "1"});
  const FiniteSpace d3 = FiniteSpace::discrete({"0", "1", "2"});
  const FiniteSpace i2 = FiniteSpace::indiscrete({"0", "1"});
  const FiniteSpace s = FiniteSpace::sierpinski();  // x ≤ y

  const std::vector<Arrow> surj{empty_to_point()};
  const std::vector<Arrow> fold{fold_map()};
  const std::vector<Arrow> both{empty_to_point(), fold_map()};
  const std::vector<Arrow> up{arrow(p, s, {0})};
  const std::vector<Arrow> equiv{arrow(d2, i2, {0, 1})};
  const std::vector<Arrow> order{arrow(d2, s, {0, 1})};

  std::vector<FactorizationCase> out{
      {"empty-to-point/surj", arrow(e, p, {}), surj},
      {"empty-to-discrete2/surj", arrow(e, d2, {}), surj},
      {"identity-point/surj", Arrow::identity(p), surj},
      {"discrete2-to-point/surj", arrow(d2, p, {0, 0}), surj},
      {"empty-to-sierpinski/surj", arrow(e, s, {}), surj},
      {"fold/fold", fold_map(), fold},
      {"discrete3-to-discrete2/fold", arrow(d3, d2, {0, 0, 1}), fold},
      {"indiscrete2-to-point/fold", arrow(i2, p, {0, 0}), fold},
      {"sierpinski-to-point/fold", arrow(s, p, {0, 0}), fold},
      {"discrete2-to-sierpinski/fold", arrow(d2, s, {0, 1}), fold},
      {"empty-to-discrete2/both", arrow(e, d2, {}), both},
      {"discrete3-to-point/both", arrow(d3, p, {0, 0, 0}), both},
      {"point-to-sierpinski/up", arrow(p, s, {0}), up},
      {"point-to-indiscrete2/up", arrow(p, i2, {0}), up},
      {"empty-to-sierpinski/up", arrow(e, s, {}), up},
      {"discrete2-to-sierpinski/up", arrow(d2, s, {0, 1}), up},
      {"discrete2-to-indiscrete2/equiv", arrow(d2, i2, {0, 1}), equiv},
      {"discrete2-to-point/equiv", arrow(d2, p, {0, 0}), equiv},
      {"sierpinski-to-indiscrete2/equiv", arrow(s, i2, {0, 1}), equiv},
      {"discrete2-to-indiscrete2/order", arrow(d2, i2, {0, 1}), order},
  };
  return out;
}

}  // namespace corpus
}  // namespace finloc
