#include "finloc/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "finloc/iso.hpp"
#include "finloc/kernels.hpp"

namespace finloc {

FinitePoset FinitePoset::validate(std::vector<std::string> labels,
                                  const std::vector<std::pair<std::string, std::string>>& leq) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], i).second) throw DuplicateLabelError("duplicate element label '" + labels[i] + "'");
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(leq.size());
  for (const auto& [a, b] : leq) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw UnknownLabelError("relation mentions unknown element '" + a + "'");
    if (ib == index.end()) throw UnknownLabelError("relation mentions unknown element '" + b + "'");
    pairs.emplace_back(ia->second, ib->second);
  }
  return from_pairs(std::move(labels), pairs);
}

FinitePoset FinitePoset::from_pairs(std::vector<std::string> labels,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& leq) {
  FinitePoset p;
  const std::size_t n = labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!p.index_.emplace(labels[i], i).second) throw DuplicateLabelError("duplicate element label '" + labels[i] + "'");
  }
  p.labels_ = std::move(labels);
  p.up_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) p.up_[i].set(i);
  for (const auto& [a, b] : leq) {
    if (a >= n || b >= n) throw UnknownLabelError("relation index out of range");
    p.up_[a].set(b);
  }
  // Warshall closure on rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (p.up_[i].test(k)) p.up_[i] |= p.up_[k];

  p.down_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = p.up_[i].find_first(); j != Bitset::npos; j = p.up_[i].find_next(j)) p.down_[j].set(i);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p.up_[i].test(j) && p.up_[j].test(i)) {
        throw CycleError("antisymmetry violated: '" + p.labels_[i] + "' and '" + p.labels_[j] +
                         "' are mutually below each other");
      }
    }
  }
  p.linear_.resize(n);
  std::iota(p.linear_.begin(), p.linear_.end(), 0);
  std::stable_sort(p.linear_.begin(), p.linear_.end(),
                   [&](std::size_t a, std::size_t b) { return p.down_[a].count() < p.down_[b].count(); });
  if (n <= kMaxMaskCarrier) {
    p.down_masks_.resize(n);
    p.up_masks_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      Mask d = 0, u = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (p.down_[i].test(j)) d |= bit(j);
        if (p.up_[i].test(j)) u |= bit(j);
      }
      p.down_masks_[i] = d;
      p.up_masks_[i] = u;
    }
  }
  return p;
}

std::optional<std::size_t> FinitePoset::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FinitePoset::index_of(const std::string& label) const {
  if (auto i = find(label)) return *i;
  throw UnknownLabelError("unknown element '" + label + "'");
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      // strictly between: up(i) ∩ down(j) minus {i, j}
      Bitset between = up_[i] & down_[j];
      between.reset(i);
      between.reset(j);
      if (between.none()) out.emplace_back(i, j);
    }
  }
  return out;
}

Mask FinitePoset::down_mask(std::size_t i) const {
  if (down_masks_.empty() && !labels_.empty()) throw SizeError("poset has more than 64 elements");
  return down_masks_[i];
}

Mask FinitePoset::up_mask(std::size_t i) const {
  if (up_masks_.empty() && !labels_.empty()) throw SizeError("poset has more than 64 elements");
  return up_masks_[i];
}

bool operator==(const FinitePoset& a, const FinitePoset& b) {
  return a.labels_ == b.labels_ && a.up_ == b.up_;
}

MonotoneMap::MonotoneMap(FinitePoset source, FinitePoset target, std::vector<std::size_t> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (image_.size() != source_.size()) throw NotMonotoneError("assignment is not total on the source");
  for (std::size_t x : image_) {
    if (x >= target_.size()) throw NotMonotoneError("assignment leaves the target");
  }
  for (std::size_t x = 0; x < source_.size(); ++x) {
    for (std::size_t y = 0; y < source_.size(); ++y) {
      if (source_.leq(x, y) && !target_.leq(image_[x], image_[y])) {
        throw NotMonotoneError("order not preserved: '" + source_.label(x) + "' <= '" + source_.label(y) + "'");
      }
    }
  }
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (!(f.target() == g.source())) throw CarrierMismatchError("compose: f's target is not g's source");
  std::vector<std::size_t> image(f.source().size());
  for (std::size_t x = 0; x < image.size(); ++x) image[x] = g(f(x));
  return MonotoneMap(f.source(), g.target(), std::move(image));
}

bool is_downset(const FinitePoset& p, Mask u) {
  bool ok = true;
  for_each_bit(u, [&](std::size_t e) { ok = ok && is_subset(p.down_mask(e), u); });
  return ok;
}

Mask down_closure(const FinitePoset& p, Mask u) {
  Mask out = 0;
  for_each_bit(u, [&](std::size_t e) { out |= p.down_mask(e); });
  return out;
}

namespace {

bool by_size_then_value(Mask a, Mask b) {
  const int pa = popcount(a), pb = popcount(b);
  return pa != pb ? pa < pb : a < b;
}

}  // namespace

DownsetFamily downsets(const FinitePoset& p, const Limits& limits) {
  const std::size_t n = p.size();
  if (n > kMaxMaskCarrier) throw SizeError("downsets: poset has " + std::to_string(n) + " elements; at most 64 supported");
  const std::vector<std::size_t>& order = p.linear_extension();
  std::vector<Mask> strict_below(n);
  for (std::size_t i = 0; i < n; ++i) strict_below[i] = p.down_mask(i) & ~bit(i);

  std::vector<Mask> out;
  // Walk the linear extension; an element may join only once everything below it has.
  auto extend = [&](auto&& self, std::size_t depth, Mask current) -> void {
    if (depth == n) {
      if (out.size() >= limits.max_downsets) {
        throw SizeError("downsets: more than " + std::to_string(limits.max_downsets) + " downsets");
      }
      out.push_back(current);
      return;
    }
    const std::size_t e = order[depth];
    self(self, depth + 1, current);
    if (is_subset(strict_below[e], current)) self(self, depth + 1, current | bit(e));
  };
  extend(extend, 0, 0);
  std::sort(out.begin(), out.end(), by_size_then_value);
  return DownsetFamily{p, std::move(out)};
}

std::vector<Mask> downsets_by_filter(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<kernels::HornRule> rules;
  for (std::size_t e = 0; e < n; ++e) rules.push_back({bit(e), p.down_mask(e)});
  const std::vector<Mask> all = kernels::all_subsets(n);
  std::vector<std::uint8_t> ok(all.size());
  kernels::horn_check(all, rules, ok);
  std::vector<Mask> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (ok[i]) out.push_back(all[i]);
  std::sort(out.begin(), out.end(), by_size_then_value);
  return out;
}

Mask downset_image(const MonotoneMap& f, Mask u) {
  if (!is_downset(f.source(), u)) throw NotDownsetError("downset_image: input is not downward closed");
  Mask image = 0;
  for_each_bit(u, [&](std::size_t e) { image |= bit(f(e)); });
  return down_closure(f.target(), image);
}

std::string subset_label(const std::vector<std::string>& labels, Mask m) {
  std::string s = "{";
  bool first = true;
  for_each_bit(m, [&](std::size_t e) {
    if (!first) s += ',';
    s += labels[e];
    first = false;
  });
  s += '}';
  return s;
}

FinitePoset downset_order(const DownsetFamily& family) {
  std::vector<std::string> labels;
  labels.reserve(family.downsets.size());
  for (Mask m : family.downsets) labels.push_back(subset_label(family.base.labels(), m));
  const auto& d = family.downsets;
  return FinitePoset::from_predicate(std::move(labels), [&](std::size_t i, std::size_t j) { return is_subset(d[i], d[j]); });
}

std::optional<std::vector<std::size_t>> find_order_isomorphism(const FinitePoset& p, const FinitePoset& q) {
  if (p.size() != q.size()) return std::nullopt;
  return find_relation_iso(
      p.size(), [&](std::size_t i, std::size_t j) { return p.leq(i, j); },
      [&](std::size_t i, std::size_t j) { return q.leq(i, j); });
}

}  // namespace finloc
