#pragma once

// Finite posets, monotone maps and downset enumeration.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "finloc/common.hpp"
#include "finloc/limits.hpp"

namespace finloc {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// A finite partial order over opaque labels. Internal indices are positional
/// (input order); the order is stored as closed up- and down-set tables.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Applies the reflexive-transitive closure of `leq` and checks antisymmetry.
  /// Throws DuplicateLabelError, UnknownLabelError or CycleError.
  static FinitePoset validate(std::vector<std::string> labels,
                              const std::vector<std::pair<std::string, std::string>>& leq);

  /// Same, with pairs given by position.
  static FinitePoset from_pairs(std::vector<std::string> labels,
                                const std::vector<std::pair<std::size_t, std::size_t>>& leq);

  /// Builds the poset whose order is the closure of pred(i, j).
  template <class Pred>
  static FinitePoset from_predicate(std::vector<std::string> labels, Pred pred) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    const std::size_t n = labels.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && pred(i, j)) pairs.emplace_back(i, j);
    return from_pairs(std::move(labels), pairs);
  }

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> find(const std::string& label) const;
  /// Throws UnknownLabelError.
  std::size_t index_of(const std::string& label) const;

  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  const Bitset& up(std::size_t i) const { return up_[i]; }
  const Bitset& down(std::size_t i) const { return down_[i]; }

  /// Positions sorted by (|↓i|, i); a linear extension of the order.
  const std::vector<std::size_t>& linear_extension() const noexcept { return linear_; }

  /// Covering pairs (i, j): i < j with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// ↓i as a mask; requires size() ≤ 64.
  Mask down_mask(std::size_t i) const;
  Mask up_mask(std::size_t i) const;

  /// Same labels in the same positions and the same order.
  friend bool operator==(const FinitePoset& a, const FinitePoset& b);

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> index_;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<std::size_t> linear_;
  std::vector<Mask> down_masks_;
  std::vector<Mask> up_masks_;
};

/// Order-preserving map between finite posets; validated at construction.
class MonotoneMap {
 public:
  /// Throws NotMonotoneError with a witness pair.
  MonotoneMap(FinitePoset source, FinitePoset target, std::vector<std::size_t> image);

  const FinitePoset& source() const noexcept { return source_; }
  const FinitePoset& target() const noexcept { return target_; }
  std::size_t operator()(std::size_t x) const { return image_[x]; }
  const std::vector<std::size_t>& image() const noexcept { return image_; }

 private:
  FinitePoset source_;
  FinitePoset target_;
  std::vector<std::size_t> image_;
};

/// g ∘ f. Throws CarrierMismatchError when f's target is not g's source.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

struct DownsetFamily {
  FinitePoset base;
  /// Every downset, ordered by (cardinality, mask value): ∅ first, the whole carrier last.
  std::vector<Mask> downsets;
};

bool is_downset(const FinitePoset& p, Mask u);

/// ↓U in p. Requires p.size() ≤ 64.
Mask down_closure(const FinitePoset& p, Mask u);

/// Every downset of p, by extension over a fixed linear extension.
/// Throws SizeError when p has more than 64 points or the count exceeds the cap.
DownsetFamily downsets(const FinitePoset& p, const Limits& limits = default_limits());

/// Slow oracle: filters the full powerset with the batched Horn-rule kernel.
std::vector<Mask> downsets_by_filter(const FinitePoset& p);

/// ↓f(U). Throws NotDownsetError when u is not a downset of the source.
Mask downset_image(const MonotoneMap& f, Mask u);

/// The frame of downsets ordered by inclusion, as a poset labelled "{a,b,...}".
FinitePoset downset_order(const DownsetFamily& family);

/// "{a,b}" rendering of a subset with the given point labels, in index order.
std::string subset_label(const std::vector<std::string>& labels, Mask m);

/// Order isomorphism p → q as a position map, or nullopt.
std::optional<std::vector<std::size_t>> find_order_isomorphism(const FinitePoset& p, const FinitePoset& q);

}  // namespace finloc
