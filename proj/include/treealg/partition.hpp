#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "treealg/dfta.hpp"

namespace treealg {

using BlockId = std::uint32_t;

/// A quotient of the state set {0..n-1}. Block ids are numbered 0..b-1 in
/// order of first occurrence, so equal partitions compare equal.
///
/// Ordering follows the quotient order: p <= q iff q is coarser, i.e.
/// states in a common p-block are also in a common q-block.
class Partition {
 public:
  Partition() = default;

  /// Canonicalises an arbitrary labelling of states.
  template <typename T>
  static Partition from_labels(std::span<const T> labels) {
    std::map<T, BlockId> ids;
    std::vector<BlockId> block_of;
    block_of.reserve(labels.size());
    for (const auto& label : labels) {
      const auto [it, inserted] = ids.emplace(label, static_cast<BlockId>(ids.size()));
      block_of.push_back(it->second);
    }
    return Partition(std::move(block_of), static_cast<BlockId>(ids.size()));
  }

  static Partition top(std::size_t n);
  static Partition discrete(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return block_of_.size(); }
  [[nodiscard]] std::size_t block_count() const noexcept { return blocks_; }
  [[nodiscard]] BlockId block_of(StateId q) const { return block_of_.at(q); }
  [[nodiscard]] std::span<const BlockId> labels() const noexcept { return block_of_; }
  [[nodiscard]] bool same_block(StateId p, StateId q) const { return block_of(p) == block_of(q); }
  [[nodiscard]] bool is_discrete() const noexcept { return blocks_ == block_of_.size(); }
  [[nodiscard]] bool is_top() const noexcept { return blocks_ == 1; }

  /// Members of each block, in block order; members ascend.
  [[nodiscard]] std::vector<std::vector<StateId>> blocks() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  Partition(std::vector<BlockId> block_of, BlockId blocks) : block_of_(std::move(block_of)), blocks_(blocks) {}

  std::vector<BlockId> block_of_;
  BlockId blocks_ = 0;
};

/// p <= q in the quotient order (q coarser). Throws on size mismatch.
[[nodiscard]] bool finer_or_equal(const Partition& p, const Partition& q);

/// States share a block iff `f` agrees on them.
[[nodiscard]] Partition kernel(std::span<const std::uint32_t> f);

/// Intersection of the two equivalence relations.
[[nodiscard]] Partition meet(const Partition& p, const Partition& q);

/// `{q0,q2} {q1}` using the given state names.
[[nodiscard]] std::string format_partition(const Partition& p, std::span<const std::string> names);

}  // namespace treealg
