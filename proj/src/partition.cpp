#include "treealg/partition.hpp"

#include <utility>

#include "treealg/error.hpp"

namespace treealg {

Partition Partition::top(std::size_t n) {
  if (n == 0) throw SemanticError("a partition needs at least one state");
  return Partition(std::vector<BlockId>(n, 0), 1);
}

Partition Partition::discrete(std::size_t n) {
  std::vector<BlockId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<BlockId>(i);
  return Partition(std::move(ids), static_cast<BlockId>(n));
}

std::vector<std::vector<StateId>> Partition::blocks() const {
  std::vector<std::vector<StateId>> out(blocks_);
  for (StateId q = 0; q < block_of_.size(); ++q) out[block_of_[q]].push_back(q);
  return out;
}

bool finer_or_equal(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw SemanticError("partitions over different state sets");
  // p <= q iff each p-block maps into a single q-block
  std::vector<std::int64_t> image(p.block_count(), -1);
  for (StateId s = 0; s < p.size(); ++s) {
    auto& slot = image[p.block_of(s)];
    if (slot < 0) {
      slot = q.block_of(s);
    } else if (slot != q.block_of(s)) {
      return false;
    }
  }
  return true;
}

Partition kernel(std::span<const std::uint32_t> f) { return Partition::from_labels(f); }

Partition meet(const Partition& p, const Partition& q) {
  if (p.size() != q.size()) throw SemanticError("partitions over different state sets");
  std::vector<std::pair<BlockId, BlockId>> labels;
  labels.reserve(p.size());
  for (StateId s = 0; s < p.size(); ++s) labels.emplace_back(p.block_of(s), q.block_of(s));
  return Partition::from_labels(std::span<const std::pair<BlockId, BlockId>>(labels));
}

std::string format_partition(const Partition& p, std::span<const std::string> names) {
  std::string out;
  for (const auto& block : p.blocks()) {
    if (!out.empty()) out += ' ';
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ',';
      out += names[block[i]];
    }
    out += '}';
  }
  return out;
}

}  // namespace treealg
