#pragma once

#include <cstddef>
#include <vector>

#include "treealg/alphabet.hpp"
#include "treealg/tree.hpp"

namespace treealg {

struct EnumerationLimits {
  std::size_t max_count = 1'000'000;
};

/// All trees of height <= max_height, ordered by height and then by their
/// rendered text (bytewise). Throws ResourceLimitError past the cap.
[[nodiscard]] std::vector<Tree> enumerate_trees(const Alphabet& alphabet, std::size_t max_height,
                                                EnumerationLimits limits = {});

/// All contexts of height <= max_height with at least one hole (exactly one
/// when `single_hole` is set), in the same order as enumerate_trees. The cap
/// applies to the intermediate set of trees over the frontier plus the hole.
[[nodiscard]] std::vector<Context> enumerate_contexts(const Alphabet& alphabet, std::size_t max_height,
                                                      bool single_hole = false,
                                                      EnumerationLimits limits = {});

}  // namespace treealg
