#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "treealg/dfta.hpp"
#include "treealg/partition.hpp"

namespace treealg {

/// The cobase of `p` composed with the transitions: the coarsest partition
/// under which changing one argument within its block never moves a
/// transition result to a different `p`-block.
[[nodiscard]] Partition theta(const Dfta& a, const Partition& p);

struct GfpResult {
  Partition partition;
  std::size_t iterations = 0;  ///< applications of the operator until stable
};

/// Greatest fixed point of `p -> meet(theta(a, p), kernel(out))`, iterated
/// downwards from the top partition. Requires `out` to be surjective.
[[nodiscard]] GfpResult minimisation_partition(const Dfta& a);

struct Minimisation {
  Dfta automaton;
  Partition partition;
  std::size_t iterations = 0;
};

/// Quotient of a reachable, output-restricted automaton by its greatest
/// forward bisimulation. Throws SemanticError when either hypothesis fails.
[[nodiscard]] Minimisation minimise(const Dfta& a);

/// A description of the first rule `p` breaks, or nullopt when `p` is a
/// forward bisimulation: block-mates have equal outputs, and replacing one
/// argument of a transition by a block-mate keeps the result in its block.
[[nodiscard]] std::optional<std::string> bisimulation_violation(const Dfta& a, const Partition& p);
[[nodiscard]] bool is_forward_bisimulation(const Dfta& a, const Partition& p);

/// The automaton on blocks of `p`. Each block is named after its first
/// member. Throws SemanticError with the violating instance when `p` is not
/// a forward bisimulation.
[[nodiscard]] Dfta quotient_automaton(const Dfta& a, const Partition& p);

/// No proper quotient automaton exists. Requires surjective `out`.
[[nodiscard]] bool is_simple(const Dfta& a);
/// Simple and reachable. Requires surjective `out`.
[[nodiscard]] bool is_minimal(const Dfta& a);

}  // namespace treealg
