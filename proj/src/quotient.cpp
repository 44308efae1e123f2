#include "treealg/quotient.hpp"

#include <vector>

#include "treealg/error.hpp"
#include "treealg/tuples.hpp"

namespace treealg {

Partition theta(const Dfta& a, const Partition& p) {
  const std::size_t n = a.state_count();
  if (p.size() != n) throw SemanticError("partition does not match the automaton's states");

  // Each state's behaviour: for every symbol, argument position and choice
  // of the remaining arguments, the p-block of the transition result.
  std::vector<std::vector<BlockId>> behaviour(n);
  std::vector<StateId> args;
  for (SymbolId s = 0; s < a.sig().size(); ++s) {
    const unsigned k = a.sig()[s].arity;
    if (k == 0) continue;
    args.resize(k);
    for (unsigned pos = 0; pos < k; ++pos) {
      for_each_tuple<StateId>(n, k - 1, [&](std::span<const StateId> others) {
        for (unsigned j = 0, o = 0; j < k; ++j) {
          if (j != pos) args[j] = others[o++];
        }
        for (StateId q = 0; q < n; ++q) {
          args[pos] = q;
          behaviour[q].push_back(p.block_of(a.step(s, args)));
        }
      });
    }
  }
  return Partition::from_labels(std::span<const std::vector<BlockId>>(behaviour));
}

GfpResult minimisation_partition(const Dfta& a) {
  if (!outputs_surjective(a)) throw SemanticError("output map is not surjective; restrict outputs first");
  const Partition outputs = kernel(a.out_map());
  GfpResult result{Partition::top(a.state_count()), 0};
  while (true) {
    Partition next = meet(theta(a, result.partition), outputs);
    ++result.iterations;
    if (next == result.partition) return result;
    result.partition = std::move(next);
  }
}

Minimisation minimise(const Dfta& a) {
  if (!is_reachable(a)) throw SemanticError("minimisation requires a reachable automaton; trim first");
  auto gfp = minimisation_partition(a);
  Dfta quotient = quotient_automaton(a, gfp.partition);
  return Minimisation{std::move(quotient), std::move(gfp.partition), gfp.iterations};
}

std::optional<std::string> bisimulation_violation(const Dfta& a, const Partition& p) {
  const std::size_t n = a.state_count();
  if (p.size() != n) throw SemanticError("partition does not match the automaton's states");
  for (StateId x = 0; x < n; ++x) {
    for (StateId y = x + 1; y < n; ++y) {
      if (p.same_block(x, y) && a.out(x) != a.out(y)) {
        return "states " + a.state_name(x) + " and " + a.state_name(y) + " share a block but output " +
               a.output_name(x) + " and " + a.output_name(y);
      }
    }
  }
  const auto render = [&](SymbolId s, std::span<const StateId> args) {
    std::string text = a.sig()[s].name + "(";
    for (std::size_t j = 0; j < args.size(); ++j) text += (j ? "," : "") + a.state_name(args[j]);
    return text + ")";
  };
  std::optional<std::string> violation;
  std::vector<StateId> swapped;
  for (SymbolId s = 0; s < a.sig().size() && !violation; ++s) {
    const unsigned k = a.sig()[s].arity;
    for_each_tuple<StateId>(n, k, [&](std::span<const StateId> args) {
      if (violation) return;
      const StateId target = a.step(s, args);
      swapped.assign(args.begin(), args.end());
      for (unsigned pos = 0; pos < k && !violation; ++pos) {
        for (StateId alt = 0; alt < n; ++alt) {
          if (alt == args[pos] || !p.same_block(alt, args[pos])) continue;
          swapped[pos] = alt;
          const StateId other = a.step(s, swapped);
          if (!p.same_block(target, other)) {
            violation = render(s, args) + " -> " + a.state_name(target) + " but " + render(s, swapped) + " -> " +
                        a.state_name(other) + " lies in a different block";
            return;
          }
        }
        swapped[pos] = args[pos];
      }
    });
  }
  return violation;
}

bool is_forward_bisimulation(const Dfta& a, const Partition& p) { return !bisimulation_violation(a, p); }

Dfta quotient_automaton(const Dfta& a, const Partition& p) {
  if (auto violation = bisimulation_violation(a, p)) {
    throw SemanticError("partition is not a forward bisimulation: " + *violation);
  }
  const auto blocks = p.blocks();
  const std::size_t m = blocks.size();
  std::vector<std::string> names;
  std::vector<OutputId> out;
  for (const auto& block : blocks) {
    names.push_back(a.state_name(block.front()));
    out.push_back(a.out(block.front()));
  }
  std::vector<StateId> init;
  for (const StateId q : a.init_map()) init.push_back(p.block_of(q));
  std::vector<std::vector<StateId>> trans(a.sig().size());
  std::vector<StateId> reps;
  for (SymbolId s = 0; s < a.sig().size(); ++s) {
    const unsigned k = a.sig()[s].arity;
    reps.resize(k);
    trans[s].reserve(checked_power(m, k));
    for_each_tuple<StateId>(m, k, [&](std::span<const StateId> block_args) {
      for (unsigned j = 0; j < k; ++j) reps[j] = blocks[block_args[j]].front();
      trans[s].push_back(p.block_of(a.step(s, reps)));
    });
  }
  return Dfta(a.alphabet(), a.outputs(), std::move(names), std::move(init), std::move(trans), std::move(out));
}

bool is_simple(const Dfta& a) { return minimisation_partition(a).partition.is_discrete(); }

bool is_minimal(const Dfta& a) {
  if (!outputs_surjective(a)) throw SemanticError("output map is not surjective; restrict outputs first");
  return is_reachable(a) && is_simple(a);
}

}  // namespace treealg
