#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treealg/alphabet.hpp"
#include "treealg/dfta.hpp"
#include "treealg/tree.hpp"

namespace treealg {

/// Sorted, duplicate-free list of states.
using StateSet = std::vector<StateId>;

/// Non-deterministic bottom-up tree automaton: relations for init and each
/// transition, plus a set of final states. Tuples without an entry map to
/// the empty set.
class Nfta {
 public:
  using Relation = std::map<std::vector<StateId>, StateSet>;

  /// Normalises every set (sort + dedupe) and validates references.
  Nfta(Alphabet alphabet, std::vector<std::string> state_names, std::vector<StateSet> init,
       std::vector<Relation> trans, StateSet final_states);

  [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] const Signature& sig() const noexcept { return alphabet_.sig; }
  [[nodiscard]] const Frontier& frontier() const noexcept { return alphabet_.fr; }
  [[nodiscard]] std::size_t state_count() const noexcept { return names_.size(); }
  [[nodiscard]] const std::string& state_name(StateId q) const { return names_.at(q); }
  [[nodiscard]] std::span<const std::string> state_names() const noexcept { return names_; }
  [[nodiscard]] std::optional<StateId> find_state(std::string_view name) const;

  [[nodiscard]] const StateSet& init(LeafId leaf) const { return init_.at(leaf); }
  [[nodiscard]] const Relation& relation(SymbolId sym) const { return trans_.at(sym); }
  [[nodiscard]] const StateSet& targets(SymbolId sym, std::span<const StateId> args) const;
  [[nodiscard]] const StateSet& final_states() const noexcept { return final_; }

 private:
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::vector<StateSet> init_;
  std::vector<Relation> trans_;
  StateSet final_;
};

/// The distributive law of the signature over finite powerset: all argument
/// tuples picking one state from each set, in lexicographic order. Throws
/// SemanticError on arity mismatch.
[[nodiscard]] std::vector<std::vector<StateId>> dlaw_pow(const Signature& sig, SymbolId sym,
                                                         std::span<const StateSet> args);

/// Set of states reached on `t`: union of transition images over dlaw_pow.
[[nodiscard]] StateSet nfta_eval(const Nfta& a, const Tree& t);
[[nodiscard]] bool nfta_accepts(const Nfta& a, const Tree& t);

struct SubsetLimits {
  std::size_t max_states = std::size_t{1} << 16;
};

/// Subset construction restricted to reachable subsets. States are named by
/// their sorted members (`[q0|q1]`, `[]` for the empty set) and numbered in
/// discovery order; outputs are {0,1}. Throws ResourceLimitError past the cap.
[[nodiscard]] Dfta nfta_determinise(const Nfta& a, SubsetLimits limits = {});

/// `{q0,q1}` using the automaton's state names.
[[nodiscard]] std::string format_state_set(const Nfta& a, const StateSet& set);

}  // namespace treealg
