#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treealg/alphabet.hpp"
#include "treealg/tree.hpp"

namespace treealg {

using StateId = std::uint32_t;

/// A total deterministic bottom-up tree automaton (Q, delta, i, o) with a
/// finite output set. Each transition table is stored flattened: the entry
/// for `sym(q1,..,qk)` lives at the mixed-radix index of (q1,..,qk).
class Dfta {
 public:
  /// Validates totality and ranges; throws SemanticError.
  Dfta(Alphabet alphabet, OutputSet outputs, std::vector<std::string> state_names, std::vector<StateId> init,
       std::vector<std::vector<StateId>> trans, std::vector<OutputId> out);

  [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] const Signature& sig() const noexcept { return alphabet_.sig; }
  [[nodiscard]] const Frontier& frontier() const noexcept { return alphabet_.fr; }
  [[nodiscard]] const OutputSet& outputs() const noexcept { return outputs_; }

  [[nodiscard]] std::size_t state_count() const noexcept { return names_.size(); }
  [[nodiscard]] const std::string& state_name(StateId q) const { return names_.at(q); }
  [[nodiscard]] std::span<const std::string> state_names() const noexcept { return names_; }
  [[nodiscard]] std::optional<StateId> find_state(std::string_view name) const;

  [[nodiscard]] StateId init(LeafId leaf) const { return init_.at(leaf); }
  [[nodiscard]] std::span<const StateId> init_map() const noexcept { return init_; }
  [[nodiscard]] OutputId out(StateId q) const { return out_.at(q); }
  [[nodiscard]] std::span<const OutputId> out_map() const noexcept { return out_; }
  [[nodiscard]] const std::string& output_name(StateId q) const { return outputs_[out_.at(q)]; }

  [[nodiscard]] StateId step(SymbolId sym, std::span<const StateId> args) const;
  [[nodiscard]] std::span<const StateId> table(SymbolId sym) const { return trans_.at(sym); }

  friend bool operator==(const Dfta&, const Dfta&) = default;

 private:
  Alphabet alphabet_;
  OutputSet outputs_;
  std::vector<std::string> names_;
  std::vector<StateId> init_;
  std::vector<std::vector<StateId>> trans_;
  std::vector<OutputId> out_;
};

struct Counterexample {
  Tree tree;
  std::string left_output;
  std::string right_output;
};

/// The state reached by running `a` bottom-up on `t`.
[[nodiscard]] StateId eval(const Dfta& a, const Tree& t);
[[nodiscard]] const std::string& output_of(const Dfta& a, const Tree& t);

/// Reachable states in discovery order: initial images by leaf, nullary
/// symbols, then saturation rounds over symbols and tuples.
[[nodiscard]] std::vector<StateId> discovery_order(const Dfta& a);
/// Reachable states, sorted by id.
[[nodiscard]] std::vector<StateId> reachable_states(const Dfta& a);
[[nodiscard]] bool is_reachable(const Dfta& a);

/// Restriction to the reachable states, preserving their relative order.
[[nodiscard]] Dfta trim_reachable(const Dfta& a);
/// Shrinks the output set to the image of `out`, keeping declaration order.
[[nodiscard]] Dfta restrict_outputs(const Dfta& a);
[[nodiscard]] bool outputs_surjective(const Dfta& a);

/// Renumbers the states of a reachable automaton in discovery order.
[[nodiscard]] Dfta canonicalise(const Dfta& a);
/// Same automaton with states permuted: new state j is old state order[j].
[[nodiscard]] Dfta permute_states(const Dfta& a, std::span<const StateId> order);

/// Decides whether `a` and `b` assign the same output (compared by name) to
/// every tree. Returns a counterexample of minimal height otherwise; among
/// witnesses built during product saturation the lexicographically smallest
/// rendering wins. Throws SemanticError unless the alphabets coincide.
[[nodiscard]] std::optional<Counterexample> equiv(const Dfta& a, const Dfta& b);

/// The unique isomorphism between two reachable automata, as a map from the
/// states of `a` to the states of `b`. Throws SemanticError when an input is
/// not reachable or the alphabets differ.
[[nodiscard]] std::optional<std::vector<StateId>> isomorphic(const Dfta& a, const Dfta& b);

}  // namespace treealg
