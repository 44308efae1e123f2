#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "treealg/dfta.hpp"
#include "treealg/nfta.hpp"
#include "treealg/semiring.hpp"
#include "treealg/wfta.hpp"

namespace treealg {

// Line-oriented automaton files. The first meaningful line names the kind
// (`dfta`, `nfta`, `wfta rational`, `wfta bool`, `table`); `#` starts a
// comment; `key: value` lines declare the alphabet and maps; the lines after
// `trans:` (or `entries:` in a table) list one transition each.
//
// Malformed text raises ParseError; well-formed text that names unknown
// states, breaks an arity or leaves a map partial raises SemanticError.

using AnyAutomaton = std::variant<Dfta, Nfta, Wfta<RationalSemiring>, Wfta<BooleanSemiring>>;

[[nodiscard]] AnyAutomaton parse_automaton(std::string_view text);
[[nodiscard]] Dfta parse_dfta(std::string_view text);
[[nodiscard]] Nfta parse_nfta(std::string_view text);

[[nodiscard]] std::string write_dfta(const Dfta& a);
[[nodiscard]] std::string write_nfta(const Nfta& a);
template <Semiring S>
[[nodiscard]] std::string write_wfta(const Wfta<S>& a);

/// A finite language table: `tree -> value` entries plus an optional
/// `default:` value for every other tree.
struct LanguageTable {
  Alphabet alphabet;
  std::map<Tree, std::string> entries;
  std::optional<std::string> fallback;
};

[[nodiscard]] LanguageTable parse_table(std::string_view text);

/// First keyword of the file (`dfta`, `nfta`, `wfta`, `table`), or empty.
[[nodiscard]] std::string sniff_kind(std::string_view text);

}  // namespace treealg
