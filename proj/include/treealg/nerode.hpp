#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treealg/dfta.hpp"
#include "treealg/enumerate.hpp"
#include "treealg/tree.hpp"

namespace treealg {

/// A language: a total, deterministic map from trees to output values.
class LanguageOracle {
 public:
  using Function = std::function<std::string(const Tree&)>;

  /// Opaque oracle; every query goes through `f`.
  LanguageOracle(Alphabet alphabet, Function f);

  /// The language of `a`. The automaton is kept so that contexts can be
  /// evaluated as state transformers instead of tree by tree.
  static LanguageOracle from_dfta(Dfta a);

  /// A finite table; trees outside it map to `fallback`, or throw
  /// SemanticError when there is none.
  static LanguageOracle from_table(Alphabet alphabet, std::map<Tree, std::string> table,
                                   std::optional<std::string> fallback = std::nullopt);

  [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] std::string operator()(const Tree& t) const { return function_(t); }
  /// The backing automaton of a from_dfta oracle, else null.
  [[nodiscard]] const Dfta* algebra() const noexcept { return algebra_.get(); }

 private:
  Alphabet alphabet_;
  Function function_;
  std::shared_ptr<const Dfta> algebra_;
};

struct NerodeOptions {
  bool single_hole = false;
  /// Evaluate contexts through the oracle's automaton when it has one.
  bool use_algebra = true;
  EnumerationLimits limits{};
};

/// Trees of height <= tree_height grouped by agreement under every context
/// of height <= ctx_height. Contexts beyond that bound could split classes
/// further, so the classes over-approximate the true congruence.
struct NerodeTable {
  std::size_t tree_height = 0;
  std::size_t ctx_height = 0;
  bool single_hole = false;

  std::vector<Tree> trees;                ///< enumeration order
  std::vector<std::uint32_t> class_of;    ///< parallel to `trees`, canonical 0..m-1
  std::vector<std::size_t> representative;  ///< per class: index of its first tree
  /// Per class: the outputs under each observation (context or context
  /// behaviour), in observation order.
  std::vector<std::vector<std::string>> rows;
  /// Contexts, in enumeration order; with the algebra route, one witness
  /// context per distinct context behaviour.
  std::vector<Context> contexts;

  [[nodiscard]] std::size_t class_count() const noexcept { return representative.size(); }
};

[[nodiscard]] NerodeTable nerode_classes(const LanguageOracle& language, std::size_t tree_height,
                                         std::size_t ctx_height, NerodeOptions options = {});

/// Automaton on the classes of `table`: init(l) is the class of l, a
/// transition is the class of the symbol applied to representatives, and out
/// is the language on representatives. Throws InsufficientHeightError when
/// the table is not closed (a composite of representatives exceeds the tree
/// height), not consistent (class-mates with different outputs), or a
/// composite of class-mates lands in a different class.
[[nodiscard]] Dfta synthesise(const LanguageOracle& language, const NerodeTable& table);

/// nerode_classes followed by synthesise.
[[nodiscard]] Dfta minimal_from_oracle(const LanguageOracle& language, std::size_t tree_height,
                                       std::size_t ctx_height, NerodeOptions options = {});

using WordOracle = std::function<std::string(std::string_view)>;

/// u ~ v iff L(w u x) = L(w v x) for all words w, x over `alphabet` of
/// length <= max_len. Letters are single characters. Throws SemanticError
/// when u or v uses a letter outside the alphabet.
[[nodiscard]] bool syntactic_equiv(const WordOracle& language, std::string_view alphabet, std::string_view u,
                                   std::string_view v, std::size_t max_len);

}  // namespace treealg
