#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treealg/alphabet.hpp"

namespace treealg {

/// An element of the free algebra over a frontier: a leaf, a symbol applied
/// to children, or (inside contexts only) the hole `_`.
class Tree {
 public:
  enum class Kind : std::uint8_t { leaf, node, hole };

  static Tree leaf(LeafId id) { return Tree(Kind::leaf, id, {}); }
  static Tree node(SymbolId sym, std::vector<Tree> children = {}) {
    return Tree(Kind::node, sym, std::move(children));
  }
  static Tree hole() { return Tree(Kind::hole, 0, {}); }

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] bool is_leaf() const noexcept { return kind_ == Kind::leaf; }
  [[nodiscard]] bool is_node() const noexcept { return kind_ == Kind::node; }
  [[nodiscard]] bool is_hole() const noexcept { return kind_ == Kind::hole; }

  [[nodiscard]] LeafId leaf_id() const noexcept { return label_; }
  [[nodiscard]] SymbolId symbol() const noexcept { return label_; }
  [[nodiscard]] std::span<const Tree> children() const noexcept { return children_; }

  /// Edges on the longest root-to-leaf path. Leaves, holes and nullary
  /// symbols have height 0.
  [[nodiscard]] std::size_t height() const noexcept;
  [[nodiscard]] std::size_t size() const noexcept;
  [[nodiscard]] std::size_t hole_count() const noexcept;

  friend bool operator==(const Tree& a, const Tree& b) noexcept;
  /// Structural total order; used for ordered containers only.
  friend bool operator<(const Tree& a, const Tree& b) noexcept;

 private:
  Tree(Kind kind, std::uint32_t label, std::vector<Tree> children)
      : kind_(kind), label_(label), children_(std::move(children)) {}

  Kind kind_;
  std::uint32_t label_;
  std::vector<Tree> children_;
};

/// A tree whose leaves may include the hole. Any number of holes is legal.
struct Context {
  Tree body;

  friend bool operator==(const Context&, const Context&) = default;
};

/// Throws SemanticError unless every node matches its symbol's arity and
/// every leaf id lies in the frontier. Holes are rejected unless allowed.
void check_well_formed(const Alphabet& alphabet, const Tree& t, bool allow_holes = false);

/// Prefix syntax `f(g(x),y)`; nullary symbols are written bare.
[[nodiscard]] Tree parse_tree(std::string_view text, const Alphabet& alphabet);
[[nodiscard]] Context parse_context(std::string_view text, const Alphabet& alphabet);

/// Canonical text without whitespace. Holes render as `_`.
[[nodiscard]] std::string render_tree(const Alphabet& alphabet, const Tree& t);
[[nodiscard]] std::string render_context(const Alphabet& alphabet, const Context& c);

/// Replaces every hole of `c` by `t`.
[[nodiscard]] Tree plug(const Context& c, const Tree& t);

/// Replaces every hole of `outer` by the body of `inner`.
[[nodiscard]] Context compose(const Context& outer, const Context& inner);

}  // namespace treealg
