#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace treealg {

using SymbolId = std::uint32_t;
using LeafId = std::uint32_t;
using OutputId = std::uint32_t;

/// True iff `name` is a legal token: nonempty, no whitespace and none of
/// the reserved characters `( ) , _ { } + / : ; #` nor the arrow `->`.
[[nodiscard]] bool is_valid_token(std::string_view name) noexcept;

struct Symbol {
  std::string name;
  unsigned arity = 0;

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// A ranked alphabet. Symbol ids are positions in declaration order.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Symbol> symbols);

  [[nodiscard]] std::size_t size() const noexcept { return symbols_.size(); }
  [[nodiscard]] const Symbol& operator[](SymbolId id) const { return symbols_.at(id); }
  [[nodiscard]] std::span<const Symbol> symbols() const noexcept { return symbols_; }
  [[nodiscard]] std::optional<SymbolId> find(std::string_view name) const;
  [[nodiscard]] unsigned max_arity() const noexcept;

  friend bool operator==(const Signature& a, const Signature& b) { return a.symbols_ == b.symbols_; }

 private:
  std::vector<Symbol> symbols_;
  std::unordered_map<std::string, SymbolId> index_;
};

/// The finite set of leaf labels a tree may carry.
class Frontier {
 public:
  Frontier() = default;
  explicit Frontier(std::vector<std::string> leaves);

  [[nodiscard]] std::size_t size() const noexcept { return leaves_.size(); }
  [[nodiscard]] const std::string& operator[](LeafId id) const { return leaves_.at(id); }
  [[nodiscard]] std::span<const std::string> leaves() const noexcept { return leaves_; }
  [[nodiscard]] std::optional<LeafId> find(std::string_view name) const;

  friend bool operator==(const Frontier& a, const Frontier& b) { return a.leaves_ == b.leaves_; }

 private:
  std::vector<std::string> leaves_;
  std::unordered_map<std::string, LeafId> index_;
};

/// Signature and frontier together; leaf names and symbol names are disjoint.
struct Alphabet {
  Signature sig;
  Frontier fr;

  Alphabet() = default;
  Alphabet(Signature s, Frontier f);

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// Finite, nonempty, duplicate-free list of output values.
class OutputSet {
 public:
  OutputSet() = default;
  explicit OutputSet(std::vector<std::string> values);

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] const std::string& operator[](OutputId id) const { return values_.at(id); }
  [[nodiscard]] std::span<const std::string> values() const noexcept { return values_; }
  [[nodiscard]] std::optional<OutputId> find(std::string_view value) const;

  friend bool operator==(const OutputSet& a, const OutputSet& b) { return a.values_ == b.values_; }

 private:
  std::vector<std::string> values_;
  std::unordered_map<std::string, OutputId> index_;
};

}  // namespace treealg
