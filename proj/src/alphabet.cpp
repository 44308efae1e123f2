#include "treealg/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "treealg/error.hpp"

namespace treealg {

bool is_valid_token(std::string_view name) noexcept {
  if (name.empty()) return false;
  constexpr std::string_view reserved = "(),_{}+/:;#";
  for (const char c : name) {
    if (std::isspace(static_cast<unsigned char>(c)) || reserved.find(c) != std::string_view::npos) return false;
  }
  return name.find("->") == std::string_view::npos;
}

namespace {

void require_token(std::string_view name, std::string_view what) {
  if (!is_valid_token(name)) {
    throw SemanticError(std::string(what) + " name '" + std::string(name) + "' is not a valid token");
  }
}

}  // namespace

Signature::Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  for (SymbolId id = 0; id < symbols_.size(); ++id) {
    require_token(symbols_[id].name, "symbol");
    if (!index_.emplace(symbols_[id].name, id).second) {
      throw SemanticError("duplicate symbol '" + symbols_[id].name + "'");
    }
  }
}

std::optional<SymbolId> Signature::find(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

unsigned Signature::max_arity() const noexcept {
  unsigned m = 0;
  for (const auto& s : symbols_) m = std::max(m, s.arity);
  return m;
}

Frontier::Frontier(std::vector<std::string> leaves) : leaves_(std::move(leaves)) {
  if (leaves_.empty()) throw SemanticError("frontier must be nonempty");
  for (LeafId id = 0; id < leaves_.size(); ++id) {
    require_token(leaves_[id], "leaf");
    if (!index_.emplace(leaves_[id], id).second) {
      throw SemanticError("duplicate leaf '" + leaves_[id] + "'");
    }
  }
}

std::optional<LeafId> Frontier::find(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Alphabet::Alphabet(Signature s, Frontier f) : sig(std::move(s)), fr(std::move(f)) {
  if (fr.size() == 0) throw SemanticError("frontier must be nonempty");
  for (const auto& leaf : fr.leaves()) {
    if (sig.find(leaf)) throw SemanticError("'" + leaf + "' is both a symbol and a leaf");
  }
}

OutputSet::OutputSet(std::vector<std::string> values) : values_(std::move(values)) {
  if (values_.empty()) throw SemanticError("output set must be nonempty");
  for (OutputId id = 0; id < values_.size(); ++id) {
    require_token(values_[id], "output");
    if (!index_.emplace(values_[id], id).second) {
      throw SemanticError("duplicate output value '" + values_[id] + "'");
    }
  }
}

std::optional<OutputId> OutputSet::find(std::string_view value) const {
  const auto it = index_.find(std::string(value));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace treealg
