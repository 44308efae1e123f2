#include "treealg/tree.hpp"

#include <algorithm>
#include <cctype>

#include "treealg/error.hpp"

namespace treealg {

std::size_t Tree::height() const noexcept {
  std::size_t h = 0;
  for (const auto& c : children_) h = std::max(h, c.height() + 1);
  return h;
}

std::size_t Tree::size() const noexcept {
  std::size_t n = 1;
  for (const auto& c : children_) n += c.size();
  return n;
}

std::size_t Tree::hole_count() const noexcept {
  if (kind_ == Kind::hole) return 1;
  std::size_t n = 0;
  for (const auto& c : children_) n += c.hole_count();
  return n;
}

bool operator==(const Tree& a, const Tree& b) noexcept {
  return a.kind_ == b.kind_ && a.label_ == b.label_ && a.children_ == b.children_;
}

bool operator<(const Tree& a, const Tree& b) noexcept {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  if (a.label_ != b.label_) return a.label_ < b.label_;
  return std::lexicographical_compare(a.children_.begin(), a.children_.end(), b.children_.begin(),
                                      b.children_.end());
}

void check_well_formed(const Alphabet& alphabet, const Tree& t, bool allow_holes) {
  switch (t.kind()) {
    case Tree::Kind::hole:
      if (!allow_holes) throw SemanticError("hole outside of a context");
      return;
    case Tree::Kind::leaf:
      if (t.leaf_id() >= alphabet.fr.size()) throw SemanticError("leaf id outside the frontier");
      return;
    case Tree::Kind::node:
      if (t.symbol() >= alphabet.sig.size()) throw SemanticError("symbol id outside the signature");
      if (t.children().size() != alphabet.sig[t.symbol()].arity) {
        throw SemanticError("symbol '" + alphabet.sig[t.symbol()].name + "' expects " +
                            std::to_string(alphabet.sig[t.symbol()].arity) + " children");
      }
      for (const auto& c : t.children()) check_well_formed(alphabet, c, allow_holes);
      return;
  }
}

namespace {

class TreeParser {
 public:
  TreeParser(std::string_view text, const Alphabet& alphabet, bool allow_holes)
      : text_(text), alphabet_(alphabet), allow_holes_(allow_holes) {}

  Tree parse() {
    Tree t = parse_tree();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return t;
  }

 private:
  static bool is_delimiter(char c) {
    return c == '(' || c == ')' || c == ',' || std::isspace(static_cast<unsigned char>(c));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  Tree parse_tree() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_delimiter(text_[pos_])) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name.empty()) {
      throw ParseError(pos_ < text_.size() ? "expected a symbol or leaf" : "unexpected end of input", start);
    }
    if (name == "_") {
      if (!allow_holes_) throw ParseError("hole '_' is only allowed in contexts", start);
      return Tree::hole();
    }
    if (const auto sym = alphabet_.sig.find(name)) {
      const unsigned arity = alphabet_.sig[*sym].arity;
      std::vector<Tree> children;
      skip_space();
      const std::size_t paren = pos_;
      if (accept('(')) {
        if (arity == 0) throw AlphabetMismatchError("nullary symbol '" + std::string(name) + "' takes no arguments", paren);
        children.push_back(parse_tree());
        while (accept(',')) children.push_back(parse_tree());
        expect(')');
      }
      if (children.size() != arity) {
        throw AlphabetMismatchError("arity mismatch: '" + std::string(name) + "' expects " + std::to_string(arity) +
                             " argument(s), got " + std::to_string(children.size()),
                         start);
      }
      return Tree::node(*sym, std::move(children));
    }
    if (const auto leaf = alphabet_.fr.find(name)) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '(') {
        throw AlphabetMismatchError("leaf '" + std::string(name) + "' cannot take arguments", pos_);
      }
      return Tree::leaf(*leaf);
    }
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      throw AlphabetMismatchError("unknown symbol '" + std::string(name) + "'", start);
    }
    throw AlphabetMismatchError("'" + std::string(name) + "' is neither a symbol nor a frontier leaf", start);
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  bool allow_holes_;
  std::size_t pos_ = 0;
};

void render_into(const Alphabet& alphabet, const Tree& t, std::string& out) {
  switch (t.kind()) {
    case Tree::Kind::hole:
      out += '_';
      return;
    case Tree::Kind::leaf:
      out += alphabet.fr[t.leaf_id()];
      return;
    case Tree::Kind::node: {
      out += alphabet.sig[t.symbol()].name;
      const auto children = t.children();
      if (children.empty()) return;
      out += '(';
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += ',';
        render_into(alphabet, children[i], out);
      }
      out += ')';
      return;
    }
  }
}

}  // namespace

Tree parse_tree(std::string_view text, const Alphabet& alphabet) {
  return TreeParser(text, alphabet, false).parse();
}

Context parse_context(std::string_view text, const Alphabet& alphabet) {
  return Context{TreeParser(text, alphabet, true).parse()};
}

std::string render_tree(const Alphabet& alphabet, const Tree& t) {
  std::string out;
  render_into(alphabet, t, out);
  return out;
}

std::string render_context(const Alphabet& alphabet, const Context& c) { return render_tree(alphabet, c.body); }

namespace {

Tree substitute_holes(const Tree& body, const Tree& t) {
  if (body.is_hole()) return t;
  if (body.is_leaf() || body.children().empty()) return body;
  std::vector<Tree> children;
  children.reserve(body.children().size());
  for (const auto& child : body.children()) children.push_back(substitute_holes(child, t));
  return Tree::node(body.symbol(), std::move(children));
}

}  // namespace

Tree plug(const Context& c, const Tree& t) { return substitute_holes(c.body, t); }

Context compose(const Context& outer, const Context& inner) { return Context{plug(outer, inner.body)}; }

}  // namespace treealg
