#include "treealg/nerode.hpp"

#include <algorithm>
#include <set>

#include "treealg/error.hpp"
#include "treealg/tuples.hpp"

namespace treealg {

LanguageOracle::LanguageOracle(Alphabet alphabet, Function f)
    : alphabet_(std::move(alphabet)), function_(std::move(f)) {}

LanguageOracle LanguageOracle::from_dfta(Dfta a) {
  auto algebra = std::make_shared<const Dfta>(std::move(a));
  LanguageOracle oracle(algebra->alphabet(), [algebra](const Tree& t) { return output_of(*algebra, t); });
  oracle.algebra_ = std::move(algebra);
  return oracle;
}

LanguageOracle LanguageOracle::from_table(Alphabet alphabet, std::map<Tree, std::string> table,
                                          std::optional<std::string> fallback) {
  auto shared = std::make_shared<const std::map<Tree, std::string>>(std::move(table));
  Alphabet copy = alphabet;
  return LanguageOracle(std::move(alphabet), [shared, fallback, copy = std::move(copy)](const Tree& t) {
    const auto it = shared->find(t);
    if (it != shared->end()) return it->second;
    if (fallback) return *fallback;
    throw SemanticError("table oracle is undefined on " + render_tree(copy, t));
  });
}

namespace {

// Computes, for any tree, its vector of outputs under the observation set.
class Observer {
 public:
  Observer(const LanguageOracle& language, std::size_t ctx_height, const NerodeOptions& options)
      : language_(language), algebra_(options.use_algebra ? language.algebra() : nullptr) {
    if (algebra_) {
      build_behaviours(ctx_height, options);
    } else {
      contexts_ = enumerate_contexts(language.alphabet(), ctx_height, options.single_hole, options.limits);
    }
  }

  [[nodiscard]] const std::vector<Context>& contexts() const noexcept { return contexts_; }

  [[nodiscard]] std::vector<std::uint32_t> row(const Tree& t) {
    if (algebra_) {
      const StateId q = eval(*algebra_, t);
      auto& cached = by_state_[q];
      if (!cached) {
        std::vector<std::uint32_t> r;
        r.reserve(behaviours_.size());
        for (const auto& f : behaviours_) r.push_back(algebra_->out(f[q]));
        cached = std::move(r);
      }
      return *cached;
    }
    std::vector<std::uint32_t> r;
    r.reserve(contexts_.size());
    for (const auto& c : contexts_) r.push_back(intern(language_(plug(c, t))));
    return r;
  }

  [[nodiscard]] std::vector<std::string> names(const std::vector<std::uint32_t>& row) const {
    std::vector<std::string> out;
    out.reserve(row.size());
    for (const auto id : row) out.push_back(algebra_ ? algebra_->outputs()[id] : values_[id]);
    return out;
  }

 private:
  std::uint32_t intern(const std::string& value) {
    const auto [it, inserted] = ids_.emplace(value, static_cast<std::uint32_t>(values_.size()));
    if (inserted) values_.push_back(value);
    return it->second;
  }

  // Each context acts on states as q -> state reached with every hole at q.
  // Saturating these transformers by height yields exactly the behaviours of
  // the contexts of bounded height, with one witness context for each.
  void build_behaviours(std::size_t ctx_height, const NerodeOptions& options) {
    const Dfta& a = *algebra_;
    const std::size_t n = a.state_count();
    by_state_.assign(n, std::nullopt);
    struct Entry {
      std::vector<StateId> f;
      std::uint8_t holes;  // saturates at 2
      Tree witness;
    };
    std::vector<Entry> entries;
    std::set<std::pair<std::vector<StateId>, std::uint8_t>> seen;
    const auto add = [&](std::vector<StateId> f, std::uint8_t holes, Tree witness) {
      if (seen.emplace(f, holes).second) {
        if (entries.size() >= options.limits.max_count) {
          throw ResourceLimitError("context behaviours exceed the cap of " +
                                   std::to_string(options.limits.max_count));
        }
        entries.push_back(Entry{std::move(f), holes, std::move(witness)});
      }
    };

    std::vector<StateId> identity(n);
    for (StateId q = 0; q < n; ++q) identity[q] = q;
    add(identity, 1, Tree::hole());
    for (LeafId l = 0; l < a.frontier().size(); ++l) add(std::vector<StateId>(n, a.init(l)), 0, Tree::leaf(l));
    for (SymbolId s = 0; s < a.sig().size(); ++s) {
      if (a.sig()[s].arity == 0) add(std::vector<StateId>(n, a.step(s, {})), 0, Tree::node(s));
    }
    std::vector<StateId> args;
    for (std::size_t h = 1; h <= ctx_height; ++h) {
      const std::size_t m = entries.size();
      for (SymbolId s = 0; s < a.sig().size(); ++s) {
        const unsigned k = a.sig()[s].arity;
        if (k == 0) continue;
        args.resize(k);
        for_each_tuple<std::size_t>(m, k, [&](std::span<const std::size_t> idx) {
          std::vector<StateId> f(n);
          unsigned holes = 0;
          for (const std::size_t i : idx) holes += entries[i].holes;
          for (StateId q = 0; q < n; ++q) {
            for (unsigned j = 0; j < k; ++j) args[j] = entries[idx[j]].f[q];
            f[q] = a.step(s, args);
          }
          const auto capped = static_cast<std::uint8_t>(std::min(holes, 2U));
          if (seen.count({f, capped})) return;
          std::vector<Tree> children;
          for (const std::size_t i : idx) children.push_back(entries[i].witness);
          add(std::move(f), capped, Tree::node(s, std::move(children)));
        });
      }
    }
    for (auto& e : entries) {
      if (e.holes == 0 || (options.single_hole && e.holes != 1)) continue;
      behaviours_.push_back(std::move(e.f));
      contexts_.push_back(Context{std::move(e.witness)});
    }
  }

  const LanguageOracle& language_;
  const Dfta* algebra_;
  std::vector<Context> contexts_;
  std::vector<std::vector<StateId>> behaviours_;
  std::vector<std::optional<std::vector<std::uint32_t>>> by_state_;
  std::map<std::string, std::uint32_t> ids_;
  std::vector<std::string> values_;
};

std::string first_difference(const Alphabet& alphabet, const NerodeTable& table,
                             const std::vector<std::string>& lhs, const std::vector<std::string>& rhs) {
  for (std::size_t i = 0; i < lhs.size() && i < rhs.size(); ++i) {
    if (lhs[i] != rhs[i]) return render_context(alphabet, table.contexts[i]);
  }
  return "?";
}

}  // namespace

NerodeTable nerode_classes(const LanguageOracle& language, std::size_t tree_height, std::size_t ctx_height,
                           NerodeOptions options) {
  NerodeTable table;
  table.tree_height = tree_height;
  table.ctx_height = ctx_height;
  table.single_hole = options.single_hole;
  table.trees = enumerate_trees(language.alphabet(), tree_height, options.limits);

  Observer observer(language, ctx_height, options);
  std::map<std::vector<std::uint32_t>, std::uint32_t> class_by_row;
  table.class_of.reserve(table.trees.size());
  for (std::size_t i = 0; i < table.trees.size(); ++i) {
    auto row = observer.row(table.trees[i]);
    const auto [it, inserted] = class_by_row.emplace(row, static_cast<std::uint32_t>(table.representative.size()));
    if (inserted) {
      table.representative.push_back(i);
      table.rows.push_back(observer.names(row));
    }
    table.class_of.push_back(it->second);
  }
  table.contexts = observer.contexts();
  return table;
}

Dfta synthesise(const LanguageOracle& language, const NerodeTable& table) {
  const Alphabet& alphabet = language.alphabet();
  const std::size_t m = table.class_count();
  std::map<Tree, std::size_t> index;
  for (std::size_t i = 0; i < table.trees.size(); ++i) index.emplace(table.trees[i], i);
  const auto render = [&](const Tree& t) { return render_tree(alphabet, t); };
  const auto rep = [&](std::size_t c) -> const Tree& { return table.trees[table.representative[c]]; };

  std::vector<std::string> values;
  std::vector<OutputId> out;
  for (std::size_t c = 0; c < m; ++c) {
    const std::string value = language(rep(c));
    auto it = std::find(values.begin(), values.end(), value);
    if (it == values.end()) it = values.insert(values.end(), value);
    out.push_back(static_cast<OutputId>(it - values.begin()));
  }
  for (std::size_t i = 0; i < table.trees.size(); ++i) {
    const auto c = table.class_of[i];
    if (language(table.trees[i]) != values[out[c]]) {
      throw InsufficientHeightError("inconsistent table: " + render(table.trees[i]) + " and " + render(rep(c)) +
                                    " share a class but have different outputs");
    }
  }

  std::vector<StateId> init;
  for (LeafId l = 0; l < alphabet.fr.size(); ++l) init.push_back(table.class_of[index.at(Tree::leaf(l))]);

  std::vector<std::vector<StateId>> trans(alphabet.sig.size());
  for (SymbolId s = 0; s < alphabet.sig.size(); ++s) {
    const unsigned k = alphabet.sig[s].arity;
    for_each_tuple<std::size_t>(m, k, [&](std::span<const std::size_t> classes) {
      std::vector<Tree> children;
      for (const std::size_t c : classes) children.push_back(rep(c));
      const Tree composite = Tree::node(s, std::move(children));
      const auto it = index.find(composite);
      if (it == index.end()) {
        throw InsufficientHeightError("table not closed: " + render(composite) + " exceeds tree height " +
                                      std::to_string(table.tree_height));
      }
      trans[s].push_back(table.class_of[it->second]);
    });
  }

  // Every composite of table trees must land where the representatives do.
  std::size_t lower = 0;
  while (lower < table.trees.size() && table.trees[lower].height() + 1 <= table.tree_height) ++lower;
  std::vector<std::size_t> classes;
  for (SymbolId s = 0; s < alphabet.sig.size(); ++s) {
    const unsigned k = alphabet.sig[s].arity;
    if (k == 0) continue;
    classes.resize(k);
    for_each_tuple<std::size_t>(lower, k, [&](std::span<const std::size_t> idx) {
      std::vector<Tree> children;
      for (unsigned j = 0; j < k; ++j) {
        children.push_back(table.trees[idx[j]]);
        classes[j] = table.class_of[idx[j]];
      }
      const Tree composite = Tree::node(s, std::move(children));
      const auto actual = table.class_of[index.at(composite)];
      const auto expected = trans[s][tuple_index(std::span<const std::size_t>(classes), m)];
      if (actual != expected) {
        throw InsufficientHeightError("class split: " + render(composite) + " falls in class " +
                                      std::to_string(actual) + " but its representatives give class " +
                                      std::to_string(expected) + "; separated by context " +
                                      first_difference(alphabet, table, table.rows[actual], table.rows[expected]));
      }
    });
  }

  std::vector<std::string> names;
  for (std::size_t c = 0; c < m; ++c) names.push_back("c" + std::to_string(c));
  return Dfta(alphabet, OutputSet(std::move(values)), std::move(names), std::move(init), std::move(trans),
              std::move(out));
}

Dfta minimal_from_oracle(const LanguageOracle& language, std::size_t tree_height, std::size_t ctx_height,
                         NerodeOptions options) {
  return synthesise(language, nerode_classes(language, tree_height, ctx_height, options));
}

bool syntactic_equiv(const WordOracle& language, std::string_view alphabet, std::string_view u, std::string_view v,
                     std::size_t max_len) {
  for (const std::string_view word : {u, v}) {
    for (const char c : word) {
      if (alphabet.find(c) == std::string_view::npos) {
        throw SemanticError(std::string("letter '") + c + "' is not in the alphabet");
      }
    }
  }
  std::vector<std::string> words{""};
  for (std::size_t len = 1, from = 0; len <= max_len; ++len) {
    const std::size_t to = words.size();
    for (std::size_t i = from; i < to; ++i) {
      for (const char c : alphabet) words.push_back(words[i] + c);
    }
    from = to;
  }
  for (const auto& w : words) {
    for (const auto& x : words) {
      if (language(w + std::string(u) + x) != language(w + std::string(v) + x)) return false;
    }
  }
  return true;
}

}  // namespace treealg
