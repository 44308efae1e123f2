#include "treealg/dfta.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "treealg/error.hpp"
#include "treealg/tuples.hpp"

namespace treealg {

Dfta::Dfta(Alphabet alphabet, OutputSet outputs, std::vector<std::string> state_names, std::vector<StateId> init,
           std::vector<std::vector<StateId>> trans, std::vector<OutputId> out)
    : alphabet_(std::move(alphabet)),
      outputs_(std::move(outputs)),
      names_(std::move(state_names)),
      init_(std::move(init)),
      trans_(std::move(trans)),
      out_(std::move(out)) {
  const std::size_t n = names_.size();
  if (n == 0) throw SemanticError("automaton has no states");
  std::unordered_set<std::string_view> seen;
  for (const auto& name : names_) {
    if (!is_valid_token(name)) throw SemanticError("state name '" + name + "' is not a valid token");
    if (!seen.insert(name).second) throw SemanticError("duplicate state '" + name + "'");
  }
  if (init_.size() != alphabet_.fr.size()) throw SemanticError("init map must cover every frontier leaf");
  for (const StateId q : init_) {
    if (q >= n) throw SemanticError("init refers to a nonexistent state");
  }
  if (out_.size() != n) throw SemanticError("out map must cover every state");
  for (const OutputId o : out_) {
    if (o >= outputs_.size()) throw SemanticError("out refers to a nonexistent output value");
  }
  if (trans_.size() != alphabet_.sig.size()) throw SemanticError("one transition table per symbol required");
  for (SymbolId s = 0; s < trans_.size(); ++s) {
    const std::size_t rows = checked_power(n, alphabet_.sig[s].arity);
    if (trans_[s].size() != rows) {
      throw SemanticError("transition table for '" + alphabet_.sig[s].name + "' is not total");
    }
    for (const StateId q : trans_[s]) {
      if (q >= n) throw SemanticError("transition of '" + alphabet_.sig[s].name + "' targets a nonexistent state");
    }
  }
}

std::optional<StateId> Dfta::find_state(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<StateId>(it - names_.begin());
}

StateId Dfta::step(SymbolId sym, std::span<const StateId> args) const {
  return trans_[sym][tuple_index(args, names_.size())];
}

StateId eval(const Dfta& a, const Tree& t) {
  switch (t.kind()) {
    case Tree::Kind::hole:
      throw SemanticError("cannot evaluate a tree containing a hole");
    case Tree::Kind::leaf:
      if (t.leaf_id() >= a.frontier().size()) throw SemanticError("leaf outside the automaton's frontier");
      return a.init(t.leaf_id());
    case Tree::Kind::node: {
      if (t.symbol() >= a.sig().size()) throw SemanticError("symbol outside the automaton's signature");
      const auto children = t.children();
      if (children.size() != a.sig()[t.symbol()].arity) {
        throw SemanticError("arity mismatch for '" + a.sig()[t.symbol()].name + "'");
      }
      std::vector<StateId> args;
      args.reserve(children.size());
      for (const auto& c : children) args.push_back(eval(a, c));
      return a.step(t.symbol(), args);
    }
  }
  return 0;
}

const std::string& output_of(const Dfta& a, const Tree& t) { return a.output_name(eval(a, t)); }

std::vector<StateId> discovery_order(const Dfta& a) {
  const std::size_t n = a.state_count();
  std::vector<StateId> order;
  std::vector<bool> seen(n, false);
  const auto visit = [&](StateId q) {
    if (!seen[q]) {
      seen[q] = true;
      order.push_back(q);
    }
  };
  for (LeafId l = 0; l < a.frontier().size(); ++l) visit(a.init(l));
  for (SymbolId s = 0; s < a.sig().size(); ++s) {
    if (a.sig()[s].arity == 0) visit(a.step(s, {}));
  }
  std::vector<StateId> args;
  std::size_t before = 0;
  while (before != order.size()) {
    before = order.size();
    for (SymbolId s = 0; s < a.sig().size(); ++s) {
      const unsigned k = a.sig()[s].arity;
      if (k == 0) continue;
      args.resize(k);
      for_each_tuple<std::size_t>(before, k, [&](std::span<const std::size_t> idx) {
        for (unsigned j = 0; j < k; ++j) args[j] = order[idx[j]];
        visit(a.step(s, args));
      });
    }
  }
  return order;
}

std::vector<StateId> reachable_states(const Dfta& a) {
  auto states = discovery_order(a);
  std::sort(states.begin(), states.end());
  return states;
}

bool is_reachable(const Dfta& a) { return discovery_order(a).size() == a.state_count(); }

Dfta permute_states(const Dfta& a, std::span<const StateId> order) {
  // `order` may be a proper subset as long as it is closed under transitions.
  const std::size_t n = a.state_count();
  const std::size_t m = order.size();
  constexpr StateId none = static_cast<StateId>(-1);
  std::vector<StateId> renumber(n, none);
  for (std::size_t j = 0; j < m; ++j) renumber[order[j]] = static_cast<StateId>(j);

  std::vector<std::string> names;
  std::vector<OutputId> out;
  for (const StateId q : order) {
    names.push_back(a.state_name(q));
    out.push_back(a.out(q));
  }
  std::vector<StateId> init;
  for (const StateId q : a.init_map()) {
    if (renumber[q] == none) throw SemanticError("state selection is not closed under init");
    init.push_back(renumber[q]);
  }
  std::vector<std::vector<StateId>> trans(a.sig().size());
  std::vector<StateId> args;
  for (SymbolId s = 0; s < a.sig().size(); ++s) {
    const unsigned k = a.sig()[s].arity;
    args.resize(k);
    for_each_tuple<StateId>(m, k, [&](std::span<const StateId> idx) {
      for (unsigned j = 0; j < k; ++j) args[j] = order[idx[j]];
      const StateId target = renumber[a.step(s, args)];
      if (target == none) throw SemanticError("state selection is not closed under transitions");
      trans[s].push_back(target);
    });
  }
  return Dfta(a.alphabet(), a.outputs(), std::move(names), std::move(init), std::move(trans), std::move(out));
}

Dfta trim_reachable(const Dfta& a) {
  const auto states = reachable_states(a);
  return permute_states(a, states);
}

bool outputs_surjective(const Dfta& a) {
  std::vector<bool> hit(a.outputs().size(), false);
  for (const OutputId o : a.out_map()) hit[o] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Dfta restrict_outputs(const Dfta& a) {
  std::vector<bool> hit(a.outputs().size(), false);
  for (const OutputId o : a.out_map()) hit[o] = true;
  std::vector<std::string> values;
  std::vector<OutputId> renumber(a.outputs().size(), 0);
  for (OutputId o = 0; o < hit.size(); ++o) {
    if (!hit[o]) continue;
    renumber[o] = static_cast<OutputId>(values.size());
    values.push_back(a.outputs()[o]);
  }
  std::vector<OutputId> out;
  for (const OutputId o : a.out_map()) out.push_back(renumber[o]);
  std::vector<std::vector<StateId>> trans;
  for (SymbolId s = 0; s < a.sig().size(); ++s) trans.emplace_back(a.table(s).begin(), a.table(s).end());
  return Dfta(a.alphabet(), OutputSet(std::move(values)),
              std::vector<std::string>(a.state_names().begin(), a.state_names().end()),
              std::vector<StateId>(a.init_map().begin(), a.init_map().end()), std::move(trans), std::move(out));
}

Dfta canonicalise(const Dfta& a) {
  const auto order = discovery_order(a);
  if (order.size() != a.state_count()) throw SemanticError("canonical numbering requires a reachable automaton");
  return permute_states(a, order);
}

namespace {

void require_same_alphabet(const Dfta& a, const Dfta& b) {
  if (!(a.alphabet() == b.alphabet())) throw SemanticError("automata have incompatible alphabets");
}

struct Witness {
  Tree tree;
  std::string text;
};

}  // namespace

std::optional<Counterexample> equiv(const Dfta& a, const Dfta& b) {
  require_same_alphabet(a, b);
  const Alphabet& alphabet = a.alphabet();
  const std::size_t nb = b.state_count();
  const auto pair_of = [nb](StateId p, StateId q) { return static_cast<std::size_t>(p) * nb + q; };

  // Pairs found so far, in discovery order, with their minimal-height witness.
  std::vector<std::optional<Witness>> witness(a.state_count() * nb);
  std::vector<std::pair<StateId, StateId>> found;

  // Candidates of the current round keyed by pair; the smallest text wins.
  std::map<std::size_t, Witness> round;
  const auto offer = [&](StateId p, StateId q, Tree t) {
    const std::size_t key = pair_of(p, q);
    if (witness[key]) return;
    std::string text = render_tree(alphabet, t);
    auto it = round.find(key);
    if (it == round.end()) {
      round.emplace(key, Witness{std::move(t), std::move(text)});
    } else if (text < it->second.text) {
      it->second = Witness{std::move(t), std::move(text)};
    }
  };
  const auto close_round = [&]() -> std::optional<Counterexample> {
    const Witness* best = nullptr;
    std::size_t best_key = 0;
    for (auto& [key, w] : round) {
      const auto p = static_cast<StateId>(key / nb);
      const auto q = static_cast<StateId>(key % nb);
      if (a.output_name(p) != b.output_name(q) && (!best || w.text < best->text)) {
        best = &w;
        best_key = key;
      }
    }
    if (best) {
      const auto p = static_cast<StateId>(best_key / nb);
      const auto q = static_cast<StateId>(best_key % nb);
      return Counterexample{best->tree, a.output_name(p), b.output_name(q)};
    }
    for (auto& [key, w] : round) {
      found.emplace_back(static_cast<StateId>(key / nb), static_cast<StateId>(key % nb));
      witness[key] = std::move(w);
    }
    round.clear();
    return std::nullopt;
  };

  for (LeafId l = 0; l < alphabet.fr.size(); ++l) offer(a.init(l), b.init(l), Tree::leaf(l));
  for (SymbolId s = 0; s < alphabet.sig.size(); ++s) {
    if (alphabet.sig[s].arity == 0) offer(a.step(s, {}), b.step(s, {}), Tree::node(s));
  }
  if (auto cex = close_round()) return cex;

  std::size_t lower = 0;  // pairs found before the previous round
  std::vector<StateId> args_a;
  std::vector<StateId> args_b;
  while (lower != found.size()) {
    const std::size_t upto = found.size();
    for (SymbolId s = 0; s < alphabet.sig.size(); ++s) {
      const unsigned k = alphabet.sig[s].arity;
      if (k == 0) continue;
      args_a.resize(k);
      args_b.resize(k);
      for_each_tuple<std::size_t>(upto, k, [&](std::span<const std::size_t> idx) {
        if (std::none_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= lower; })) return;
        for (unsigned j = 0; j < k; ++j) {
          args_a[j] = found[idx[j]].first;
          args_b[j] = found[idx[j]].second;
        }
        const StateId p = a.step(s, args_a);
        const StateId q = b.step(s, args_b);
        if (witness[pair_of(p, q)]) return;
        std::vector<Tree> children;
        children.reserve(k);
        for (unsigned j = 0; j < k; ++j) children.push_back(witness[pair_of(args_a[j], args_b[j])]->tree);
        offer(p, q, Tree::node(s, std::move(children)));
      });
    }
    lower = upto;
    if (auto cex = close_round()) return cex;
  }
  return std::nullopt;
}

std::optional<std::vector<StateId>> isomorphic(const Dfta& a, const Dfta& b) {
  require_same_alphabet(a, b);
  if (!is_reachable(a) || !is_reachable(b)) throw SemanticError("isomorphism test requires reachable automata");
  const std::size_t n = a.state_count();
  if (n != b.state_count()) return std::nullopt;

  constexpr StateId none = static_cast<StateId>(-1);
  std::vector<StateId> h(n, none);
  bool consistent = true;
  const auto bind = [&](StateId p, StateId q) {
    if (h[p] == none) {
      h[p] = q;
      return true;
    }
    if (h[p] != q) consistent = false;
    return false;
  };

  for (LeafId l = 0; l < a.frontier().size(); ++l) bind(a.init(l), b.init(l));
  for (SymbolId s = 0; s < a.sig().size(); ++s) {
    if (a.sig()[s].arity == 0) bind(a.step(s, {}), b.step(s, {}));
  }
  std::vector<StateId> args_b;
  bool changed = true;
  while (consistent && changed) {
    changed = false;
    for (SymbolId s = 0; s < a.sig().size() && consistent; ++s) {
      const unsigned k = a.sig()[s].arity;
      if (k == 0) continue;
      args_b.resize(k);
      for_each_tuple<StateId>(n, k, [&](std::span<const StateId> args_a) {
        for (unsigned j = 0; j < k; ++j) {
          if (h[args_a[j]] == none) return;
          args_b[j] = h[args_a[j]];
        }
        if (bind(a.step(s, args_a), b.step(s, args_b))) changed = true;
      });
    }
  }
  if (!consistent) return std::nullopt;

  std::vector<bool> used(n, false);
  for (StateId p = 0; p < n; ++p) {
    if (h[p] == none || used[h[p]]) return std::nullopt;
    used[h[p]] = true;
    if (a.output_name(p) != b.output_name(h[p])) return std::nullopt;
  }
  return h;
}

}  // namespace treealg
