#include "treealg/nfta.hpp"

#include <algorithm>
#include <unordered_set>

#include "treealg/error.hpp"
#include "treealg/tuples.hpp"
#include "treealg/wfta.hpp"

namespace treealg {
namespace {

void normalise(StateSet& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

void check_members(const StateSet& set, std::size_t n, std::string_view where) {
  for (const StateId q : set) {
    if (q >= n) throw SemanticError(std::string(where) + " refers to a nonexistent state");
  }
}

}  // namespace

Nfta::Nfta(Alphabet alphabet, std::vector<std::string> state_names, std::vector<StateSet> init,
           std::vector<Relation> trans, StateSet final_states)
    : alphabet_(std::move(alphabet)),
      names_(std::move(state_names)),
      init_(std::move(init)),
      trans_(std::move(trans)),
      final_(std::move(final_states)) {
  const std::size_t n = names_.size();
  if (n == 0) throw SemanticError("automaton has no states");
  std::unordered_set<std::string_view> seen;
  for (const auto& name : names_) {
    if (!is_valid_token(name)) throw SemanticError("state name '" + name + "' is not a valid token");
    if (!seen.insert(name).second) throw SemanticError("duplicate state '" + name + "'");
  }
  if (init_.size() != alphabet_.fr.size()) throw SemanticError("init map must cover every frontier leaf");
  for (auto& set : init_) {
    normalise(set);
    check_members(set, n, "init");
  }
  if (trans_.size() != alphabet_.sig.size()) throw SemanticError("one transition relation per symbol required");
  for (SymbolId s = 0; s < trans_.size(); ++s) {
    for (auto& [args, targets] : trans_[s]) {
      if (args.size() != alphabet_.sig[s].arity) {
        throw SemanticError("transition of '" + alphabet_.sig[s].name + "' has the wrong number of arguments");
      }
      check_members(args, n, "transition");
      normalise(targets);
      check_members(targets, n, "transition");
    }
  }
  normalise(final_);
  check_members(final_, n, "final");
}

std::optional<StateId> Nfta::find_state(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<StateId>(it - names_.begin());
}

const StateSet& Nfta::targets(SymbolId sym, std::span<const StateId> args) const {
  static const StateSet empty;
  const auto& rel = trans_.at(sym);
  const auto it = rel.find(std::vector<StateId>(args.begin(), args.end()));
  return it == rel.end() ? empty : it->second;
}

std::vector<std::vector<StateId>> dlaw_pow(const Signature& sig, SymbolId sym, std::span<const StateSet> args) {
  if (sym >= sig.size()) throw SemanticError("unknown symbol id");
  const unsigned k = sig[sym].arity;
  if (args.size() != k) {
    throw SemanticError("'" + sig[sym].name + "' expects " + std::to_string(k) + " argument set(s)");
  }
  std::vector<std::vector<StateId>> tuples{{}};
  for (const auto& set : args) {
    std::vector<std::vector<StateId>> next;
    next.reserve(tuples.size() * set.size());
    for (const auto& prefix : tuples) {
      for (const StateId q : set) {
        auto extended = prefix;
        extended.push_back(q);
        next.push_back(std::move(extended));
      }
    }
    tuples = std::move(next);
  }
  return tuples;
}

StateSet nfta_eval(const Nfta& a, const Tree& t) {
  check_well_formed(a.alphabet(), t);
  if (t.is_leaf()) return a.init(t.leaf_id());
  std::vector<StateSet> children;
  for (const auto& c : t.children()) children.push_back(nfta_eval(a, c));
  StateSet result;
  for (const auto& tuple : dlaw_pow(a.sig(), t.symbol(), children)) {
    const auto& targets = a.targets(t.symbol(), tuple);
    result.insert(result.end(), targets.begin(), targets.end());
  }
  normalise(result);
  return result;
}

bool nfta_accepts(const Nfta& a, const Tree& t) {
  const StateSet reached = nfta_eval(a, t);
  const StateSet& final_states = a.final_states();
  return std::any_of(reached.begin(), reached.end(),
                     [&](StateId q) { return std::binary_search(final_states.begin(), final_states.end(), q); });
}

std::string format_state_set(const Nfta& a, const StateSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += a.state_name(set[i]);
  }
  return out + "}";
}

Dfta nfta_determinise(const Nfta& a, SubsetLimits limits) {
  std::vector<StateSet> subsets;
  std::map<StateSet, StateId> id_of;
  const auto intern = [&](StateSet set) {
    const auto [it, inserted] = id_of.emplace(set, static_cast<StateId>(subsets.size()));
    if (inserted) {
      if (subsets.size() >= limits.max_states) {
        throw ResourceLimitError("subset construction exceeds " + std::to_string(limits.max_states) + " states");
      }
      subsets.push_back(std::move(set));
    }
    return it->second;
  };
  // Image of a tuple of subsets under a symbol.
  const auto image = [&](SymbolId s, std::span<const StateId> subset_ids) {
    std::vector<StateSet> args;
    args.reserve(subset_ids.size());
    for (const StateId id : subset_ids) args.push_back(subsets[id]);
    StateSet result;
    for (const auto& tuple : dlaw_pow(a.sig(), s, args)) {
      const auto& targets = a.targets(s, tuple);
      result.insert(result.end(), targets.begin(), targets.end());
    }
    normalise(result);
    return result;
  };

  std::vector<StateId> init;
  for (LeafId l = 0; l < a.frontier().size(); ++l) init.push_back(intern(a.init(l)));
  for (SymbolId s = 0; s < a.sig().size(); ++s) {
    if (a.sig()[s].arity == 0) intern(image(s, {}));
  }
  std::size_t before = 0;
  while (before != subsets.size()) {
    before = subsets.size();
    for (SymbolId s = 0; s < a.sig().size(); ++s) {
      const unsigned k = a.sig()[s].arity;
      if (k == 0) continue;
      for_each_tuple<StateId>(before, k, [&](std::span<const StateId> ids) { intern(image(s, ids)); });
    }
  }

  const std::size_t m = subsets.size();
  std::vector<std::vector<StateId>> trans(a.sig().size());
  for (SymbolId s = 0; s < a.sig().size(); ++s) {
    for_each_tuple<StateId>(m, a.sig()[s].arity,
                            [&](std::span<const StateId> ids) { trans[s].push_back(id_of.at(image(s, ids))); });
  }
  std::vector<std::string> names;
  std::vector<OutputId> out;
  const StateSet& final_states = a.final_states();
  for (const auto& set : subsets) {
    std::string name = "[";
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i) name += '|';
      name += a.state_name(set[i]);
    }
    names.push_back(name + "]");
    const bool accepting = std::any_of(set.begin(), set.end(), [&](StateId q) {
      return std::binary_search(final_states.begin(), final_states.end(), q);
    });
    out.push_back(accepting ? 1 : 0);
  }
  return Dfta(a.alphabet(), OutputSet({"0", "1"}), std::move(names), std::move(init), std::move(trans),
              std::move(out));
}

Wfta<BooleanSemiring> as_weighted(const Nfta& a) {
  const std::size_t n = a.state_count();
  std::vector<WeightVector<BooleanSemiring>> init;
  for (LeafId l = 0; l < a.frontier().size(); ++l) {
    WeightVector<BooleanSemiring> v(n, false);
    for (const StateId q : a.init(l)) v[q] = true;
    init.push_back(std::move(v));
  }
  std::vector<std::vector<bool>> trans;
  for (SymbolId s = 0; s < a.sig().size(); ++s) {
    std::vector<bool> matrix(checked_power(n, a.sig()[s].arity) * n, false);
    for (const auto& [args, targets] : a.relation(s)) {
      const std::size_t row = tuple_index(std::span<const StateId>(args), n);
      for (const StateId q : targets) matrix[row * n + q] = true;
    }
    trans.push_back(std::move(matrix));
  }
  WeightVector<BooleanSemiring> out(n, false);
  for (const StateId q : a.final_states()) out[q] = true;
  return Wfta<BooleanSemiring>(a.alphabet(), std::vector<std::string>(a.state_names().begin(), a.state_names().end()),
                               std::move(init), std::move(trans), std::move(out));
}

}  // namespace treealg
