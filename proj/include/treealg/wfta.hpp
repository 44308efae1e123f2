#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treealg/alphabet.hpp"
#include "treealg/dfta.hpp"
#include "treealg/error.hpp"
#include "treealg/nfta.hpp"
#include "treealg/semiring.hpp"
#include "treealg/tree.hpp"
#include "treealg/tuples.hpp"

namespace treealg {

/// A map from states (or state tuples, after a Kronecker product) to weights.
template <Semiring S>
using WeightVector = std::vector<typename S::value_type>;

/// (v ⊗ w)(i, j) = v(i)·w(j), flattened with i most significant.
template <Semiring S>
[[nodiscard]] WeightVector<S> kron(const WeightVector<S>& v, const WeightVector<S>& w) {
  WeightVector<S> out;
  out.reserve(v.size() * w.size());
  for (const auto& x : v) {
    for (const auto& y : w) out.push_back(S::mul(x, y));
  }
  return out;
}

/// Left fold of kron starting from the one-dimensional unit vector.
template <Semiring S>
[[nodiscard]] WeightVector<S> kron_all(std::span<const WeightVector<S>> vectors) {
  WeightVector<S> acc{S::one()};
  for (const auto& v : vectors) acc = kron<S>(acc, v);
  return acc;
}

/// Weighted bottom-up tree automaton over a semiring. The matrix of a
/// symbol of arity k has |Q|^k rows (argument tuples, mixed radix) and |Q|
/// columns (target state).
template <Semiring S>
class Wfta {
 public:
  using Weight = typename S::value_type;

  Wfta(Alphabet alphabet, std::vector<std::string> state_names, std::vector<WeightVector<S>> init,
       std::vector<std::vector<Weight>> trans, WeightVector<S> out)
      : alphabet_(std::move(alphabet)),
        names_(std::move(state_names)),
        init_(std::move(init)),
        trans_(std::move(trans)),
        out_(std::move(out)) {
    const std::size_t n = names_.size();
    if (n == 0) throw SemanticError("automaton has no states");
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_valid_token(names_[i])) throw SemanticError("state name '" + names_[i] + "' is not a valid token");
      for (std::size_t j = 0; j < i; ++j) {
        if (names_[i] == names_[j]) throw SemanticError("duplicate state '" + names_[i] + "'");
      }
    }
    if (init_.size() != alphabet_.fr.size()) throw SemanticError("init vectors must cover every frontier leaf");
    for (const auto& v : init_) {
      if (v.size() != n) throw SemanticError("init vector has the wrong dimension");
    }
    if (out_.size() != n) throw SemanticError("out vector has the wrong dimension");
    if (trans_.size() != alphabet_.sig.size()) throw SemanticError("one transition matrix per symbol required");
    for (SymbolId s = 0; s < trans_.size(); ++s) {
      const std::size_t rows = checked_power(n, alphabet_.sig[s].arity);
      if (rows == SIZE_MAX || trans_[s].size() != rows * n) {
        throw SemanticError("transition matrix for '" + alphabet_.sig[s].name + "' has the wrong shape");
      }
    }
  }

  [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] const Signature& sig() const noexcept { return alphabet_.sig; }
  [[nodiscard]] const Frontier& frontier() const noexcept { return alphabet_.fr; }
  [[nodiscard]] std::size_t state_count() const noexcept { return names_.size(); }
  [[nodiscard]] const std::string& state_name(StateId q) const { return names_.at(q); }
  [[nodiscard]] std::span<const std::string> state_names() const noexcept { return names_; }

  [[nodiscard]] const WeightVector<S>& init(LeafId leaf) const { return init_.at(leaf); }
  [[nodiscard]] const WeightVector<S>& out() const noexcept { return out_; }
  // decltype(auto): std::vector<bool> hands out values, not references.
  [[nodiscard]] decltype(auto) entry(SymbolId sym, std::size_t row, StateId target) const {
    return trans_[sym][row * names_.size() + target];
  }
  [[nodiscard]] const std::vector<Weight>& matrix(SymbolId sym) const { return trans_.at(sym); }

 private:
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::vector<WeightVector<S>> init_;
  std::vector<std::vector<Weight>> trans_;
  WeightVector<S> out_;
};

namespace detail {

template <Semiring S>
void check_tree(const Wfta<S>& a, const Tree& t) {
  check_well_formed(a.alphabet(), t);
}

template <Semiring S>
WeightVector<S> reach(const Wfta<S>& a, const Tree& t) {
  if (t.is_leaf()) return a.init(t.leaf_id());
  std::vector<WeightVector<S>> children;
  for (const auto& c : t.children()) children.push_back(reach(a, c));
  const WeightVector<S> tuple = kron_all<S>(std::span<const WeightVector<S>>(children));
  const std::size_t n = a.state_count();
  WeightVector<S> result(n, S::zero());
  for (std::size_t row = 0; row < tuple.size(); ++row) {
    if (S::equal(tuple[row], S::zero())) continue;
    for (StateId q = 0; q < n; ++q) {
      result[q] = S::add(result[q], S::mul(tuple[row], a.entry(t.symbol(), row, q)));
    }
  }
  return result;
}

}  // namespace detail

/// Reachability vector: the init vector at a leaf, otherwise the Kronecker
/// product of the children's vectors times the symbol's matrix.
template <Semiring S>
[[nodiscard]] WeightVector<S> wfta_eval(const Wfta<S>& a, const Tree& t) {
  detail::check_tree(a, t);
  return detail::reach(a, t);
}

template <Semiring S>
[[nodiscard]] typename S::value_type dot(const WeightVector<S>& v, const WeightVector<S>& w) {
  auto acc = S::zero();
  for (std::size_t i = 0; i < v.size() && i < w.size(); ++i) acc = S::add(acc, S::mul(v[i], w[i]));
  return acc;
}

/// Weight of `t`: its reachability vector dotted with the out vector.
template <Semiring S>
[[nodiscard]] typename S::value_type wfta_weight(const Wfta<S>& a, const Tree& t) {
  return dot<S>(wfta_eval(a, t), a.out());
}

struct RunOracleLimits {
  std::size_t max_labelings = 1'000'000;
};

/// Sum over every labelling of the nodes of `t` by states of the product of
/// local weights (init at leaves, matrix entries at symbols, out at the
/// root). Nodes are labelled in postorder so each local weight is charged as
/// soon as the node is labelled, and a branch is abandoned once its partial
/// product is zero. The cap counts visited labelling steps. Throws
/// ResourceLimitError past the cap.
template <Semiring S>
[[nodiscard]] typename S::value_type wfta_run_oracle(const Wfta<S>& a, const Tree& t, RunOracleLimits limits = {}) {
  using Weight = typename S::value_type;
  detail::check_tree(a, t);

  std::vector<const Tree*> nodes;
  std::vector<std::vector<std::size_t>> kids;
  std::function<std::size_t(const Tree&)> index = [&](const Tree& node) {
    std::vector<std::size_t> mine;
    for (const auto& c : node.children()) mine.push_back(index(c));
    nodes.push_back(&node);
    kids.push_back(std::move(mine));
    return nodes.size() - 1;
  };
  index(t);

  const std::size_t n = a.state_count();
  const std::size_t root = nodes.size() - 1;
  std::vector<StateId> label(nodes.size(), 0);
  std::size_t visited = 0;
  Weight total = S::zero();

  const auto local_weight = [&](std::size_t i) -> Weight {
    const Tree& node = *nodes[i];
    if (node.is_leaf()) return a.init(node.leaf_id())[label[i]];
    std::size_t row = 0;
    for (const std::size_t c : kids[i]) row = row * n + label[c];
    return a.entry(node.symbol(), row, label[i]);
  };

  std::function<void(std::size_t, const Weight&)> assign = [&](std::size_t i, const Weight& partial) {
    for (StateId q = 0; q < n; ++q) {
      if (++visited > limits.max_labelings) {
        throw ResourceLimitError("run enumeration exceeds " + std::to_string(limits.max_labelings) + " steps");
      }
      label[i] = q;
      const Weight w = S::mul(partial, local_weight(i));
      if (S::equal(w, S::zero())) continue;
      if (i == root) {
        total = S::add(total, S::mul(w, a.out()[q]));
      } else {
        assign(i + 1, w);
      }
    }
  };
  assign(0, S::one());
  return total;
}

/// The Boolean weighted automaton with the same relations as `a`.
[[nodiscard]] Wfta<BooleanSemiring> as_weighted(const Nfta& a);

/// `1 q0 + 0 q1`: every state listed, in state order.
template <Semiring S>
[[nodiscard]] std::string format_weight_vector(std::span<const std::string> names, const WeightVector<S>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " + ";
    out += S::format(v[i]) + " " + names[i];
  }
  return out;
}

}  // namespace treealg
