#pragma once
// Hand-built automata used across the tests.

#include "support/oracles.hpp"

namespace fixture {

using namespace treealg;

inline const Alphabet& fg_xy() {
  static const Alphabet a = oracle::make_alphabet({{"f", 2}, {"g", 1}}, {"x", "y"});
  return a;
}

// Parity of y leaves: init x->q0, y->q1; g keeps the state; f is xor.
inline Dfta a0(std::vector<std::string> outputs = {"0", "1"}, std::vector<OutputId> out = {0, 1}) {
  return Dfta(fg_xy(), OutputSet(std::move(outputs)), {"q0", "q1"}, {0, 1}, {{0, 1, 1, 0}, {0, 1}}, std::move(out));
}

inline Dfta a0_swapped() { return a0({"0", "1"}, {1, 0}); }

// a0 plus an unreachable q2 that f and g leave alone.
inline Dfta a0_junk() {
  return Dfta(fg_xy(), OutputSet({"0", "1"}), {"q0", "q1", "q2"}, {0, 1},
              {{0, 1, 2, 1, 0, 2, 2, 2, 2}, {0, 1, 2}}, {0, 1, 0});
}

// a0 with q1 split into q1 and its twin q2 (same out, rows equal up to the
// twin); y reaches q2, so all three states are reachable.
inline Dfta a0_dup() {
  return Dfta(fg_xy(), OutputSet({"0", "1"}), {"q0", "q1", "q2"}, {0, 2},
              {{0, 1, 2, 2, 0, 0, 1, 0, 0}, {0, 2, 1}}, {0, 1, 1});
}

inline Nfta n0(StateSet init = {0, 1}, StateSet final_states = {1}) {
  const Alphabet a = oracle::make_alphabet({{"f", 2}}, {"x"});
  Nfta::Relation f;
  f[{0, 0}] = {0};
  f[{1, 1}] = {1};
  return Nfta(a, {"q0", "q1"}, {std::move(init)}, {f}, std::move(final_states));
}

inline Wfta<RationalSemiring> w0() {
  const Alphabet a = oracle::make_alphabet({{"f", 2}}, {"x"});
  using R = Rational;
  // Rows (q0,q0) (q0,q1) (q1,q0) (q1,q1); columns q0 q1.
  std::vector<R> f = {R(0), R(1), R(0), R(0), R(0), R(0), R(1), R(0)};
  return Wfta<RationalSemiring>(a, {"q0", "q1"}, {{R(1), R(0)}}, {f}, {R(0), R(1)});
}

}  // namespace fixture
