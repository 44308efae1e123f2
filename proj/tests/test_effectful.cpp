#include <doctest.h>

#include <set>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "treealg/error.hpp"
#include "treealg/nfta.hpp"
#include "treealg/quotient.hpp"
#include "treealg/rational.hpp"
#include "treealg/semiring.hpp"
#include "treealg/wfta.hpp"

using namespace treealg;
using R = Rational;
using RS = RationalSemiring;

namespace {

std::vector<std::string> names(const Dfta& a) { return {a.state_names().begin(), a.state_names().end()}; }

// Alphabets whose trees of height 4 stay below ~3.5e4.
Alphabet det_alphabet(oracle::Rng& rng) {
  static const std::vector<Alphabet> choices = {
      oracle::make_alphabet({{"f", 2}}, {"x"}),
      oracle::make_alphabet({{"f", 2}, {"g", 1}}, {"x"}),
      oracle::make_alphabet({{"g", 1}, {"h", 1}}, {"x", "y"}),
  };
  return choices[oracle::uniform(rng, 0, choices.size() - 1)];
}

WeightVector<RS> vec(std::initializer_list<R> xs) { return WeightVector<RS>(xs); }

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(R(2, 4) == R(1, 2));
  CHECK(R(1, -2).to_string() == "-1/2");
  CHECK(R(6, 3).to_string() == "2");
  CHECK(R(1, 3) + R(1, 6) == R(1, 2));
  CHECK(R(2, 3) * R(3, 4) == R(1, 2));
  CHECK(R(1, 2) - R(1, 2) == R(0));
  CHECK((R(1, 2) / R(1, 4)) == R(2));
  CHECK_THROWS_AS((void)(R(1) / R(0)), SemanticError);
  CHECK(R::parse("-3/9") == R(-1, 3));
  CHECK(R::parse("7") == R(7));
  CHECK(R::parse("12/4").denominator() == "1");
  CHECK_THROWS_AS((void)R::parse("1/0"), ParseError);
  CHECK_THROWS_AS((void)R::parse("1/"), ParseError);
  CHECK_THROWS_AS((void)R::parse("x"), ParseError);
  CHECK_THROWS_AS((void)R::parse(""), ParseError);
  CHECK(R(1, 3) < R(1, 2));
  // No overflow: (2/3)^200 keeps exact numerator and denominator.
  R p(1);
  for (int i = 0; i < 200; ++i) p *= R(2, 3);
  CHECK(p.numerator().size() > 50);
  CHECK(R::parse(p.to_string()) == p);
}

TEST_CASE("semiring laws hold on samples") {
  const std::vector<R> rs = {R(0), R(1), R(-1), R(1, 2), R(-2, 3), R(5, 7)};
  CHECK_FALSE(semiring_law_violation<RS>(rs));
  const bool bs[] = {false, true};
  CHECK_FALSE(semiring_law_violation<BooleanSemiring>(bs));
  CHECK(BooleanSemiring::parse("true"));
  CHECK_FALSE(BooleanSemiring::parse("0"));
  CHECK_THROWS_AS((void)BooleanSemiring::parse("2"), ParseError);
}

TEST_CASE("dlaw_pow") {
  const Signature sig({{"f", 2}, {"g", 1}});
  const std::vector<StateSet> g_args = {{0, 1}};
  CHECK(dlaw_pow(sig, 1, g_args) == std::vector<std::vector<StateId>>{{0}, {1}});
  const std::vector<StateSet> f_args = {{0}, {0, 1}};
  CHECK(dlaw_pow(sig, 0, f_args) == std::vector<std::vector<StateId>>{{0, 0}, {0, 1}});
  const std::vector<StateSet> empty = {{}, {0, 1}};
  CHECK(dlaw_pow(sig, 0, empty).empty());
  CHECK_THROWS_AS((void)dlaw_pow(sig, 0, g_args), SemanticError);
}

TEST_CASE("kron") {
  CHECK(kron<RS>(vec({1, 0}), vec({0, 1})) == vec({0, 1, 0, 0}));
  CHECK(kron<RS>(vec({R(1, 2), R(1, 2)}), vec({0, 0})) == vec({0, 0, 0, 0}));
  CHECK(kron<RS>(vec({R(1, 2), R(1, 2)}), vec({R(1, 3), R(2, 3)}))[1] == R(1, 3));
}

TEST_CASE("kron laws on random vectors") {
  oracle::Rng rng(41);
  const auto random_vec = [&](std::size_t n) {
    WeightVector<RS> v(n);
    for (auto& x : v) x = oracle::random_rational(rng);
    return v;
  };
  const auto add = [](const WeightVector<RS>& a, const WeightVector<RS>& b) {
    WeightVector<RS> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
  };
  for (int i = 0; i < 50; ++i) {
    const auto v = random_vec(oracle::uniform(rng, 1, 4));
    const auto w = random_vec(oracle::uniform(rng, 1, 4));
    const auto u = random_vec(w.size());
    CHECK(kron<RS>(vec({1}), v) == v);
    CHECK(kron<RS>(v, vec({1})) == v);
    CHECK(kron<RS>(v, add(w, u)) == add(kron<RS>(v, w), kron<RS>(v, u)));
    CHECK(kron<RS>(add(w, u), v) == add(kron<RS>(w, v), kron<RS>(u, v)));
    CHECK(kron<RS>(kron<RS>(v, w), u) == kron<RS>(v, kron<RS>(w, u)));
    const std::vector<WeightVector<RS>> all = {v, w, u};
    CHECK(kron_all<RS>(all) == kron<RS>(kron<RS>(v, w), u));
  }
}

TEST_CASE("nfta evaluation on n0") {
  const Nfta n = fixture::n0();
  const Alphabet& ab = n.alphabet();
  CHECK(nfta_eval(n, parse_tree("x", ab)) == StateSet{0, 1});
  CHECK(nfta_eval(n, parse_tree("f(x,x)", ab)) == StateSet{0, 1});
  CHECK(format_state_set(n, {0, 1}) == "{q0,q1}");
  CHECK(nfta_accepts(n, parse_tree("x", ab)));
  CHECK(nfta_accepts(n, parse_tree("f(x,x)", ab)));
  const Nfta dead = fixture::n0({}, {1});
  for (const auto& t : enumerate_trees(ab, 3)) CHECK(nfta_eval(dead, t).empty());
  const Nfta no_final = fixture::n0({0, 1}, {});
  for (const auto& t : enumerate_trees(ab, 3)) CHECK_FALSE(nfta_accepts(no_final, t));
}

TEST_CASE("nfta construction normalises and validates") {
  const Alphabet ab = oracle::make_alphabet({{"g", 1}}, {"x"});
  Nfta::Relation g;
  g[{0}] = {1, 0, 1};
  const Nfta n(ab, {"a", "b"}, {{1, 1}}, {g}, {1, 0});
  CHECK(n.init(0) == StateSet{1});
  CHECK(n.targets(0, std::vector<StateId>{0}) == StateSet{0, 1});
  CHECK(n.targets(0, std::vector<StateId>{1}).empty());
  CHECK(n.final_states() == StateSet{0, 1});
  Nfta::Relation bad;
  bad[{0}] = {2};
  CHECK_THROWS_AS(Nfta(ab, {"a", "b"}, {{0}}, {bad}, {}), SemanticError);
  Nfta::Relation wrong_arity;
  wrong_arity[{0, 0}] = {0};
  CHECK_THROWS_AS(Nfta(ab, {"a", "b"}, {{0}}, {wrong_arity}, {}), SemanticError);
}

TEST_CASE("nfta_eval matches the tuple-scanning reference") {
  oracle::Rng rng(42);
  for (int i = 0; i < 30; ++i) {
    const Alphabet ab = det_alphabet(rng);
    const Nfta n = oracle::random_nfta(rng, ab, oracle::uniform(rng, 1, 3), 0.4);
    for (const auto& t : enumerate_trees(ab, 3)) {
      const auto expected = oracle::nfta_reach(n, t);
      REQUIRE(nfta_eval(n, t) == StateSet(expected.begin(), expected.end()));
    }
  }
}

TEST_CASE("determinising n0") {
  const Nfta n = fixture::n0();
  const Dfta d = nfta_determinise(n);
  // Reachable subsets by brute force: the distinct reach sets of all trees.
  std::set<std::set<StateId>> subsets;
  for (const auto& t : enumerate_trees(n.alphabet(), 4)) subsets.insert(oracle::nfta_reach(n, t));
  CHECK(d.state_count() == subsets.size());
  CHECK(d.state_count() == 1);  // f maps {q0,q1}x{q0,q1} back onto {q0,q1}
  CHECK(names(d) == std::vector<std::string>{"[q0|q1]"});
  for (const auto& t : enumerate_trees(n.alphabet(), 4)) CHECK((output_of(d, t) == "1") == nfta_accepts(n, t));

  const Dfta empty = nfta_determinise(fixture::n0({}, {1}));
  CHECK(names(empty) == std::vector<std::string>{"[]"});
  CHECK(empty.output_name(0) == "0");

  // Starting from {q0} and {q1} separately gives three subsets.
  const Alphabet two = oracle::make_alphabet({{"f", 2}}, {"x", "y"});
  Nfta::Relation f;
  f[{0, 0}] = {0};
  f[{1, 1}] = {1};
  const Nfta split(two, {"q0", "q1"}, {{0}, {1}}, {f}, {1});
  CHECK(names(nfta_determinise(split)) == std::vector<std::string>{"[q0]", "[q1]", "[]"});
}

TEST_CASE("determinising a deterministic nfta gives singletons") {
  const Dfta a = fixture::a0();
  std::vector<Nfta::Relation> trans(2);
  for (SymbolId s = 0; s < 2; ++s) {
    for_each_tuple<StateId>(2, a.sig()[s].arity, [&](std::span<const StateId> args) {
      trans[s][std::vector<StateId>(args.begin(), args.end())] = {a.step(s, args)};
    });
  }
  const Nfta n(a.alphabet(), {"q0", "q1"}, {{0}, {1}}, trans, {1});
  const Dfta d = nfta_determinise(n);
  CHECK(names(d) == std::vector<std::string>{"[q0]", "[q1]"});
  CHECK(isomorphic(d, a));
}

TEST_CASE("subset construction respects its cap") {
  const Alphabet ab = oracle::make_alphabet({{"d0", 1}, {"d1", 1}, {"d2", 1}, {"d3", 1}}, {"x"});
  std::vector<Nfta::Relation> trans(4);
  for (StateId i = 0; i < 4; ++i) {
    for (StateId j = 0; j < 4; ++j) {
      if (i != j) trans[i][{j}] = {j};
    }
  }
  const Nfta n(ab, {"a", "b", "c", "d"}, {{0, 1, 2, 3}}, trans, {0});
  CHECK(nfta_determinise(n).state_count() == 16);
  CHECK_THROWS_AS((void)nfta_determinise(n, SubsetLimits{15}), ResourceLimitError);
}

TEST_CASE("determinisation agrees with acceptance; determinise then minimise keeps the language") {
  oracle::Rng rng(43);
  for (int i = 0; i < 30; ++i) {
    const Alphabet ab = det_alphabet(rng);
    const Nfta n = oracle::random_nfta(rng, ab, oracle::uniform(rng, 1, 3), 0.35);
    const Dfta d = nfta_determinise(n);
    CHECK(is_reachable(d));
    for (const auto& t : enumerate_trees(ab, 3)) REQUIRE((output_of(d, t) == "1") == oracle::nfta_language(n, t));
    const Dfta m = minimise(restrict_outputs(trim_reachable(d))).automaton;
    CHECK_FALSE(equiv(m, d));
    CHECK(m.state_count() <= d.state_count());
  }
}

TEST_CASE("weighted evaluation on w0") {
  const auto w = fixture::w0();
  const Alphabet& ab = w.alphabet();
  CHECK(wfta_eval(w, parse_tree("x", ab)) == vec({1, 0}));
  CHECK(wfta_eval(w, parse_tree("f(x,x)", ab)) == vec({0, 1}));
  CHECK(wfta_eval(w, parse_tree("f(f(x,x),f(x,x))", ab)) == vec({1, 0}));
  CHECK(wfta_weight(w, parse_tree("x", ab)) == R(0));
  CHECK(wfta_weight(w, parse_tree("f(x,x)", ab)) == R(1));
  CHECK(wfta_run_oracle(w, parse_tree("x", ab)) == R(0));
  CHECK(wfta_run_oracle(w, parse_tree("f(x,x)", ab)) == R(1));
  CHECK(format_weight_vector<RS>(w.state_names(), vec({0, 1})) == "0 q0 + 1 q1");
}

TEST_CASE("nullary symbols read their matrix row") {
  const Alphabet ab = oracle::make_alphabet({{"c", 0}, {"g", 1}}, {"x"});
  const Wfta<RS> w(ab, {"q0", "q1"}, {vec({1, 0})}, {{R(2), R(1, 3)}, {R(1), R(0), R(0), R(1)}}, vec({1, 1}));
  CHECK(wfta_eval(w, parse_tree("c", ab)) == vec({2, R(1, 3)}));
  CHECK(wfta_weight(w, parse_tree("g(c)", ab)) == R(7, 3));
  CHECK(wfta_run_oracle(w, parse_tree("g(c)", ab)) == R(7, 3));
}

TEST_CASE("zero out vector gives zero everywhere; a leaf weighs init . out") {
  oracle::Rng rng(44);
  const Alphabet ab = oracle::make_alphabet({{"f", 2}, {"g", 1}}, {"x", "y"});
  const auto w = oracle::random_wfta(rng, ab, 3, 0.5);
  const Wfta<RS> silent(ab, {"q0", "q1", "q2"}, {w.init(0), w.init(1)}, {w.matrix(0), w.matrix(1)}, vec({0, 0, 0}));
  for (const auto& t : enumerate_trees(ab, 2)) CHECK(wfta_weight(silent, t) == R(0));
  for (LeafId l = 0; l < 2; ++l) {
    R expected(0);
    for (StateId q = 0; q < 3; ++q) expected += w.init(l)[q] * w.out()[q];
    CHECK(wfta_weight(w, Tree::leaf(l)) == expected);
    CHECK(wfta_run_oracle(w, Tree::leaf(l)) == expected);
  }
}

TEST_CASE("weights equal run sums on random automata") {
  oracle::Rng rng(45);
  for (int i = 0; i < 20; ++i) {
    const Alphabet ab = det_alphabet(rng);
    const auto w = oracle::random_wfta(rng, ab, oracle::uniform(rng, 1, 3), 0.35);
    for (const auto& t : enumerate_trees(ab, 2)) REQUIRE(wfta_weight(w, t) == wfta_run_oracle(w, t));
  }
}

TEST_CASE("run oracle guard") {
  const Alphabet ab = oracle::make_alphabet({{"g", 1}}, {"x"});
  const Wfta<RS> dense(ab, {"a", "b", "c"}, {vec({1, 1, 1})}, {std::vector<R>(9, R(1))}, vec({1, 1, 1}));
  Tree t = Tree::leaf(0);
  for (int i = 0; i < 20; ++i) t = Tree::node(0, {t});
  CHECK_THROWS_AS((void)wfta_run_oracle(dense, t, RunOracleLimits{1000}), ResourceLimitError);
  CHECK(wfta_weight(dense, t) == R(10460353203L));  // 3^21 runs of weight 1
}

TEST_CASE("Boolean weights reproduce nondeterministic acceptance") {
  oracle::Rng rng(46);
  for (int i = 0; i < 30; ++i) {
    const Alphabet ab = det_alphabet(rng);
    const Nfta n = oracle::random_nfta(rng, ab, oracle::uniform(rng, 1, 3), 0.35);
    const auto w = as_weighted(n);
    for (const auto& t : enumerate_trees(ab, 3)) {
      const bool accepted = oracle::nfta_language(n, t);
      REQUIRE(wfta_weight(w, t) == accepted);
      if (t.height() <= 2) REQUIRE(wfta_run_oracle(w, t) == accepted);
    }
  }
}

TEST_CASE("wfta construction validates shapes") {
  const Alphabet ab = oracle::make_alphabet({{"f", 2}}, {"x"});
  CHECK_THROWS_AS(Wfta<RS>(ab, {"q0", "q1"}, {vec({1, 0})}, {std::vector<R>(7, R(0))}, vec({0, 1})), SemanticError);
  CHECK_THROWS_AS(Wfta<RS>(ab, {"q0", "q1"}, {vec({1})}, {std::vector<R>(8, R(0))}, vec({0, 1})), SemanticError);
  CHECK_THROWS_AS(Wfta<RS>(ab, {"q0", "q1"}, {}, {std::vector<R>(8, R(0))}, vec({0, 1})), SemanticError);
}
