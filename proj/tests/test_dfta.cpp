#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "treealg/dfta.hpp"
#include "treealg/enumerate.hpp"
#include "treealg/error.hpp"

using namespace treealg;

namespace {

Tree tree(std::string_view s) { return parse_tree(s, fixture::fg_xy()); }

std::vector<std::string> names(const Dfta& a) { return {a.state_names().begin(), a.state_names().end()}; }

}  // namespace

TEST_CASE("construction validates totality and ranges") {
  const Alphabet& ab = fixture::fg_xy();
  const OutputSet o({"0", "1"});
  CHECK_THROWS_AS(Dfta(ab, o, {"q0", "q1"}, {0, 1}, {{0, 1, 1}, {0, 1}}, {0, 1}), SemanticError);
  CHECK_THROWS_AS(Dfta(ab, o, {"q0", "q1"}, {0, 2}, {{0, 1, 1, 0}, {0, 1}}, {0, 1}), SemanticError);
  CHECK_THROWS_AS(Dfta(ab, o, {"q0", "q1"}, {0, 1}, {{0, 1, 1, 0}, {0, 1}}, {0, 2}), SemanticError);
  CHECK_THROWS_AS(Dfta(ab, o, {"q0", "q0"}, {0, 1}, {{0, 1, 1, 0}, {0, 1}}, {0, 1}), SemanticError);
  CHECK_THROWS_AS(Dfta(ab, o, {}, {}, {{}, {}}, {}), SemanticError);
}

TEST_CASE("eval and output_of on a0") {
  const Dfta a = fixture::a0();
  CHECK(a.state_name(eval(a, tree("x"))) == "q0");
  CHECK(a.state_name(eval(a, tree("f(x,y)"))) == "q1");
  CHECK(a.state_name(eval(a, tree("f(g(y),y)"))) == "q0");
  CHECK(output_of(a, tree("y")) == "1");
  CHECK(output_of(a, tree("f(x,x)")) == "0");
  CHECK(output_of(a, tree("f(f(y,y),y)")) == "1");
  const Alphabet other = oracle::make_alphabet({{"f", 2}}, {"x"});
  CHECK_THROWS_AS((void)eval(a, Tree::node(0, {Tree::leaf(0)})), SemanticError);
  (void)other;
}

TEST_CASE("eval agrees with the table-lookup evaluator on random automata") {
  oracle::Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    const Alphabet ab = oracle::random_alphabet(rng);
    const Dfta a = oracle::random_dfta(rng, ab, oracle::uniform(rng, 1, 5), 3);
    for (const auto& t : enumerate_trees(ab, 3)) REQUIRE(eval(a, t) == oracle::run(a, t));
  }
}

TEST_CASE("reachability") {
  CHECK(reachable_states(fixture::a0()) == std::vector<StateId>{0, 1});
  CHECK(reachable_states(fixture::a0_junk()) == std::vector<StateId>{0, 1});
  CHECK(is_reachable(fixture::a0()));
  CHECK_FALSE(is_reachable(fixture::a0_junk()));
  CHECK(discovery_order(fixture::a0_dup()) == std::vector<StateId>{0, 2, 1});
}

TEST_CASE("reachable states are exactly the states some tree reaches") {
  oracle::Rng rng(12);
  for (int i = 0; i < 40; ++i) {
    const Alphabet ab = oracle::random_alphabet(rng);
    const std::size_t n = oracle::uniform(rng, 1, 6);
    const Dfta a = oracle::random_dfta(rng, ab, n, 2);
    // Every reachable state is hit by a tree of height < n.
    const auto hit = oracle::states_hit(a, n - 1 > 3 ? 3 : n - 1);
    const auto reach = reachable_states(a);
    for (const StateId q : hit) CHECK(std::binary_search(reach.begin(), reach.end(), q));
    if (n <= 4) CHECK(std::vector<StateId>(hit.begin(), hit.end()) == reach);
  }
}

TEST_CASE("trim_reachable") {
  const Dfta a = fixture::a0();
  CHECK(trim_reachable(a) == a);
  const Dfta t = trim_reachable(fixture::a0_junk());
  CHECK(t.state_count() == 2);
  CHECK(isomorphic(t, a));
}

TEST_CASE("trim preserves the language") {
  oracle::Rng rng(13);
  for (int i = 0; i < 30; ++i) {
    const Alphabet ab = oracle::random_alphabet(rng);
    const Dfta a = oracle::random_dfta(rng, ab, oracle::uniform(rng, 1, 6), 2);
    const Dfta t = trim_reachable(a);
    CHECK(is_reachable(t));
    CHECK_FALSE(oracle::first_difference(a, t, 3));
  }
}

TEST_CASE("restrict_outputs") {
  CHECK(restrict_outputs(fixture::a0()) == fixture::a0());
  const Dfta wide = fixture::a0({"0", "1", "2"}, {0, 1});
  CHECK_FALSE(outputs_surjective(wide));
  const Dfta r = restrict_outputs(wide);
  CHECK(std::vector<std::string>(r.outputs().values().begin(), r.outputs().values().end()) ==
        std::vector<std::string>{"0", "1"});
  CHECK(outputs_surjective(r));
  CHECK_FALSE(oracle::first_difference(wide, r, 3));
}

TEST_CASE("equiv examples") {
  CHECK_FALSE(equiv(fixture::a0(), fixture::a0()));
  const auto cex = equiv(fixture::a0(), fixture::a0_swapped());
  REQUIRE(cex);
  CHECK(render_tree(fixture::fg_xy(), cex->tree) == "x");
  CHECK(cex->left_output == "0");
  CHECK(cex->right_output == "1");
  CHECK_FALSE(equiv(fixture::a0(), fixture::a0_dup()));
  CHECK_FALSE(equiv(fixture::a0(), fixture::a0_junk()));
  const Dfta other(oracle::make_alphabet({{"f", 2}}, {"x"}), OutputSet({"0"}), {"q"}, {0}, {{0}}, {0});
  CHECK_THROWS_AS((void)equiv(fixture::a0(), other), SemanticError);
}

TEST_CASE("equiv agrees with exhaustive comparison and gives a minimal-height witness") {
  oracle::Rng rng(14);
  int differing = 0;
  for (int i = 0; i < 60; ++i) {
    const Alphabet ab = oracle::random_alphabet(rng);
    const Dfta a = oracle::random_dfta(rng, ab, oracle::uniform(rng, 1, 3), 2);
    const Dfta b = i % 3 == 0 ? oracle::duplicate_with_junk(rng, a, 2, 1)
                              : oracle::random_dfta(rng, ab, oracle::uniform(rng, 1, 3), 2);
    // Product of at most 3x6 states: differences show up below height 18,
    // and in practice far lower; height 3 is exhaustive enough to see them.
    const auto diff = oracle::first_difference(a, b, 3);
    const auto cex = equiv(a, b);
    if (!cex) {
      CHECK_FALSE(diff);
      continue;
    }
    ++differing;
    CHECK(oracle::language(a, cex->tree) == cex->left_output);
    CHECK(oracle::language(b, cex->tree) == cex->right_output);
    CHECK(cex->left_output != cex->right_output);
    if (diff) {
      CHECK(cex->tree.height() == diff->height());
    } else {
      CHECK(cex->tree.height() > 3);
    }
  }
  CHECK(differing > 10);
}

TEST_CASE("isomorphic") {
  const Dfta a = fixture::a0();
  const auto id = isomorphic(a, a);
  REQUIRE(id);
  CHECK(*id == std::vector<StateId>{0, 1});
  const Dfta renamed(fixture::fg_xy(), OutputSet({"0", "1"}), {"p", "r"}, {1, 0}, {{1, 0, 0, 1}, {0, 1}}, {1, 0});
  const auto map = isomorphic(a, renamed);
  REQUIRE(map);
  CHECK(*map == std::vector<StateId>{1, 0});
  const Dfta one(fixture::fg_xy(), OutputSet({"0", "1"}), {"q"}, {0, 0}, {{0}, {0}}, {0});
  CHECK_FALSE(isomorphic(a, one));
  CHECK_FALSE(isomorphic(a, fixture::a0_swapped()));
}

TEST_CASE("canonicalise renumbers in discovery order") {
  const Dfta c = canonicalise(fixture::a0_dup());
  CHECK(names(c) == std::vector<std::string>{"q0", "q2", "q1"});
  CHECK(isomorphic(c, fixture::a0_dup()));
  CHECK_THROWS_AS((void)canonicalise(fixture::a0_junk()), SemanticError);
  oracle::Rng rng(15);
  for (int i = 0; i < 20; ++i) {
    const Alphabet ab = oracle::random_alphabet(rng);
    const Dfta a = trim_reachable(oracle::random_dfta(rng, ab, 4, 2));
    const Dfta b = oracle::duplicate_with_junk(rng, a, 1, 0);  // a shuffled copy
    CHECK(canonicalise(a).table(0).size() == canonicalise(b).table(0).size());
    const Dfta ca = canonicalise(a);
    const Dfta cb = canonicalise(b);
    for (SymbolId s = 0; s < ab.sig.size(); ++s) {
      CHECK(std::equal(ca.table(s).begin(), ca.table(s).end(), cb.table(s).begin(), cb.table(s).end()));
    }
    CHECK(std::equal(ca.init_map().begin(), ca.init_map().end(), cb.init_map().begin()));
  }
}
