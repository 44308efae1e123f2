// treealg: command-line front-end for the tree automata library.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "treealg/dfta.hpp"
#include "treealg/error.hpp"
#include "treealg/nerode.hpp"
#include "treealg/nfta.hpp"
#include "treealg/partition.hpp"
#include "treealg/quotient.hpp"
#include "treealg/text_format.hpp"
#include "treealg/tree.hpp"
#include "treealg/wfta.hpp"

using namespace treealg;

namespace {

enum ExitCode : int {
  ok = 0,
  parse_failure = 1,
  semantic_failure = 2,
  resource_failure = 3,
  inequivalent = 4,
  insufficient_heights = 5,
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

const Alphabet& alphabet_of(const AnyAutomaton& a) {
  return std::visit([](const auto& x) -> const Alphabet& { return x.alphabet(); }, a);
}

Dfta require_dfta(const std::string& path) {
  auto a = parse_automaton(read_file(path));
  if (auto* d = std::get_if<Dfta>(&a)) return std::move(*d);
  throw SemanticError("'" + path + "' is not a dfta file");
}

// dfta as is; nfta through the subset construction.
Dfta as_dfta(const std::string& path, SubsetLimits limits) {
  auto a = parse_automaton(read_file(path));
  if (auto* d = std::get_if<Dfta>(&a)) return std::move(*d);
  if (auto* n = std::get_if<Nfta>(&a)) return nfta_determinise(*n, limits);
  throw SemanticError("'" + path + "' is weighted; equivalence needs a dfta or nfta");
}

int cmd_eval(const std::string& path, const std::string& literal) {
  const auto a = parse_automaton(read_file(path));
  const Tree t = parse_tree(literal, alphabet_of(a));
  std::visit(overloaded{
                 [&](const Dfta& d) { std::cout << d.state_name(eval(d, t)) << '\n'; },
                 [&](const Nfta& n) { std::cout << format_state_set(n, nfta_eval(n, t)) << '\n'; },
                 [&]<Semiring S>(const Wfta<S>& w) {
                   std::cout << format_weight_vector<S>(w.state_names(), wfta_eval(w, t)) << '\n';
                 },
             },
             a);
  return ok;
}

int cmd_accepts(const std::string& path, const std::string& literal) {
  const auto a = parse_automaton(read_file(path));
  const Tree t = parse_tree(literal, alphabet_of(a));
  std::visit(overloaded{
                 [&](const Dfta& d) { std::cout << output_of(d, t) << '\n'; },
                 [&](const Nfta& n) { std::cout << (nfta_accepts(n, t) ? "true" : "false") << '\n'; },
                 [&](const Wfta<BooleanSemiring>& w) { std::cout << (wfta_weight(w, t) ? "true" : "false") << '\n'; },
                 [&](const Wfta<RationalSemiring>&) {
                   throw SemanticError("'accepts' is undefined for rational weights; use 'weight'");
                 },
             },
             a);
  return ok;
}

int cmd_weight(const std::string& path, const std::string& literal) {
  const auto a = parse_automaton(read_file(path));
  const Tree t = parse_tree(literal, alphabet_of(a));
  std::visit(overloaded{
                 [&]<Semiring S>(const Wfta<S>& w) { std::cout << S::format(wfta_weight(w, t)) << '\n'; },
                 [&](const auto&) { throw SemanticError("'weight' needs a wfta file"); },
             },
             a);
  return ok;
}

int cmd_trim(const std::string& path) {
  std::cout << write_dfta(trim_reachable(require_dfta(path)));
  return ok;
}

int cmd_minimise(const std::string& path, bool emit_partition) {
  const Dfta input = restrict_outputs(trim_reachable(require_dfta(path)));
  const Minimisation m = minimise(input);
  if (emit_partition) std::cout << "# partition: " << format_partition(m.partition, input.state_names()) << '\n';
  std::cout << write_dfta(canonicalise(m.automaton));
  return ok;
}

int cmd_determinise(const std::string& path, std::size_t max_states) {
  const auto a = parse_automaton(read_file(path));
  const auto* n = std::get_if<Nfta>(&a);
  if (!n) throw SemanticError("'determinise' needs an nfta file");
  std::cout << write_dfta(nfta_determinise(*n, SubsetLimits{max_states}));
  return ok;
}

int cmd_equiv(const std::string& left, const std::string& right, std::size_t max_states) {
  const Dfta a = as_dfta(left, SubsetLimits{max_states});
  const Dfta b = as_dfta(right, SubsetLimits{max_states});
  const auto cex = equiv(a, b);
  if (!cex) {
    std::cout << "equivalent\n";
    return ok;
  }
  std::cout << "counterexample: " << render_tree(a.alphabet(), cex->tree) << ' ' << cex->left_output << ' '
            << cex->right_output << '\n';
  return inequivalent;
}

struct NerodeArgs {
  std::string path;
  std::size_t tree_height = 0;
  std::size_t ctx_height = 0;
  bool single_hole = false;
  bool enumerate_contexts = false;
  std::size_t max_trees = EnumerationLimits{}.max_count;
};

int cmd_nerode(const NerodeArgs& args) {
  const std::string text = read_file(args.path);
  const LanguageOracle language = [&] {
    if (sniff_kind(text) == "table") {
      auto table = parse_table(text);
      return LanguageOracle::from_table(table.alphabet, std::move(table.entries), std::move(table.fallback));
    }
    auto a = parse_automaton(text);
    auto* d = std::get_if<Dfta>(&a);
    if (!d) throw SemanticError("a nerode oracle must be a dfta or table file");
    return LanguageOracle::from_dfta(std::move(*d));
  }();
  NerodeOptions options;
  options.single_hole = args.single_hole;
  options.use_algebra = !args.enumerate_contexts;
  options.limits.max_count = args.max_trees;
  const NerodeTable table = nerode_classes(language, args.tree_height, args.ctx_height, options);
  const Dfta result = synthesise(language, table);
  std::cout << write_dfta(result);
  for (std::size_t k = 0; k < table.class_count(); ++k) {
    std::cout << "# class " << k << ": " << render_tree(language.alphabet(), table.trees[table.representative[k]])
              << '\n';
  }
  return ok;
}

int cmd_check(const std::string& path) {
  const std::string text = read_file(path);
  const std::string kind = sniff_kind(text);
  if (kind == "table") {
    const auto table = parse_table(text);
    std::cout << "ok: table, " << table.entries.size() << " entries\n";
    return ok;
  }
  const auto a = parse_automaton(text);
  const std::size_t states = std::visit([](const auto& x) { return x.state_count(); }, a);
  std::cout << "ok: " << kind << ", " << states << " states\n";
  return ok;
}

int cmd_simple(const std::string& path) {
  std::cout << (is_simple(require_dfta(path)) ? "true" : "false") << '\n';
  return ok;
}

int cmd_minimal(const std::string& path) {
  std::cout << (is_minimal(require_dfta(path)) ? "true" : "false") << '\n';
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bottom-up tree automata: evaluation, minimisation, determinisation, Nerode synthesis"};
  app.require_subcommand(1);

  std::string file;
  std::string second;
  std::string literal;
  bool emit_partition = false;
  std::size_t max_states = SubsetLimits{}.max_states;
  NerodeArgs nerode;

  const auto with_tree = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("file", file, "automaton file")->required();
    cmd->add_option("tree", literal, "tree literal, e.g. f(g(x),y)")->required();
    return cmd;
  };
  const auto with_file = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("file", file, "automaton file")->required();
    return cmd;
  };

  auto* eval_cmd = with_tree("eval", "print the state, state set or weight vector reached on a tree");
  auto* accepts_cmd = with_tree("accepts", "print the output (dfta) or acceptance (nfta, boolean wfta) of a tree");
  auto* weight_cmd = with_tree("weight", "print the weight a wfta assigns to a tree");
  auto* trim_cmd = with_file("trim", "drop unreachable states of a dfta");
  auto* minimise_cmd = with_file("minimise", "minimise a dfta (restrict outputs, trim, quotient)");
  minimise_cmd->add_flag("--emit-partition", emit_partition, "also print the state partition as a comment");
  auto* determinise_cmd = with_file("determinise", "subset construction of an nfta");
  determinise_cmd->add_option("--max-states", max_states, "cap on subset states")->capture_default_str();
  auto* equiv_cmd = with_file("equiv", "compare the languages of two dfta/nfta files");
  equiv_cmd->add_option("other", second, "second automaton file")->required();
  equiv_cmd->add_option("--max-states", max_states, "cap on subset states for nfta inputs")->capture_default_str();
  auto* nerode_cmd = app.add_subcommand("nerode", "synthesise the minimal dfta of a language from an oracle");
  nerode_cmd->add_option("file", nerode.path, "dfta or table file")->required();
  nerode_cmd->add_option("--tree-height", nerode.tree_height, "height bound on trees")->required();
  nerode_cmd->add_option("--ctx-height", nerode.ctx_height, "height bound on contexts")->required();
  nerode_cmd->add_flag("--single-hole", nerode.single_hole, "only contexts with exactly one hole");
  nerode_cmd->add_flag("--enumerate-contexts", nerode.enumerate_contexts,
                       "query the oracle on every context instead of evaluating contexts in the automaton");
  nerode_cmd->add_option("--max-trees", nerode.max_trees, "cap on enumerated trees and contexts")
      ->capture_default_str();
  auto* check_cmd = with_file("check", "validate an automaton or table file");
  auto* simple_cmd = with_file("simple", "print whether a dfta has no proper quotient");
  auto* minimal_cmd = with_file("minimal", "print whether a dfta is reachable and simple");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : parse_failure;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(file, literal);
    if (accepts_cmd->parsed()) return cmd_accepts(file, literal);
    if (weight_cmd->parsed()) return cmd_weight(file, literal);
    if (trim_cmd->parsed()) return cmd_trim(file);
    if (minimise_cmd->parsed()) return cmd_minimise(file, emit_partition);
    if (determinise_cmd->parsed()) return cmd_determinise(file, max_states);
    if (equiv_cmd->parsed()) return cmd_equiv(file, second, max_states);
    if (nerode_cmd->parsed()) return cmd_nerode(nerode);
    if (check_cmd->parsed()) return cmd_check(file);
    if (simple_cmd->parsed()) return cmd_simple(file);
    if (minimal_cmd->parsed()) return cmd_minimal(file);
  } catch (const AlphabetMismatchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return semantic_failure;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return parse_failure;
  } catch (const SemanticError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return semantic_failure;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return resource_failure;
  } catch (const InsufficientHeightError& e) {
    std::cerr << "insufficient heights: " << e.what() << '\n';
    return insufficient_heights;
  }
  return ok;
}
