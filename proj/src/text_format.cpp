#include "treealg/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <vector>

#include "treealg/error.hpp"
#include "treealg/tuples.hpp"

namespace treealg {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) words.push_back(s.substr(start, i - start));
  }
  return words;
}

struct Line {
  std::size_t number = 0;
  std::string_view text;
};

[[noreturn]] void parse_fail(const Line& line, const std::string& msg) {
  throw ParseError("line " + std::to_string(line.number) + ": " + msg);
}

[[noreturn]] void semantic_fail(const Line& line, const std::string& msg) {
  throw SemanticError("line " + std::to_string(line.number) + ": " + msg);
}

struct RawFile {
  std::string kind;
  std::string kind_arg;
  Line kind_line;
  std::map<std::string, Line, std::less<>> fields;
  std::vector<Line> body;
};

std::vector<Line> meaningful_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    std::string_view raw = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) lines.push_back(Line{number, raw});
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

RawFile split_file(std::string_view text, const std::set<std::string, std::less<>>& keys, std::string_view body_key) {
  const auto lines = meaningful_lines(text);
  if (lines.empty()) throw ParseError("empty file");
  RawFile file;
  file.kind_line = lines.front();
  const auto head = split_ws(lines.front().text);
  file.kind = std::string(head[0]);
  if (head.size() > 2) parse_fail(lines.front(), "unexpected text after the file kind");
  if (head.size() == 2) file.kind_arg = std::string(head[1]);
  bool in_body = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto colon = line.text.find(':');
    if (colon == std::string_view::npos) {
      if (!in_body) parse_fail(line, "expected 'key: value'");
      file.body.push_back(line);
      continue;
    }
    const std::string_view key = trim(line.text.substr(0, colon));
    const std::string_view value = trim(line.text.substr(colon + 1));
    if (!keys.count(key) && key != body_key) parse_fail(line, "unknown key '" + std::string(key) + "'");
    if (file.fields.count(key)) parse_fail(line, "duplicate '" + std::string(key) + ":' line");
    file.fields.emplace(std::string(key), Line{line.number, value});
    if (key == body_key) {
      if (!value.empty()) parse_fail(line, "'" + std::string(body_key) + ":' takes no value on its own line");
      in_body = true;
    }
  }
  return file;
}

const Line& require(const RawFile& file, std::string_view key) {
  const auto it = file.fields.find(key);
  if (it == file.fields.end()) throw ParseError("missing '" + std::string(key) + ":' line");
  return it->second;
}

void require_name(const Line& line, std::string_view name, std::string_view what) {
  if (!is_valid_token(name)) parse_fail(line, "invalid " + std::string(what) + " name '" + std::string(name) + "'");
}

Alphabet read_alphabet(const RawFile& file) {
  const Line& sig_line = require(file, "sig");
  std::vector<Symbol> symbols;
  for (const auto word : split_ws(sig_line.text)) {
    const auto slash = word.rfind('/');
    if (slash == std::string_view::npos) parse_fail(sig_line, "expected name/arity, got '" + std::string(word) + "'");
    const auto name = word.substr(0, slash);
    const auto arity = word.substr(slash + 1);
    require_name(sig_line, name, "symbol");
    if (arity.empty() || arity.size() > 3 ||
        !std::all_of(arity.begin(), arity.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      parse_fail(sig_line, "invalid arity in '" + std::string(word) + "'");
    }
    symbols.push_back(Symbol{std::string(name), static_cast<unsigned>(std::stoul(std::string(arity)))});
  }
  const Line& fr_line = require(file, "frontier");
  std::vector<std::string> leaves;
  for (const auto word : split_ws(fr_line.text)) {
    require_name(fr_line, word, "leaf");
    leaves.emplace_back(word);
  }
  if (leaves.empty()) parse_fail(fr_line, "frontier must list at least one leaf");
  try {
    return Alphabet(Signature(std::move(symbols)), Frontier(std::move(leaves)));
  } catch (const SemanticError& e) {
    semantic_fail(sig_line, e.what());
  }
}

std::vector<std::string> read_names(const RawFile& file, std::string_view key, std::string_view what) {
  const Line& line = require(file, key);
  std::vector<std::string> names;
  for (const auto word : split_ws(line.text)) {
    require_name(line, word, what);
    if (std::find(names.begin(), names.end(), word) != names.end()) {
      semantic_fail(line, "duplicate " + std::string(what) + " '" + std::string(word) + "'");
    }
    names.emplace_back(word);
  }
  if (names.empty()) parse_fail(line, "at least one " + std::string(what) + " required");
  return names;
}

// `lhs -> rhs ; lhs -> rhs`
std::vector<std::pair<std::string_view, std::string_view>> read_arrows(const Line& line) {
  std::vector<std::pair<std::string_view, std::string_view>> out;
  for (const auto part : split(line.text, ';')) {
    if (part.empty()) continue;
    const auto arrow = part.find("->");
    if (arrow == std::string_view::npos) parse_fail(line, "expected 'a -> b' in '" + std::string(part) + "'");
    out.emplace_back(trim(part.substr(0, arrow)), trim(part.substr(arrow + 2)));
  }
  return out;
}

class StateIndex {
 public:
  explicit StateIndex(const std::vector<std::string>& names) {
    for (StateId q = 0; q < names.size(); ++q) ids_.emplace(names[q], q);
  }
  [[nodiscard]] StateId at(const Line& line, std::string_view name) const {
    const auto it = ids_.find(name);
    if (it == ids_.end()) semantic_fail(line, "unknown state '" + std::string(name) + "'");
    return it->second;
  }
  [[nodiscard]] std::size_t size() const noexcept { return ids_.size(); }

 private:
  std::map<std::string, StateId, std::less<>> ids_;
};

LeafId leaf_at(const Alphabet& alphabet, const Line& line, std::string_view name) {
  const auto leaf = alphabet.fr.find(name);
  if (!leaf) semantic_fail(line, "'" + std::string(name) + "' is not a frontier leaf");
  return *leaf;
}

struct TransitionLine {
  Line line;
  SymbolId symbol;
  std::vector<StateId> args;
  std::string_view rhs;
};

std::vector<TransitionLine> read_transitions(const RawFile& file, const Alphabet& alphabet, const StateIndex& states) {
  std::vector<TransitionLine> out;
  for (const Line& line : file.body) {
    const auto arrow = line.text.find("->");
    if (arrow == std::string_view::npos) parse_fail(line, "expected 'sym(args) -> target'");
    const std::string_view lhs = trim(line.text.substr(0, arrow));
    const std::string_view rhs = trim(line.text.substr(arrow + 2));
    std::string_view name = lhs;
    std::vector<std::string_view> arg_names;
    if (const auto open = lhs.find('('); open != std::string_view::npos) {
      if (lhs.back() != ')') parse_fail(line, "unbalanced parentheses");
      name = trim(lhs.substr(0, open));
      const std::string_view inner = trim(lhs.substr(open + 1, lhs.size() - open - 2));
      if (!inner.empty()) arg_names = split(inner, ',');
      for (const auto a : arg_names) {
        if (a.empty()) parse_fail(line, "empty argument");
        require_name(line, a, "state");
      }
    }
    require_name(line, name, "symbol");
    const auto sym = alphabet.sig.find(name);
    if (!sym) semantic_fail(line, "unknown symbol '" + std::string(name) + "'");
    if (arg_names.size() != alphabet.sig[*sym].arity) {
      semantic_fail(line, "arity mismatch: '" + std::string(name) + "' expects " +
                              std::to_string(alphabet.sig[*sym].arity) + " argument(s)");
    }
    TransitionLine t{line, *sym, {}, rhs};
    for (const auto a : arg_names) t.args.push_back(states.at(line, a));
    out.push_back(std::move(t));
  }
  return out;
}

std::string render_lhs(const Alphabet& alphabet, SymbolId s, std::span<const StateId> args,
                       std::span<const std::string> names) {
  std::string text = alphabet.sig[s].name;
  if (args.empty()) return text;
  text += '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) text += ',';
    text += names[args[i]];
  }
  return text + ')';
}

std::string alphabet_header(const Alphabet& alphabet) {
  std::string out = "sig:";
  for (const auto& s : alphabet.sig.symbols()) out += " " + s.name + "/" + std::to_string(s.arity);
  out += "\nfrontier:";
  for (const auto& l : alphabet.fr.leaves()) out += " " + l;
  return out + "\n";
}

std::string join_names(std::span<const std::string> names) {
  std::string out;
  for (const auto& n : names) out += " " + n;
  return out;
}

// `{q0,q1}`
StateSet read_set(const Line& line, std::string_view text, const StateIndex& states) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    parse_fail(line, "expected a state set '{...}', got '" + std::string(text) + "'");
  }
  StateSet set;
  const std::string_view inner = trim(text.substr(1, text.size() - 2));
  if (inner.empty()) return set;
  for (const auto name : split(inner, ',')) {
    if (name.empty()) parse_fail(line, "empty set member");
    set.push_back(states.at(line, name));
  }
  return set;
}

// `1/2 q0 + 1 q1`; unlisted states weigh zero.
template <Semiring S>
WeightVector<S> read_sum(const Line& line, std::string_view text, const StateIndex& states) {
  WeightVector<S> v(states.size(), S::zero());
  std::vector<bool> seen(states.size(), false);
  if (trim(text).empty()) return v;
  for (const auto term : split(text, '+')) {
    const auto words = split_ws(term);
    if (words.size() != 2) parse_fail(line, "expected 'weight state', got '" + std::string(term) + "'");
    typename S::value_type w;
    try {
      w = S::parse(words[0]);
    } catch (const ParseError& e) {
      parse_fail(line, e.what());
    }
    const StateId q = states.at(line, words[1]);
    if (seen[q]) semantic_fail(line, "state '" + std::string(words[1]) + "' listed twice");
    seen[q] = true;
    v[q] = w;
  }
  return v;
}

Dfta build_dfta(const RawFile& file) {
  const Alphabet alphabet = read_alphabet(file);
  const auto output_values = read_names(file, "outputs", "output");
  const auto names = read_names(file, "states", "state");
  const StateIndex states(names);
  const std::size_t n = names.size();

  const Line& init_line = require(file, "init");
  constexpr StateId none = static_cast<StateId>(-1);
  std::vector<StateId> init(alphabet.fr.size(), none);
  for (const auto& [lhs, rhs] : read_arrows(init_line)) {
    const LeafId l = leaf_at(alphabet, init_line, lhs);
    if (init[l] != none) semantic_fail(init_line, "init defined twice for '" + std::string(lhs) + "'");
    init[l] = states.at(init_line, rhs);
  }
  for (LeafId l = 0; l < init.size(); ++l) {
    if (init[l] == none) semantic_fail(init_line, "init undefined for leaf '" + alphabet.fr[l] + "'");
  }

  const Line& out_line = require(file, "out");
  const OutputSet outputs(output_values);
  constexpr OutputId no_output = static_cast<OutputId>(-1);
  std::vector<OutputId> out(n, no_output);
  for (const auto& [lhs, rhs] : read_arrows(out_line)) {
    const StateId q = states.at(out_line, lhs);
    const auto o = outputs.find(rhs);
    if (!o) semantic_fail(out_line, "'" + std::string(rhs) + "' is not a declared output");
    if (out[q] != no_output) semantic_fail(out_line, "out defined twice for '" + std::string(lhs) + "'");
    out[q] = *o;
  }
  for (StateId q = 0; q < n; ++q) {
    if (out[q] == no_output) semantic_fail(out_line, "out undefined for state '" + names[q] + "'");
  }

  std::vector<std::vector<StateId>> trans(alphabet.sig.size());
  for (SymbolId s = 0; s < alphabet.sig.size(); ++s) {
    const std::size_t rows = checked_power(n, alphabet.sig[s].arity);
    if (rows > 10'000'000) throw SemanticError("transition table for '" + alphabet.sig[s].name + "' is too large");
    trans[s].assign(rows, none);
  }
  for (const auto& t : read_transitions(file, alphabet, states)) {
    auto& slot = trans[t.symbol][tuple_index(std::span<const StateId>(t.args), n)];
    if (slot != none) semantic_fail(t.line, "duplicate transition");
    slot = states.at(t.line, t.rhs);
  }
  for (SymbolId s = 0; s < alphabet.sig.size(); ++s) {
    std::optional<std::string> missing;
    for_each_tuple<StateId>(n, alphabet.sig[s].arity, [&](std::span<const StateId> args) {
      if (!missing && trans[s][tuple_index(args, n)] == none) missing = render_lhs(alphabet, s, args, names);
    });
    if (missing) throw SemanticError("transition " + *missing + " undefined; dfta tables must be total");
  }
  return Dfta(alphabet, outputs, names, std::move(init), std::move(trans), std::move(out));
}

Nfta build_nfta(const RawFile& file) {
  const Alphabet alphabet = read_alphabet(file);
  const auto names = read_names(file, "states", "state");
  const StateIndex states(names);

  std::vector<StateSet> init(alphabet.fr.size());
  std::vector<bool> defined(alphabet.fr.size(), false);
  const Line& init_line = require(file, "init");
  for (const auto& [lhs, rhs] : read_arrows(init_line)) {
    const LeafId l = leaf_at(alphabet, init_line, lhs);
    if (defined[l]) semantic_fail(init_line, "init defined twice for '" + std::string(lhs) + "'");
    defined[l] = true;
    init[l] = read_set(init_line, rhs, states);
  }

  const Line& final_line = require(file, "final");
  StateSet final_states;
  std::string_view final_text = final_line.text;
  if (!final_text.empty() && final_text.front() == '{') {
    final_states = read_set(final_line, final_text, states);
  } else {
    for (const auto name : split_ws(final_text)) final_states.push_back(states.at(final_line, name));
  }

  std::vector<Nfta::Relation> trans(alphabet.sig.size());
  for (const auto& t : read_transitions(file, alphabet, states)) {
    if (!trans[t.symbol].emplace(t.args, read_set(t.line, t.rhs, states)).second) {
      semantic_fail(t.line, "duplicate transition");
    }
  }
  return Nfta(alphabet, names, std::move(init), std::move(trans), std::move(final_states));
}

template <Semiring S>
Wfta<S> build_wfta(const RawFile& file) {
  const Alphabet alphabet = read_alphabet(file);
  const auto names = read_names(file, "states", "state");
  const StateIndex states(names);
  const std::size_t n = names.size();

  std::vector<WeightVector<S>> init(alphabet.fr.size(), WeightVector<S>(n, S::zero()));
  std::vector<bool> defined(alphabet.fr.size(), false);
  const Line& init_line = require(file, "init");
  for (const auto& [lhs, rhs] : read_arrows(init_line)) {
    const LeafId l = leaf_at(alphabet, init_line, lhs);
    if (defined[l]) semantic_fail(init_line, "init defined twice for '" + std::string(lhs) + "'");
    defined[l] = true;
    init[l] = read_sum<S>(init_line, rhs, states);
  }
  const Line& out_line = require(file, "out");
  WeightVector<S> out = read_sum<S>(out_line, out_line.text, states);

  std::vector<std::vector<typename S::value_type>> trans(alphabet.sig.size());
  for (SymbolId s = 0; s < alphabet.sig.size(); ++s) {
    const std::size_t rows = checked_power(n, alphabet.sig[s].arity);
    if (rows > 1'000'000) throw SemanticError("transition matrix for '" + alphabet.sig[s].name + "' is too large");
    trans[s].assign(rows * n, S::zero());
  }
  std::vector<std::set<std::size_t>> seen(alphabet.sig.size());
  for (const auto& t : read_transitions(file, alphabet, states)) {
    const std::size_t row = tuple_index(std::span<const StateId>(t.args), n);
    if (!seen[t.symbol].insert(row).second) semantic_fail(t.line, "duplicate transition");
    const auto weights = read_sum<S>(t.line, t.rhs, states);
    for (StateId q = 0; q < n; ++q) trans[t.symbol][row * n + q] = weights[q];
  }
  return Wfta<S>(alphabet, names, std::move(init), std::move(trans), std::move(out));
}

const std::set<std::string, std::less<>> dfta_keys{"sig", "frontier", "outputs", "states", "init", "out"};
const std::set<std::string, std::less<>> nfta_keys{"sig", "frontier", "states", "init", "final"};
const std::set<std::string, std::less<>> wfta_keys{"sig", "frontier", "states", "init", "out"};
const std::set<std::string, std::less<>> table_keys{"sig", "frontier", "default"};

void expect_kind(const RawFile& file, std::string_view kind) {
  if (file.kind != kind) parse_fail(file.kind_line, "expected a '" + std::string(kind) + "' file");
  if (!file.kind_arg.empty() && kind != "wfta") parse_fail(file.kind_line, "unexpected text after the file kind");
}

}  // namespace

std::string sniff_kind(std::string_view text) {
  const auto lines = meaningful_lines(text);
  if (lines.empty()) return {};
  return std::string(split_ws(lines.front().text).front());
}

AnyAutomaton parse_automaton(std::string_view text) {
  const std::string kind = sniff_kind(text);
  if (kind == "dfta") return parse_dfta(text);
  if (kind == "nfta") return parse_nfta(text);
  if (kind == "wfta") {
    const RawFile file = split_file(text, wfta_keys, "trans");
    if (file.kind_arg == "rational") return build_wfta<RationalSemiring>(file);
    if (file.kind_arg == "bool") return build_wfta<BooleanSemiring>(file);
    parse_fail(file.kind_line, "wfta needs a semiring: 'wfta rational' or 'wfta bool'");
  }
  if (kind.empty()) throw ParseError("empty file");
  throw ParseError("unknown automaton kind '" + kind + "'");
}

Dfta parse_dfta(std::string_view text) {
  const RawFile file = split_file(text, dfta_keys, "trans");
  expect_kind(file, "dfta");
  return build_dfta(file);
}

Nfta parse_nfta(std::string_view text) {
  const RawFile file = split_file(text, nfta_keys, "trans");
  expect_kind(file, "nfta");
  return build_nfta(file);
}

LanguageTable parse_table(std::string_view text) {
  RawFile file = split_file(text, table_keys, "entries");
  expect_kind(file, "table");
  LanguageTable table{read_alphabet(file), {}, std::nullopt};
  if (const auto it = file.fields.find("default"); it != file.fields.end()) {
    require_name(it->second, it->second.text, "output");
    table.fallback = std::string(it->second.text);
  }
  for (const Line& line : file.body) {
    const auto arrow = line.text.rfind("->");
    if (arrow == std::string_view::npos) parse_fail(line, "expected 'tree -> value'");
    const std::string_view value = trim(line.text.substr(arrow + 2));
    require_name(line, value, "output");
    Tree t = Tree::leaf(0);
    try {
      t = parse_tree(trim(line.text.substr(0, arrow)), table.alphabet);
    } catch (const AlphabetMismatchError& e) {
      semantic_fail(line, e.what());
    } catch (const ParseError& e) {
      parse_fail(line, e.what());
    }
    const auto [it, inserted] = table.entries.emplace(std::move(t), std::string(value));
    if (!inserted && it->second != value) semantic_fail(line, "conflicting values for the same tree");
  }
  return table;
}

std::string write_dfta(const Dfta& a) {
  const auto names = a.state_names();
  std::string out = "dfta\n" + alphabet_header(a.alphabet());
  out += "outputs:" + join_names(a.outputs().values()) + "\n";
  out += "states:" + join_names(names) + "\n";
  out += "init:";
  for (LeafId l = 0; l < a.frontier().size(); ++l) {
    out += (l ? " ; " : " ") + a.frontier()[l] + " -> " + names[a.init(l)];
  }
  out += "\nout:";
  for (StateId q = 0; q < a.state_count(); ++q) out += (q ? " ; " : " ") + names[q] + " -> " + a.output_name(q);
  out += "\ntrans:\n";
  for (SymbolId s = 0; s < a.sig().size(); ++s) {
    for_each_tuple<StateId>(a.state_count(), a.sig()[s].arity, [&](std::span<const StateId> args) {
      out += "  " + render_lhs(a.alphabet(), s, args, names) + " -> " + names[a.step(s, args)] + "\n";
    });
  }
  return out;
}

std::string write_nfta(const Nfta& a) {
  const auto names = a.state_names();
  std::string out = "nfta\n" + alphabet_header(a.alphabet());
  out += "states:" + join_names(names) + "\n";
  out += "init:";
  for (LeafId l = 0; l < a.frontier().size(); ++l) {
    out += (l ? " ; " : " ") + a.frontier()[l] + " -> " + format_state_set(a, a.init(l));
  }
  out += "\nfinal:";
  for (const StateId q : a.final_states()) out += " " + names[q];
  out += "\ntrans:\n";
  for (SymbolId s = 0; s < a.sig().size(); ++s) {
    for (const auto& [args, targets] : a.relation(s)) {
      if (targets.empty()) continue;
      out += "  " + render_lhs(a.alphabet(), s, args, names) + " -> " + format_state_set(a, targets) + "\n";
    }
  }
  return out;
}

template <Semiring S>
std::string write_wfta(const Wfta<S>& a) {
  const auto names = a.state_names();
  const std::size_t n = a.state_count();
  std::string out = "wfta " + std::string(S::name) + "\n" + alphabet_header(a.alphabet());
  out += "states:" + join_names(names) + "\n";
  out += "init:";
  for (LeafId l = 0; l < a.frontier().size(); ++l) {
    out += (l ? " ; " : " ") + a.frontier()[l] + " -> " + format_weight_vector<S>(names, a.init(l));
  }
  out += "\nout: " + format_weight_vector<S>(names, a.out()) + "\ntrans:\n";
  for (SymbolId s = 0; s < a.sig().size(); ++s) {
    for_each_tuple<StateId>(n, a.sig()[s].arity, [&](std::span<const StateId> args) {
      const std::size_t row = tuple_index(args, n);
      std::string terms;
      for (StateId q = 0; q < n; ++q) {
        const auto w = a.entry(s, row, q);
        if (S::equal(w, S::zero())) continue;
        if (!terms.empty()) terms += " + ";
        terms += S::format(w) + " " + names[q];
      }
      if (!terms.empty()) out += "  " + render_lhs(a.alphabet(), s, args, names) + " -> " + terms + "\n";
    });
  }
  return out;
}

template std::string write_wfta<RationalSemiring>(const Wfta<RationalSemiring>&);
template std::string write_wfta<BooleanSemiring>(const Wfta<BooleanSemiring>&);

}  // namespace treealg
