#include "treealg/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "treealg/error.hpp"

namespace treealg {
namespace {

void sort_by_text(const Alphabet& alphabet, std::vector<Tree>& layer) {
  std::vector<std::pair<std::string, Tree>> keyed;
  keyed.reserve(layer.size());
  for (auto& t : layer) keyed.emplace_back(render_tree(alphabet, t), std::move(t));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  layer.clear();
  for (auto& [text, t] : keyed) layer.push_back(std::move(t));
}

void throw_cap(std::size_t cap) {
  throw ResourceLimitError("enumeration exceeds the cap of " + std::to_string(cap) + " trees");
}

// Trees over the frontier, plus the hole as an extra leaf when requested.
std::vector<Tree> enumerate_by_height(const Alphabet& alphabet, std::size_t max_height, bool with_hole,
                                      std::size_t cap) {
  std::vector<Tree> all;
  std::vector<Tree> layer;
  for (LeafId l = 0; l < alphabet.fr.size(); ++l) layer.push_back(Tree::leaf(l));
  if (with_hole) layer.push_back(Tree::hole());
  for (SymbolId s = 0; s < alphabet.sig.size(); ++s) {
    if (alphabet.sig[s].arity == 0) layer.push_back(Tree::node(s));
  }
  if (layer.size() > cap) throw_cap(cap);
  sort_by_text(alphabet, layer);
  all = std::move(layer);

  std::size_t lower = 0;  // number of trees of height <= h-2
  for (std::size_t h = 1; h <= max_height; ++h) {
    const std::size_t upto = all.size();  // trees of height <= h-1
    long double expected = 0;
    for (const auto& sym : alphabet.sig.symbols()) {
      if (sym.arity == 0) continue;
      expected += std::pow(static_cast<long double>(upto), sym.arity) -
                  std::pow(static_cast<long double>(lower), sym.arity);
    }
    if (expected + static_cast<long double>(upto) > static_cast<long double>(cap)) throw_cap(cap);

    layer.clear();
    layer.reserve(static_cast<std::size_t>(expected));
    for (SymbolId s = 0; s < alphabet.sig.size(); ++s) {
      const unsigned k = alphabet.sig[s].arity;
      if (k == 0) continue;
      std::vector<std::size_t> idx(k, 0);
      while (true) {
        // keep only tuples with at least one child of height exactly h-1
        if (std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= lower; })) {
          std::vector<Tree> children;
          children.reserve(k);
          for (const std::size_t i : idx) children.push_back(all[i]);
          layer.push_back(Tree::node(s, std::move(children)));
        }
        std::size_t pos = k;
        while (pos > 0 && ++idx[pos - 1] == upto) idx[--pos] = 0;
        if (pos == 0) break;
      }
    }
    sort_by_text(alphabet, layer);
    lower = upto;
    all.insert(all.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return all;
}

}  // namespace

std::vector<Tree> enumerate_trees(const Alphabet& alphabet, std::size_t max_height, EnumerationLimits limits) {
  return enumerate_by_height(alphabet, max_height, false, limits.max_count);
}

std::vector<Context> enumerate_contexts(const Alphabet& alphabet, std::size_t max_height, bool single_hole,
                                        EnumerationLimits limits) {
  std::vector<Context> out;
  for (auto& t : enumerate_by_height(alphabet, max_height, true, limits.max_count)) {
    const std::size_t holes = t.hole_count();
    if (holes == 0 || (single_hole && holes != 1)) continue;
    out.push_back(Context{std::move(t)});
  }
  return out;
}

}  // namespace treealg
