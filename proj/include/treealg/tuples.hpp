#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace treealg {

/// Calls `f(span)` for every tuple in [0, radix)^arity, in lexicographic
/// order with the first coordinate most significant. Arity 0 yields the
/// single empty tuple.
template <typename T, typename F>
void for_each_tuple(std::size_t radix, std::size_t arity, F&& f) {
  std::vector<T> tuple(arity, T{0});
  if (arity > 0 && radix == 0) return;
  while (true) {
    f(std::span<const T>(tuple));
    std::size_t pos = arity;
    while (pos > 0 && static_cast<std::size_t>(++tuple[pos - 1]) == radix) tuple[--pos] = T{0};
    if (pos == 0) return;
  }
}

/// Mixed-radix index of `tuple`, first coordinate most significant.
template <typename T>
[[nodiscard]] std::size_t tuple_index(std::span<const T> tuple, std::size_t radix) noexcept {
  std::size_t index = 0;
  for (const T v : tuple) index = index * radix + static_cast<std::size_t>(v);
  return index;
}

/// radix^arity, or SIZE_MAX when it does not fit.
[[nodiscard]] inline std::size_t checked_power(std::size_t radix, std::size_t arity) noexcept {
  std::size_t r = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (radix != 0 && r > SIZE_MAX / radix) return SIZE_MAX;
    r *= radix;
  }
  return r;
}

}  // namespace treealg
