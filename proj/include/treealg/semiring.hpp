#pragma once

#include <concepts>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "treealg/rational.hpp"

namespace treealg {

template <typename S>
concept Semiring = requires(const typename S::value_type& a, const typename S::value_type& b, std::string_view text) {
  { S::zero() } -> std::convertible_to<typename S::value_type>;
  { S::one() } -> std::convertible_to<typename S::value_type>;
  { S::add(a, b) } -> std::convertible_to<typename S::value_type>;
  { S::mul(a, b) } -> std::convertible_to<typename S::value_type>;
  { S::equal(a, b) } -> std::convertible_to<bool>;
  { S::parse(text) } -> std::convertible_to<typename S::value_type>;
  { S::format(a) } -> std::convertible_to<std::string>;
  { S::name } -> std::convertible_to<std::string_view>;
};

/// The field of rationals, with exact arithmetic.
struct RationalSemiring {
  using value_type = Rational;
  static constexpr std::string_view name = "rational";

  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational add(const Rational& a, const Rational& b) { return a + b; }
  static Rational mul(const Rational& a, const Rational& b) { return a * b; }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
  static Rational parse(std::string_view text) { return Rational::parse(text); }
  static std::string format(const Rational& a) { return a.to_string(); }
};

/// ({0,1}, or, and).
struct BooleanSemiring {
  using value_type = bool;
  static constexpr std::string_view name = "bool";

  static bool zero() { return false; }
  static bool one() { return true; }
  static bool add(bool a, bool b) { return a || b; }
  static bool mul(bool a, bool b) { return a && b; }
  static bool equal(bool a, bool b) { return a == b; }
  /// `0`/`1` (also `false`/`true`). Throws ParseError otherwise.
  static bool parse(std::string_view text);
  static std::string format(bool a) { return a ? "1" : "0"; }
};

/// Checks the semiring laws on every pair and triple of `samples`: additive
/// and multiplicative monoids, commutative addition, two-sided
/// distributivity and an absorbing zero. Returns the first failed law.
template <Semiring S>
[[nodiscard]] std::optional<std::string> semiring_law_violation(std::span<const typename S::value_type> samples) {
  const auto eq = [](const auto& x, const auto& y) { return S::equal(x, y); };
  const auto z = S::zero();
  const auto o = S::one();
  for (const auto& a : samples) {
    if (!eq(S::add(a, z), a) || !eq(S::add(z, a), a)) return "zero is not an additive identity";
    if (!eq(S::mul(a, o), a) || !eq(S::mul(o, a), a)) return "one is not a multiplicative identity";
    if (!eq(S::mul(a, z), z) || !eq(S::mul(z, a), z)) return "zero is not absorbing";
    for (const auto& b : samples) {
      if (!eq(S::add(a, b), S::add(b, a))) return "addition is not commutative";
      for (const auto& c : samples) {
        if (!eq(S::add(S::add(a, b), c), S::add(a, S::add(b, c)))) return "addition is not associative";
        if (!eq(S::mul(S::mul(a, b), c), S::mul(a, S::mul(b, c)))) return "multiplication is not associative";
        if (!eq(S::mul(a, S::add(b, c)), S::add(S::mul(a, b), S::mul(a, c)))) return "left distributivity fails";
        if (!eq(S::mul(S::add(a, b), c), S::add(S::mul(a, c), S::mul(b, c)))) return "right distributivity fails";
      }
    }
  }
  return std::nullopt;
}

}  // namespace treealg
