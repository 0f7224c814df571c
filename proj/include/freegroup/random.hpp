#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "freegroup/vectorized.hpp"

namespace freegroup {

/// Parameters for random word generation. Each word is the reduction of
/// `syllables` raw syllables with generator uniform on 1..max_symbol and
/// exponent uniform on {±1, ..., ±max_abs_exponent}.
struct RandomSpec {
  std::int64_t count = 7;
  std::int64_t syllables = 5;
  std::int64_t max_symbol = 3;
  std::int64_t max_abs_exponent = 4;
  std::uint64_t seed = 0;

  /// The `rfree(n, m)` call shape: n words of m syllables over m generators.
  static RandomSpec shaped(std::int64_t count, std::int64_t m, std::uint64_t seed = 0);

  /// Throws InvalidSpecError unless count >= 0 and every bound is >= 1.
  void validate() const;

  friend bool operator==(const RandomSpec&, const RandomSpec&) = default;
};

/// Engine behind every generator here. The raw 64-bit stream of mt19937_64
/// is fixed by the standard; bounded draws go through `uniform_below`, so the
/// output is the same on every platform.
using Engine = std::mt19937_64;

/// Unbiased draw from [0, bound) by rejection.
std::uint64_t uniform_below(Engine& engine, std::uint64_t bound);

/// One word drawn with the bounds of `spec` (count and seed are ignored).
Word random_word(Engine& engine, const RandomSpec& spec);

WordVector rfree(const RandomSpec& spec);

/// `key=value` lines for count, syllables, max_symbol, max_abs_exponent, seed.
std::string to_key_value(const RandomSpec& spec);
/// Keys may appear in any order; missing keys keep their defaults. Blank
/// lines and lines starting with '#' are skipped.
RandomSpec parse_key_value(std::string_view text);

}  // namespace freegroup
