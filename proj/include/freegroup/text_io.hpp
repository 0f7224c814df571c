#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "freegroup/vectorized.hpp"
#include "freegroup/word.hpp"

namespace freegroup {

/// True for characters that may appear in a generator name. Whitespace,
/// digits and the punctuation used by the word and expression notations
/// (`^ . - + * ( ) [ ] , : =`) are reserved.
bool is_name_char(char c) noexcept;

/// Display names for generators; name i (0-based) labels generator i + 1.
class Alphabet {
 public:
  /// Throws InvalidAlphabetError on empty, duplicate or reserved-character
  /// names.
  explicit Alphabet(std::vector<std::string> names);

  /// The 26 lowercase letters.
  static const Alphabet& letters();

  /// One name per line; blank lines and trailing whitespace are ignored.
  static Alphabet from_lines(std::string_view text);

  std::size_t size() const noexcept { return names_.size(); }
  std::span<const std::string> names() const noexcept { return names_; }
  /// nullptr when the generator has no name.
  const std::string* name_of(Symbol symbol) const noexcept;
  std::optional<Symbol> symbol_of(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Symbol> index_;
};

/// Canonical notation: syllables joined by `.`, exponent 1 omitted, other
/// exponents as `name^e`, identity as `0`. A generator beyond the alphabet is
/// printed as `NA`, or throws OutOfAlphabetError when `strict`.
std::string format(const Word& x, const Alphabet& alphabet = Alphabet::letters(),
                   bool strict = false);
std::string format(const AbelianWord& x, const Alphabet& alphabet = Alphabet::letters(),
                   bool strict = false);

/// Inverse of `format`: `0` or `term(.term)*` with term = name(^nonzero int)?.
/// The input need not be reduced; the result is.
Word parse_canonical(std::string_view text, const Alphabet& alphabet = Alphabet::letters());

/// Letter strings such as "aabbbcccc": lowercase letters are generators 1..26
/// to the power 1, uppercase letters their inverses.
Word parse_compact(std::string_view text);

/// Two-row integer form: generator ids on top, exponents below.
struct WordMatrix {
  std::vector<std::int64_t> symbols;
  std::vector<std::int64_t> exponents;

  friend bool operator==(const WordMatrix&, const WordMatrix&) = default;
};

Word from_matrix(const WordMatrix& m);
WordMatrix to_matrix(const Word& x);

/// Two comma-separated lines, each terminated by '\n'.
std::string to_csv(const WordMatrix& m);
WordMatrix parse_csv(std::string_view top, std::string_view bottom);

/// Interchange text: a list of words, each a list of [symbol, exponent]
/// pairs, e.g. `[[[1,2],[2,-3]]]`.
std::string serialize(std::span<const Word> xs);
WordVector deserialize(std::string_view text);

}  // namespace freegroup
