#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "freegroup/error.hpp"

namespace freegroup {

using Symbol = std::int64_t;
using Exponent = std::int64_t;

/// One generator power `symbol^exponent`. Generators are numbered from 1.
///
/// Inside a Word the exponent is never zero; raw input to `reduce` may carry
/// zero exponents, which are dropped.
struct Syllable {
  Symbol symbol = 1;
  Exponent exponent = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// An element of the free group, held in reduced form: no zero exponents and
/// no two adjacent syllables on the same generator. The empty word is the
/// identity. Reduced form is unique, so structural equality is group equality.
class Word {
 public:
  Word() = default;

  /// Wraps an already-reduced syllable list, throwing InvalidWordError (or
  /// InvalidSymbolError) instead of reducing if it is not.
  static Word from_syllables(std::vector<Syllable> syllables);

  std::span<const Syllable> syllables() const noexcept { return syllables_; }
  std::size_t size() const noexcept { return syllables_.size(); }
  bool empty() const noexcept { return syllables_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  friend class WordBuilder;
  explicit Word(std::vector<Syllable> syllables) : syllables_(std::move(syllables)) {}

  std::vector<Syllable> syllables_;
};

/// Accumulates syllables left to right, keeping the buffer reduced after every
/// push: a syllable on the same generator as the top is merged into it, and a
/// merge that reaches exponent zero pops the top, which exposes the previous
/// syllable to further merging.
class WordBuilder {
 public:
  WordBuilder() = default;
  explicit WordBuilder(const Word& prefix);

  void reserve(std::size_t n) { stack_.reserve(n); }
  void push(Syllable s);
  void append(const Word& w);
  /// Appends the inverse of `w` without materializing it.
  void append_inverse(const Word& w);

  Word build() &&;

 private:
  std::vector<Syllable> stack_;
};

Word reduce(std::span<const Syllable> raw);

/// The single-generator word `symbol^exponent` (identity when exponent is 0).
Word generator(Symbol symbol, Exponent exponent = 1);

/// The cumulative word `a.b.c...` on generators 1..n; n = 0 gives the identity.
Word abc(Symbol n);

Word concat(const Word& x, const Word& y);
Word inverse(const Word& x);
/// n copies of x; negative n repeats the inverse.
Word repeat(const Word& x, std::int64_t n);
/// x^y = y^-1 x y.
Word conjugate(const Word& x, const Word& y);
/// [x,y] = x^-1 y^-1 x y.
Word commutator(const Word& x, const Word& y);
bool is_identity(const Word& x) noexcept;
bool equal(const Word& x, const Word& y) noexcept;

inline Word operator+(const Word& x, const Word& y) { return concat(x, y); }
inline Word operator-(const Word& x) { return inverse(x); }
inline Word operator-(const Word& x, const Word& y) { return concat(x, inverse(y)); }
inline Word operator*(const Word& x, std::int64_t n) { return repeat(x, n); }
inline Word operator*(std::int64_t n, const Word& x) { return repeat(x, n); }

struct AbelianTerm {
  Symbol symbol = 1;
  Exponent exponent = 1;

  friend bool operator==(const AbelianTerm&, const AbelianTerm&) = default;
};

/// Image of a word in the free abelian group: total exponent per generator,
/// zero totals omitted, sorted by generator.
class AbelianWord {
 public:
  AbelianWord() = default;

  /// Throws InvalidWordError unless symbols strictly increase and exponents
  /// are nonzero.
  static AbelianWord from_terms(std::vector<AbelianTerm> terms);

  std::span<const AbelianTerm> terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  /// Total exponent of `symbol` (0 when absent).
  Exponent exponent_of(Symbol symbol) const noexcept;

  friend bool operator==(const AbelianWord&, const AbelianWord&) = default;

 private:
  explicit AbelianWord(std::vector<AbelianTerm> terms) : terms_(std::move(terms)) {}
  friend AbelianWord abelianize(const Word&);
  friend AbelianWord abelian_sum(const AbelianWord&, const AbelianWord&);

  std::vector<AbelianTerm> terms_;
};

AbelianWord abelianize(const Word& x);
AbelianWord abelian_sum(const AbelianWord& x, const AbelianWord& y);

namespace detail {
Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);
Exponent checked_neg(Exponent a);
}  // namespace detail

}  // namespace freegroup

template <>
struct std::hash<freegroup::Word> {
  std::size_t operator()(const freegroup::Word& w) const noexcept;
};
