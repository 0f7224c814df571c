#include "freegroup/word.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

namespace freegroup {

namespace detail {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("exponent overflow: " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("exponent overflow: " + std::to_string(a) + " * " + std::to_string(b));
  }
  return out;
}

Exponent checked_neg(Exponent a) {
  if (a == std::numeric_limits<Exponent>::min()) {
    throw OverflowError("exponent overflow: cannot negate " + std::to_string(a));
  }
  return -a;
}

}  // namespace detail

namespace {

void check_symbol(Symbol s) {
  if (s < 1) {
    throw InvalidSymbolError("invalid generator id " + std::to_string(s) + " (must be >= 1)");
  }
}

}  // namespace

Word Word::from_syllables(std::vector<Syllable> syllables) {
  for (std::size_t i = 0; i < syllables.size(); ++i) {
    check_symbol(syllables[i].symbol);
    if (syllables[i].exponent == 0) {
      throw InvalidWordError("zero exponent at syllable " + std::to_string(i));
    }
    if (i > 0 && syllables[i - 1].symbol == syllables[i].symbol) {
      throw InvalidWordError("adjacent syllables " + std::to_string(i - 1) + " and " +
                             std::to_string(i) + " share generator " +
                             std::to_string(syllables[i].symbol));
    }
  }
  return Word(std::move(syllables));
}

WordBuilder::WordBuilder(const Word& prefix)
    : stack_(prefix.syllables().begin(), prefix.syllables().end()) {}

void WordBuilder::push(Syllable s) {
  check_symbol(s.symbol);
  if (s.exponent == 0) return;
  if (!stack_.empty() && stack_.back().symbol == s.symbol) {
    Exponent merged = detail::checked_add(stack_.back().exponent, s.exponent);
    if (merged == 0) {
      stack_.pop_back();
    } else {
      stack_.back().exponent = merged;
    }
    return;
  }
  stack_.push_back(s);
}

void WordBuilder::append(const Word& w) {
  for (const Syllable& s : w.syllables()) push(s);
}

void WordBuilder::append_inverse(const Word& w) {
  auto syl = w.syllables();
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    push({it->symbol, detail::checked_neg(it->exponent)});
  }
}

Word WordBuilder::build() && { return Word(std::move(stack_)); }

Word reduce(std::span<const Syllable> raw) {
  WordBuilder b;
  b.reserve(raw.size());
  for (const Syllable& s : raw) b.push(s);
  return std::move(b).build();
}

Word generator(Symbol symbol, Exponent exponent) {
  WordBuilder b;
  b.push({symbol, exponent});
  return std::move(b).build();
}

Word abc(Symbol n) {
  if (n < 0) {
    throw InvalidSymbolError("abc() needs a nonnegative length, got " + std::to_string(n));
  }
  WordBuilder b;
  b.reserve(static_cast<std::size_t>(n));
  for (Symbol s = 1; s <= n; ++s) b.push({s, 1});
  return std::move(b).build();
}

Word concat(const Word& x, const Word& y) {
  WordBuilder b(x);
  b.append(y);
  return std::move(b).build();
}

Word inverse(const Word& x) {
  WordBuilder b;
  b.reserve(x.size());
  b.append_inverse(x);
  return std::move(b).build();
}

Word repeat(const Word& x, std::int64_t n) {
  if (n == 0 || x.empty()) return Word();
  auto syl = x.syllables();

  // x = t . core . t^-1 with the core cyclically reduced, so copies of the
  // core meet without cancellation and x^n = t . core^n . t^-1.
  std::size_t lo = 0;
  std::size_t hi = syl.size() - 1;
  while (lo < hi && syl[lo].symbol == syl[hi].symbol && syl[lo].exponent == -syl[hi].exponent) {
    ++lo;
    --hi;
  }

  WordBuilder b;
  for (std::size_t i = 0; i < lo; ++i) b.push(syl[i]);
  if (lo == hi) {
    b.push({syl[lo].symbol, detail::checked_mul(syl[lo].exponent, n)});
  } else {
    // |n| without overflowing on INT64_MIN.
    const std::uint64_t count =
        n > 0 ? static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(-(n + 1)) + 1;
    const std::size_t core_len = hi - lo + 1;
    if (count > (std::uint64_t{1} << 32) / core_len) {
      throw OverflowError("repeat result too long: " + std::to_string(count) + " copies of " +
                          std::to_string(core_len) + " syllables");
    }
    b.reserve(2 * lo + core_len * count);
    for (std::uint64_t k = 0; k < count; ++k) {
      if (n > 0) {
        for (std::size_t i = lo; i <= hi; ++i) b.push(syl[i]);
      } else {
        for (std::size_t i = hi + 1; i-- > lo;) {
          b.push({syl[i].symbol, detail::checked_neg(syl[i].exponent)});
        }
      }
    }
  }
  for (std::size_t i = hi + 1; i < syl.size(); ++i) b.push(syl[i]);
  return std::move(b).build();
}

Word conjugate(const Word& x, const Word& y) {
  WordBuilder b;
  b.append_inverse(y);
  b.append(x);
  b.append(y);
  return std::move(b).build();
}

Word commutator(const Word& x, const Word& y) {
  WordBuilder b;
  b.append_inverse(x);
  b.append_inverse(y);
  b.append(x);
  b.append(y);
  return std::move(b).build();
}

bool is_identity(const Word& x) noexcept { return x.empty(); }

bool equal(const Word& x, const Word& y) noexcept { return x == y; }

AbelianWord AbelianWord::from_terms(std::vector<AbelianTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    check_symbol(terms[i].symbol);
    if (terms[i].exponent == 0) {
      throw InvalidWordError("zero exponent in abelian term " + std::to_string(i));
    }
    if (i > 0 && terms[i - 1].symbol >= terms[i].symbol) {
      throw InvalidWordError("abelian terms not strictly increasing at " + std::to_string(i));
    }
  }
  return AbelianWord(std::move(terms));
}

Exponent AbelianWord::exponent_of(Symbol symbol) const noexcept {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), symbol,
                             [](const AbelianTerm& t, Symbol s) { return t.symbol < s; });
  return it != terms_.end() && it->symbol == symbol ? it->exponent : 0;
}

AbelianWord abelianize(const Word& x) {
  std::map<Symbol, Exponent> totals;
  for (const Syllable& s : x.syllables()) {
    Exponent& e = totals[s.symbol];
    e = detail::checked_add(e, s.exponent);
  }
  std::vector<AbelianTerm> terms;
  for (const auto& [symbol, exponent] : totals) {
    if (exponent != 0) terms.push_back({symbol, exponent});
  }
  return AbelianWord(std::move(terms));
}

AbelianWord abelian_sum(const AbelianWord& x, const AbelianWord& y) {
  std::vector<AbelianTerm> out;
  auto a = x.terms();
  auto b = y.terms();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].symbol < b[j].symbol)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].symbol < a[i].symbol) {
      out.push_back(b[j++]);
    } else {
      Exponent e = detail::checked_add(a[i].exponent, b[j].exponent);
      if (e != 0) out.push_back({a[i].symbol, e});
      ++i;
      ++j;
    }
  }
  return AbelianWord(std::move(out));
}

}  // namespace freegroup

std::size_t std::hash<freegroup::Word>::operator()(const freegroup::Word& w) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& s : w.syllables()) {
    h ^= std::hash<std::int64_t>{}(s.symbol) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::int64_t>{}(s.exponent) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}
