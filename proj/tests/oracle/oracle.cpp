#include "oracle.hpp"

#include <cstdlib>
#include <string>

namespace freegroup::oracle {

namespace {

bool cancels(std::int64_t a, std::int64_t b) { return a == -b; }

}  // namespace

LetterString expand(std::span<const Syllable> raw, std::size_t limit) {
  LetterString out;
  for (const Syllable& s : raw) {
    if (s.symbol < 1) throw InvalidSymbolError("invalid generator id " + std::to_string(s.symbol));
    const std::uint64_t n = s.exponent < 0 ? 0 - static_cast<std::uint64_t>(s.exponent)
                                           : static_cast<std::uint64_t>(s.exponent);
    if (n > limit - out.size()) {
      throw ExpansionLimitError("expansion exceeds " + std::to_string(limit) + " letters");
    }
    const std::int64_t letter = s.exponent < 0 ? -s.symbol : s.symbol;
    out.insert(out.end(), n, letter);
  }
  return out;
}

LetterString oracle_reduce(LetterString letters) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (cancels(letters[i], letters[i + 1])) {
        letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i),
                      letters.begin() + static_cast<std::ptrdiff_t>(i + 2));
        changed = true;
        break;
      }
    }
  }
  return letters;
}

LetterString oracle_reduce_random(LetterString letters, std::mt19937_64& rng) {
  while (true) {
    std::vector<std::size_t> pairs;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (cancels(letters[i], letters[i + 1])) pairs.push_back(i);
    }
    if (pairs.empty()) return letters;
    const std::size_t i = pairs[rng() % pairs.size()];
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i),
                  letters.begin() + static_cast<std::ptrdiff_t>(i + 2));
  }
}

Word regroup(const LetterString& letters) {
  std::vector<Syllable> syllables;
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const auto run = static_cast<std::int64_t>(j - i);
    syllables.push_back({std::llabs(letters[i]), letters[i] < 0 ? -run : run});
    i = j;
  }
  return Word::from_syllables(std::move(syllables));
}

Word reference_reduce(std::span<const Syllable> raw) {
  return regroup(oracle_reduce(expand(raw)));
}

}  // namespace freegroup::oracle
