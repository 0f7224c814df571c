#pragma once

// Scanning helpers shared by the canonical-word parser and the expression
// parser.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "freegroup/text_io.hpp"

namespace freegroup::detail {

/// One `name^exponent` term whose name is not yet resolved to a generator.
struct NamedTerm {
  std::string name;
  Exponent exponent = 1;
  std::size_t position = 0;
};

std::string_view trim(std::string_view s);

/// True when text[pos] is `^` followed by an optionally negative integer.
bool exponent_follows(std::string_view text, std::size_t pos);

/// Reads `-?[0-9]+` at pos and advances past it.
std::int64_t scan_integer(std::string_view text, std::size_t& pos, const char* what);

/// Reads `term(.term)*` starting at pos, stopping at the first character that
/// cannot continue the literal.
std::vector<NamedTerm> scan_terms(std::string_view text, std::size_t& pos);

Word resolve_terms(std::span<const NamedTerm> terms, const Alphabet& alphabet);

}  // namespace freegroup::detail
