#include "freegroup/text_io.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <string>

#include <json.hpp>

#include "text_scan.hpp"

namespace freegroup {

bool is_name_char(char c) noexcept {
  const auto u = static_cast<unsigned char>(c);
  if (u < 0x21 || u == 0x7f) return false;
  if (std::isdigit(u)) return false;
  switch (c) {
    case '^': case '.': case '-': case '+': case '*':
    case '(': case ')': case '[': case ']': case ',': case ':': case '=':
      return false;
    default:
      return true;
  }
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& n = names_[i];
    if (n.empty()) {
      throw InvalidAlphabetError("alphabet name " + std::to_string(i + 1) + " is empty");
    }
    for (char c : n) {
      if (!is_name_char(c)) {
        throw InvalidAlphabetError("alphabet name '" + n + "' contains reserved character '" +
                                   std::string(1, c) + "'");
      }
    }
    if (!index_.emplace(n, static_cast<Symbol>(i + 1)).second) {
      throw InvalidAlphabetError("duplicate alphabet name '" + n + "'");
    }
  }
}

const Alphabet& Alphabet::letters() {
  static const Alphabet kLetters = [] {
    std::vector<std::string> names;
    for (char c = 'a'; c <= 'z'; ++c) names.emplace_back(1, c);
    return Alphabet(std::move(names));
  }();
  return kLetters;
}

Alphabet Alphabet::from_lines(std::string_view text) {
  std::vector<std::string> names;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    line = detail::trim(line);
    if (!line.empty()) names.emplace_back(line);
  }
  return Alphabet(std::move(names));
}

const std::string* Alphabet::name_of(Symbol symbol) const noexcept {
  if (symbol < 1 || static_cast<std::size_t>(symbol) > names_.size()) return nullptr;
  return &names_[static_cast<std::size_t>(symbol - 1)];
}

std::optional<Symbol> Alphabet::symbol_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

template <class Term>
std::string format_terms(std::span<const Term> terms, const Alphabet& alphabet, bool strict) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += '.';
    const std::string* name = alphabet.name_of(terms[i].symbol);
    if (name != nullptr) {
      out += *name;
    } else if (strict) {
      throw OutOfAlphabetError("generator " + std::to_string(terms[i].symbol) +
                               " is outside the " + std::to_string(alphabet.size()) +
                               "-name alphabet");
    } else {
      out += "NA";
    }
    if (terms[i].exponent != 1) {
      out += '^';
      out += std::to_string(terms[i].exponent);
    }
  }
  return out;
}

}  // namespace

std::string format(const Word& x, const Alphabet& alphabet, bool strict) {
  return format_terms(x.syllables(), alphabet, strict);
}

std::string format(const AbelianWord& x, const Alphabet& alphabet, bool strict) {
  return format_terms(x.terms(), alphabet, strict);
}

namespace detail {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool exponent_follows(std::string_view text, std::size_t pos) {
  if (pos >= text.size() || text[pos] != '^') return false;
  ++pos;
  if (pos < text.size() && text[pos] == '-') ++pos;
  return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
}

std::int64_t scan_integer(std::string_view text, std::size_t& pos, const char* what) {
  const std::size_t start = pos;
  std::size_t end = pos;
  if (end < text.size() && text[end] == '-') ++end;
  while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + end, value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(std::string(what) + " out of 64-bit range", start);
  }
  if (ec != std::errc() || ptr != text.data() + end) {
    throw ParseError(std::string("malformed ") + what, start);
  }
  pos = end;
  return value;
}

std::vector<NamedTerm> scan_terms(std::string_view text, std::size_t& pos) {
  std::vector<NamedTerm> terms;
  while (true) {
    const std::size_t start = pos;
    while (pos < text.size() && is_name_char(text[pos])) ++pos;
    if (pos == start) throw ParseError("expected a generator name", start);
    NamedTerm term{std::string(text.substr(start, pos - start)), 1, start};
    if (exponent_follows(text, pos)) {
      ++pos;
      const std::size_t exp_pos = pos;
      term.exponent = scan_integer(text, pos, "exponent");
      if (term.exponent == 0) throw ParseError("zero exponent", exp_pos);
    }
    terms.push_back(std::move(term));
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      continue;
    }
    return terms;
  }
}

Word resolve_terms(std::span<const NamedTerm> terms, const Alphabet& alphabet) {
  WordBuilder b;
  b.reserve(terms.size());
  for (const NamedTerm& t : terms) {
    auto symbol = alphabet.symbol_of(t.name);
    if (!symbol) throw ParseError("unknown generator name '" + t.name + "'", t.position);
    b.push({*symbol, t.exponent});
  }
  return std::move(b).build();
}

}  // namespace detail

Word parse_canonical(std::string_view text, const Alphabet& alphabet) {
  if (text == "0") return Word();
  if (text.empty()) throw ParseError("empty word (the identity is written 0)", 0);
  std::size_t pos = 0;
  auto terms = detail::scan_terms(text, pos);
  if (pos != text.size()) {
    if (text[pos] == '^') throw ParseError("malformed exponent", pos + 1);
    throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
  }
  return detail::resolve_terms(terms, alphabet);
}

Word parse_compact(std::string_view text) {
  WordBuilder b;
  b.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= 'a' && c <= 'z') {
      b.push({c - 'a' + 1, 1});
    } else if (c >= 'A' && c <= 'Z') {
      b.push({c - 'A' + 1, -1});
    } else {
      throw ParseError(std::string("non-letter character '") + c + "' in compact word", i);
    }
  }
  return std::move(b).build();
}

Word from_matrix(const WordMatrix& m) {
  if (m.symbols.size() != m.exponents.size()) {
    throw InvalidWordError("matrix rows differ in length: " + std::to_string(m.symbols.size()) +
                           " symbols, " + std::to_string(m.exponents.size()) + " exponents");
  }
  WordBuilder b;
  b.reserve(m.symbols.size());
  for (std::size_t i = 0; i < m.symbols.size(); ++i) b.push({m.symbols[i], m.exponents[i]});
  return std::move(b).build();
}

WordMatrix to_matrix(const Word& x) {
  WordMatrix m;
  m.symbols.reserve(x.size());
  m.exponents.reserve(x.size());
  for (const Syllable& s : x.syllables()) {
    m.symbols.push_back(s.symbol);
    m.exponents.push_back(s.exponent);
  }
  return m;
}

namespace {

void append_row(std::string& out, std::span<const std::int64_t> row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(row[i]);
  }
  out += '\n';
}

std::vector<std::int64_t> parse_row(std::string_view line) {
  std::vector<std::int64_t> row;
  if (detail::trim(line).empty()) return row;
  std::size_t pos = 0;
  while (true) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    row.push_back(detail::scan_integer(line, pos, "matrix entry"));
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\r')) ++pos;
    if (pos == line.size()) return row;
    if (line[pos] != ',') throw ParseError("expected ',' in matrix row", pos);
    ++pos;
  }
}

}  // namespace

std::string to_csv(const WordMatrix& m) {
  std::string out;
  append_row(out, m.symbols);
  append_row(out, m.exponents);
  return out;
}

WordMatrix parse_csv(std::string_view top, std::string_view bottom) {
  return WordMatrix{parse_row(top), parse_row(bottom)};
}

std::string serialize(std::span<const Word> xs) {
  nlohmann::json doc = nlohmann::json::array();
  for (const Word& x : xs) {
    nlohmann::json word = nlohmann::json::array();
    for (const Syllable& s : x.syllables()) word.push_back({s.symbol, s.exponent});
    doc.push_back(std::move(word));
  }
  return doc.dump();
}

namespace {

std::int64_t as_int64(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_unsigned()) {
    auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw OverflowError(where + ": integer out of 64-bit range");
    }
    return static_cast<std::int64_t>(u);
  }
  if (v.is_number_integer()) return v.get<std::int64_t>();
  throw ParseError(where + ": expected an integer", 0);
}

}  // namespace

WordVector deserialize(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("interchange syntax error", e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!doc.is_array()) throw ParseError("interchange text must be a list of words", 0);
  WordVector out;
  out.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& word = doc[i];
    const std::string wpos = "word " + std::to_string(i);
    if (!word.is_array()) throw ParseError(wpos + ": expected a list of pairs", 0);
    WordBuilder b;
    for (std::size_t j = 0; j < word.size(); ++j) {
      const auto& pair = word[j];
      const std::string where = wpos + ", syllable " + std::to_string(j);
      if (!pair.is_array() || pair.size() != 2) {
        throw ParseError(where + ": expected a [symbol, exponent] pair", 0);
      }
      const std::int64_t symbol = as_int64(pair[0], where);
      const std::int64_t exponent = as_int64(pair[1], where);
      if (symbol < 1) {
        throw InvalidSymbolError(where + ": invalid generator id " + std::to_string(symbol));
      }
      if (exponent == 0) throw InvalidWordError(where + ": zero exponent");
      b.push({symbol, exponent});
    }
    out.push_back(std::move(b).build());
  }
  return out;
}

}  // namespace freegroup
