#include "freegroup/random.hpp"

#include <charconv>
#include <vector>

#include "text_scan.hpp"

namespace freegroup {

RandomSpec RandomSpec::shaped(std::int64_t count, std::int64_t m, std::uint64_t seed) {
  RandomSpec spec;
  spec.count = count;
  spec.syllables = m;
  spec.max_symbol = m;
  spec.seed = seed;
  return spec;
}

void RandomSpec::validate() const {
  if (count < 0) throw InvalidSpecError("count must be >= 0, got " + std::to_string(count));
  if (syllables < 1) {
    throw InvalidSpecError("syllables must be >= 1, got " + std::to_string(syllables));
  }
  if (max_symbol < 1) {
    throw InvalidSpecError("max_symbol must be >= 1, got " + std::to_string(max_symbol));
  }
  if (max_abs_exponent < 1) {
    throw InvalidSpecError("max_abs_exponent must be >= 1, got " +
                           std::to_string(max_abs_exponent));
  }
}

std::uint64_t uniform_below(Engine& engine, std::uint64_t bound) {
  // Reject the low 2^64 mod bound values so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = engine();
    if (r >= threshold) return r % bound;
  }
}

Word random_word(Engine& engine, const RandomSpec& spec) {
  const auto symbols = static_cast<std::uint64_t>(spec.max_symbol);
  const auto magnitudes = static_cast<std::uint64_t>(spec.max_abs_exponent);
  WordBuilder b;
  b.reserve(static_cast<std::size_t>(spec.syllables));
  for (std::int64_t i = 0; i < spec.syllables; ++i) {
    const auto symbol = static_cast<Symbol>(uniform_below(engine, symbols)) + 1;
    // Draw from 2k values and fold onto {-k..-1, 1..k}.
    const auto r = static_cast<std::int64_t>(uniform_below(engine, 2 * magnitudes));
    const auto k = static_cast<std::int64_t>(magnitudes);
    const Exponent exponent = r < k ? r - k : r - k + 1;
    b.push({symbol, exponent});
  }
  return std::move(b).build();
}

WordVector rfree(const RandomSpec& spec) {
  spec.validate();
  Engine engine(spec.seed);
  WordVector out;
  out.reserve(static_cast<std::size_t>(spec.count));
  for (std::int64_t i = 0; i < spec.count; ++i) out.push_back(random_word(engine, spec));
  return out;
}

std::string to_key_value(const RandomSpec& spec) {
  return "count=" + std::to_string(spec.count) + "\nsyllables=" + std::to_string(spec.syllables) +
         "\nmax_symbol=" + std::to_string(spec.max_symbol) +
         "\nmax_abs_exponent=" + std::to_string(spec.max_abs_exponent) +
         "\nseed=" + std::to_string(spec.seed) + "\n";
}

namespace {

template <class Int>
Int parse_value(std::string_view key, std::string_view value) {
  Int out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw InvalidSpecError("bad value '" + std::string(value) + "' for " + std::string(key));
  }
  return out;
}

}  // namespace

RandomSpec parse_key_value(std::string_view text) {
  RandomSpec spec;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = detail::trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidSpecError("line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string_view key = detail::trim(line.substr(0, eq));
    const std::string_view value = detail::trim(line.substr(eq + 1));
    if (key == "count") {
      spec.count = parse_value<std::int64_t>(key, value);
    } else if (key == "syllables") {
      spec.syllables = parse_value<std::int64_t>(key, value);
    } else if (key == "max_symbol") {
      spec.max_symbol = parse_value<std::int64_t>(key, value);
    } else if (key == "max_abs_exponent") {
      spec.max_abs_exponent = parse_value<std::int64_t>(key, value);
    } else if (key == "seed") {
      spec.seed = parse_value<std::uint64_t>(key, value);
    } else {
      throw InvalidSpecError("line " + std::to_string(line_no) + ": unknown key '" +
                             std::string(key) + "'");
    }
  }
  spec.validate();
  return spec;
}

}  // namespace freegroup
