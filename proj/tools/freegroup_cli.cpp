// freegroup: evaluate and inspect free-group words from the command line.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "freegroup/freegroup.hpp"

namespace fg = freegroup;

namespace {

enum ExitCode : int {
  kOk = 0,
  kAssertionFailed = 1,
  kUsage = 2,
  kParse = 3,
  kDomain = 4,
  kConfig = 5,
  kIo = 6,
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string symbols_file;
  bool strict = false;
  std::string format = "text";

  std::string expression;
  std::vector<std::string> lets;
  std::vector<std::string> randoms;
  bool assert_all = false;

  std::vector<std::string> inputs;
  std::string input_kind = "auto";

  std::optional<std::int64_t> count;
  std::optional<std::int64_t> syllables;
  std::optional<std::int64_t> max_symbol;
  std::optional<std::int64_t> max_exponent;
  std::optional<std::uint64_t> seed;
  std::string spec_file;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return ss.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Positional inputs when given, standard input otherwise.
std::vector<std::string> input_lines(const Options& opt) {
  if (!opt.inputs.empty()) return opt.inputs;
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  if (std::cin.bad()) throw IoError("error reading standard input");
  return split_lines(ss.str());
}

fg::Alphabet load_alphabet(const Options& opt) {
  if (opt.symbols_file.empty()) return fg::Alphabet::letters();
  return fg::Alphabet::from_lines(read_file(opt.symbols_file));
}

fg::RandomSpec random_spec(const Options& opt) {
  fg::RandomSpec spec;
  if (!opt.spec_file.empty()) spec = fg::parse_key_value(read_file(opt.spec_file));
  if (opt.count) spec.count = *opt.count;
  if (opt.syllables) spec.syllables = spec.max_symbol = *opt.syllables;
  if (opt.max_symbol) spec.max_symbol = *opt.max_symbol;
  if (opt.max_exponent) spec.max_abs_exponent = *opt.max_exponent;
  if (opt.seed) spec.seed = *opt.seed;
  spec.validate();
  return spec;
}

/// Prefixes the message of any library error with the 1-based input line.
template <class F>
auto at_line(std::size_t line, F&& f) {
  try {
    return f();
  } catch (const fg::ParseError& e) {
    throw fg::ParseError("line " + std::to_string(line) + ": " + e.message(), e.position());
  }
}

fg::Bindings make_bindings(const Options& opt, const fg::Alphabet& alphabet) {
  fg::Bindings bindings;
  for (const std::string& let : opt.lets) {
    const auto eq = let.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw fg::ParseError("--let expects NAME=WORD[,WORD...], got '" + let + "'", 0);
    }
    const std::string name = let.substr(0, eq);
    fg::WordVector words;
    std::string rest = let.substr(eq + 1);
    std::size_t start = 0;
    while (true) {
      const auto comma = rest.find(',', start);
      const std::string item = trimmed(rest.substr(start, comma - start));
      try {
        words.push_back(fg::parse_canonical(item, alphabet));
      } catch (const fg::ParseError& e) {
        throw fg::ParseError("--let " + name + ": " + e.message(), eq + 1 + start + e.position());
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    bindings[name] = std::move(words);
  }
  if (!opt.randoms.empty()) {
    const fg::RandomSpec spec = random_spec(opt);
    fg::Engine engine(spec.seed);
    for (const std::string& name : opt.randoms) {
      fg::WordVector words;
      for (std::int64_t i = 0; i < spec.count; ++i) words.push_back(fg::random_word(engine, spec));
      bindings[name] = std::move(words);
    }
  }
  return bindings;
}

void print_words(const fg::WordVector& words, const Options& opt, const fg::Alphabet& alphabet) {
  if (opt.format == "interchange") {
    std::cout << fg::serialize(words) << '\n';
    return;
  }
  if (opt.format == "matrix") {
    for (const fg::Word& w : words) std::cout << fg::to_csv(fg::to_matrix(w));
    return;
  }
  for (const fg::Word& w : words) std::cout << fg::format(w, alphabet, opt.strict) << '\n';
}

int run_eval(const Options& opt) {
  const fg::Alphabet alphabet = load_alphabet(opt);
  const fg::Bindings bindings = make_bindings(opt, alphabet);
  print_words(fg::eval_expression(opt.expression, bindings, alphabet), opt, alphabet);
  return kOk;
}

bool looks_like_matrix_row(const std::string& line) {
  static const std::regex row(R"(\s*-?\d+(\s*,\s*-?\d+)*\s*)");
  return std::regex_match(line, row) && trimmed(line) != "0";
}

int run_reduce(const Options& opt) {
  const fg::Alphabet alphabet = load_alphabet(opt);
  std::vector<std::string> lines = input_lines(opt);
  std::string kind = opt.input_kind;
  if (kind == "auto") {
    kind = "canonical";
    for (const std::string& l : lines) {
      if (trimmed(l).empty()) continue;
      if (looks_like_matrix_row(l)) kind = "matrix";
      break;
    }
  }

  fg::WordVector words;
  if (kind == "matrix") {
    if (lines.size() % 2 != 0) {
      throw fg::ParseError("matrix input needs pairs of lines, got " +
                               std::to_string(lines.size()) + " lines",
                           0);
    }
    for (std::size_t i = 0; i < lines.size(); i += 2) {
      words.push_back(at_line(i + 1, [&] {
        return fg::from_matrix(fg::parse_csv(lines[i], lines[i + 1]));
      }));
    }
  } else {
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const std::string item = trimmed(lines[i]);
      if (item.empty()) continue;
      words.push_back(at_line(i + 1, [&] {
        return kind == "compact" ? fg::parse_compact(item) : fg::parse_canonical(item, alphabet);
      }));
    }
  }
  print_words(words, opt, alphabet);
  return kOk;
}

int run_abelianize(const Options& opt) {
  const fg::Alphabet alphabet = load_alphabet(opt);
  std::vector<fg::AbelianWord> images;
  const std::vector<std::string> lines = input_lines(opt);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string item = trimmed(lines[i]);
    if (item.empty()) continue;
    images.push_back(
        fg::abelianize(at_line(i + 1, [&] { return fg::parse_canonical(item, alphabet); })));
  }
  if (opt.format == "text") {
    for (const auto& a : images) std::cout << fg::format(a, alphabet, opt.strict) << '\n';
    return kOk;
  }
  fg::WordVector as_words;
  for (const auto& a : images) {
    std::vector<fg::Syllable> syllables;
    for (const auto& t : a.terms()) syllables.push_back({t.symbol, t.exponent});
    as_words.push_back(fg::Word::from_syllables(std::move(syllables)));
  }
  print_words(as_words, opt, alphabet);
  return kOk;
}

int run_random(const Options& opt) {
  const fg::Alphabet alphabet = load_alphabet(opt);
  print_words(fg::rfree(random_spec(opt)), opt, alphabet);
  return kOk;
}

int run_check_identity(const Options& opt) {
  const fg::Alphabet alphabet = load_alphabet(opt);
  const fg::Bindings bindings = make_bindings(opt, alphabet);
  const std::vector<bool> flags = fg::is_identity(fg::eval_expression(opt.expression, bindings, alphabet));
  bool all = true;
  if (opt.format == "interchange") {
    std::cout << '[';
    for (std::size_t i = 0; i < flags.size(); ++i) {
      std::cout << (i ? "," : "") << (flags[i] ? "true" : "false");
    }
    std::cout << "]\n";
  } else {
    for (bool f : flags) std::cout << (f ? "true" : "false") << '\n';
  }
  for (bool f : flags) all = all && f;
  return opt.assert_all && !all ? kAssertionFailed : kOk;
}

void add_random_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--count", opt.count, "Number of random words per vector (default 7)");
  cmd->add_option("--syllables", opt.syllables,
                  "Raw syllables per word before reduction (default 5)");
  cmd->add_option("--max-symbol", opt.max_symbol,
                  "Largest generator id (default: --syllables if given, else 3)");
  cmd->add_option("--max-exponent", opt.max_exponent,
                  "Largest |exponent| per raw syllable (default 4)");
  cmd->add_option("--seed", opt.seed, "Seed for the mt19937_64 generator (default 0)");
}

void add_binding_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("expression", opt.expression, "Expression to evaluate")->required();
  cmd->add_option("--let", opt.lets, "Bind NAME to comma-separated canonical words")
      ->type_name("NAME=WORD[,WORD...]")
      ->allow_extra_args(false);
  cmd->add_option("--random", opt.randoms, "Bind NAME to a random word vector (see --count etc.)")
      ->type_name("NAME")
      ->allow_extra_args(false);
  add_random_flags(cmd, opt);
}

const char* kExpressionHelp = R"(
Expressions (tightest binding first):
  -x        inverse (unary minus)
  x^y       conjugation y^-1.x.y, left-associative
  x*n, n*x  repetition by an integer or range such as 0:3
  x+y, x-y  juxtaposition, and juxtaposition with the inverse of y
  [x,y]     commutator x^-1.y^-1.x.y
Word literals use the canonical notation (a^2.b^-3, 0 for the identity).
A bare name is a --let/--random binding if one exists, else a generator.
Functions: alpha(ints), abc(ints), sum(words).
)";

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Free-group words: reduce, evaluate, abelianize, generate."};
  app.footer(kExpressionHelp);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--symbols", opt.symbols_file, "Alphabet file, one generator name per line");
  app.add_flag("--strict", opt.strict, "Fail on generators outside the alphabet instead of NA");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "interchange", "matrix"}))
      ->capture_default_str();

  auto* eval = app.add_subcommand("eval", "Evaluate an expression, one result word per line");
  add_binding_flags(eval, opt);

  auto* check = app.add_subcommand("check-identity",
                                    "Evaluate an expression and print true/false per element");
  add_binding_flags(check, opt);
  check->add_flag("--assert", opt.assert_all, "Exit with status 1 unless every element is 0");

  auto* reduce = app.add_subcommand("reduce", "Reduce words read from arguments or stdin");
  reduce->add_option("words", opt.inputs, "Input lines (default: standard input)");
  reduce->add_option("--input", opt.input_kind, "Input notation")
      ->check(CLI::IsMember({"auto", "canonical", "matrix", "compact"}))
      ->capture_default_str();

  auto* abel = app.add_subcommand("abelianize", "Total exponent per generator of each word");
  abel->add_option("words", opt.inputs, "Canonical words (default: standard input)");

  auto* random = app.add_subcommand("random", "Print seeded random words");
  add_random_flags(random, opt);
  random->add_option("--spec", opt.spec_file, "key=value file; explicit flags override it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return run_eval(opt);
    if (*check) return run_check_identity(opt);
    if (*reduce) return run_reduce(opt);
    if (*abel) return run_abelianize(opt);
    if (*random) return run_random(opt);
  } catch (const fg::ParseError& e) {
    std::cerr << "freegroup: parse error: " << e.what() << '\n';
    return kParse;
  } catch (const fg::UnboundIdentifierError& e) {
    std::cerr << "freegroup: " << e.what() << '\n';
    return kParse;
  } catch (const fg::RecyclingError& e) {
    std::cerr << "freegroup: recycling error: " << e.what() << '\n';
    return kDomain;
  } catch (const fg::OverflowError& e) {
    std::cerr << "freegroup: overflow: " << e.what() << '\n';
    return kDomain;
  } catch (const fg::OutOfAlphabetError& e) {
    std::cerr << "freegroup: out of alphabet: " << e.what() << '\n';
    return kDomain;
  } catch (const fg::InvalidSymbolError& e) {
    std::cerr << "freegroup: invalid generator: " << e.what() << '\n';
    return kDomain;
  } catch (const fg::InvalidWordError& e) {
    std::cerr << "freegroup: invalid word: " << e.what() << '\n';
    return kDomain;
  } catch (const fg::InvalidSpecError& e) {
    std::cerr << "freegroup: invalid random spec: " << e.what() << '\n';
    return kConfig;
  } catch (const fg::InvalidAlphabetError& e) {
    std::cerr << "freegroup: invalid alphabet: " << e.what() << '\n';
    return kConfig;
  } catch (const IoError& e) {
    std::cerr << "freegroup: I/O error: " << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}
