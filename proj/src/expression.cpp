#include "freegroup/expression.hpp"

#include <algorithm>
#include <cctype>
#include <variant>

#include "text_scan.hpp"

namespace freegroup {

namespace {

constexpr std::int64_t kMaxRangeLength = 1'000'000;

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expression parse() {
    Expression e = expr();
    skip_space();
    if (pos_ != src_.size()) fail(std::string("unexpected '") + src_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static Expression binary(Expression::Kind kind, std::size_t at, Expression lhs,
                           Expression rhs) {
    Expression e;
    e.kind = kind;
    e.position = at;
    e.operands.push_back(std::move(lhs));
    e.operands.push_back(std::move(rhs));
    return e;
  }

  Expression expr() {
    Expression lhs = term();
    while (true) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = binary(Expression::Kind::concat, at, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = binary(Expression::Kind::difference, at, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  Expression term() {
    Expression lhs = power();
    while (true) {
      skip_space();
      const std::size_t at = pos_;
      if (!accept('*')) return lhs;
      lhs = binary(Expression::Kind::repeat, at, std::move(lhs), power());
    }
  }

  Expression power() {
    Expression lhs = unary();
    while (true) {
      skip_space();
      const std::size_t at = pos_;
      if (!accept('^')) return lhs;
      lhs = binary(Expression::Kind::conjugate, at, std::move(lhs), unary());
    }
  }

  Expression unary() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ < src_.size() && src_[pos_] == '-') {
      // A minus glued to digits is part of the integer literal.
      if (pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1])) return integer();
      ++pos_;
      Expression e;
      e.kind = Expression::Kind::negate;
      e.position = at;
      e.operands.push_back(unary());
      return e;
    }
    return primary();
  }

  Expression integer() {
    Expression e;
    e.position = pos_;
    e.kind = Expression::Kind::integer;
    e.first = detail::scan_integer(src_, pos_, "integer");
    e.last = e.first;
    if (pos_ < src_.size() && src_[pos_] == ':') {
      ++pos_;
      e.kind = Expression::Kind::range;
      e.last = detail::scan_integer(src_, pos_, "range bound");
      // Compare in unsigned space so extreme bounds cannot overflow.
      const auto span = e.last >= e.first
                            ? static_cast<std::uint64_t>(e.last) - static_cast<std::uint64_t>(e.first)
                            : static_cast<std::uint64_t>(e.first) - static_cast<std::uint64_t>(e.last);
      if (span >= static_cast<std::uint64_t>(kMaxRangeLength)) {
        throw ParseError("range too long", e.position);
      }
    }
    if (pos_ < src_.size() && (is_name_char(src_[pos_]) || src_[pos_] == '.')) {
      fail("malformed integer");
    }
    return e;
  }

  Expression primary() {
    skip_space();
    if (pos_ == src_.size()) fail("unexpected end of expression");
    const std::size_t at = pos_;
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Expression e = expr();
      expect(')');
      return e;
    }
    if (c == '[') {
      ++pos_;
      Expression lhs = expr();
      expect(',');
      Expression rhs = expr();
      expect(']');
      return binary(Expression::Kind::commutator, at, std::move(lhs), std::move(rhs));
    }
    if (is_digit(c)) return integer();
    if (!is_name_char(c)) fail(std::string("unexpected '") + c + "'");

    std::size_t end = pos_;
    while (end < src_.size() && is_name_char(src_[end])) ++end;
    Expression e;
    e.position = at;
    if (end < src_.size() && src_[end] == '(') {
      e.kind = Expression::Kind::call;
      e.text = std::string(src_.substr(at, end - at));
      if (e.text != "alpha" && e.text != "abc" && e.text != "sum") {
        throw ParseError("unknown function '" + e.text + "'", at);
      }
      pos_ = end + 1;
      e.operands.push_back(expr());
      expect(')');
      return e;
    }
    if (end < src_.size() && (src_[end] == '.' || detail::exponent_follows(src_, end))) {
      e.kind = Expression::Kind::word_literal;
      detail::scan_terms(src_, pos_);
      e.text = std::string(src_.substr(at, pos_ - at));
      return e;
    }
    e.kind = Expression::Kind::identifier;
    e.text = std::string(src_.substr(at, end - at));
    pos_ = end;
    return e;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

using Ints = std::vector<std::int64_t>;
using Value = std::variant<WordVector, Ints>;

class Evaluator {
 public:
  Evaluator(const Bindings& bindings, const Alphabet& alphabet)
      : bindings_(bindings), alphabet_(alphabet) {}

  Value eval(const Expression& e) const {
    using K = Expression::Kind;
    switch (e.kind) {
      case K::word_literal:
        return WordVector{literal(e)};
      case K::identifier:
        return identifier(e);
      case K::integer:
        return Ints{e.first};
      case K::range: {
        Ints out;
        const std::int64_t step = e.last >= e.first ? 1 : -1;
        for (std::int64_t v = e.first;; v += step) {
          out.push_back(v);
          if (v == e.last) break;
        }
        return out;
      }
      case K::negate: {
        Value v = eval(e.operands[0]);
        if (auto* ints = std::get_if<Ints>(&v)) {
          for (auto& n : *ints) n = detail::checked_neg(n);
          return v;
        }
        return inverse(std::get<WordVector>(v));
      }
      case K::concat:
        return concat(words(e.operands[0]), words(e.operands[1]));
      case K::difference:
        return difference(words(e.operands[0]), words(e.operands[1]));
      case K::conjugate:
        return conjugate(words(e.operands[0]), words(e.operands[1]));
      case K::commutator:
        return commutator(words(e.operands[0]), words(e.operands[1]));
      case K::repeat:
        return repetition(e);
      case K::call:
        return call(e);
    }
    throw ParseError("unsupported expression node", e.position);
  }

  WordVector words(const Expression& e) const { return as_words(eval(e), e.position); }

  static WordVector as_words(Value v, std::size_t position) {
    if (auto* w = std::get_if<WordVector>(&v)) return std::move(*w);
    const Ints& ints = std::get<Ints>(v);
    if (std::all_of(ints.begin(), ints.end(), [](std::int64_t n) { return n == 0; })) {
      return WordVector(ints.size());
    }
    throw ParseError("integer used where a word is expected", position);
  }

 private:
  Word literal(const Expression& e) const {
    try {
      return parse_canonical(e.text, alphabet_);
    } catch (const ParseError& err) {
      // Re-anchor the offset from the literal to the whole expression.
      throw ParseError(err.message(), e.position + err.position());
    }
  }

  Value identifier(const Expression& e) const {
    if (auto it = bindings_.find(e.text); it != bindings_.end()) return it->second;
    if (auto symbol = alphabet_.symbol_of(e.text)) return WordVector{generator(*symbol)};
    throw UnboundIdentifierError(e.text, e.position);
  }

  Value repetition(const Expression& e) const {
    Value lhs = eval(e.operands[0]);
    Value rhs = eval(e.operands[1]);
    const bool lhs_int = std::holds_alternative<Ints>(lhs);
    const bool rhs_int = std::holds_alternative<Ints>(rhs);
    if (lhs_int == rhs_int) {
      throw ParseError(lhs_int ? "'*' needs a word operand" : "'*' needs an integer operand",
                       e.position);
    }
    if (rhs_int) return repeat(std::get<WordVector>(lhs), std::get<Ints>(rhs));
    // Keep the left operand's order for recycling: result[i] = n[i] * w[i].
    const Ints& ns = std::get<Ints>(lhs);
    const WordVector& ws = std::get<WordVector>(rhs);
    return zip_with<std::int64_t, Word>(ns, ws,
                                        [](std::int64_t n, const Word& w) { return repeat(w, n); });
  }

  Value call(const Expression& e) const {
    Value arg = eval(e.operands[0]);
    if (e.text == "sum") return WordVector{sum(as_words(std::move(arg), e.operands[0].position))};
    const Ints* ints = std::get_if<Ints>(&arg);
    if (ints == nullptr) throw ParseError(e.text + "() takes integers", e.operands[0].position);
    try {
      return e.text == "alpha" ? alpha(*ints) : abc(*ints);
    } catch (const InvalidSymbolError& err) {
      throw ParseError(err.what(), e.operands[0].position);
    }
  }

  const Bindings& bindings_;
  const Alphabet& alphabet_;
};

}  // namespace

Expression parse_expression(std::string_view src) { return Parser(src).parse(); }

WordVector evaluate(const Expression& expr, const Bindings& bindings, const Alphabet& alphabet) {
  Evaluator ev(bindings, alphabet);
  return Evaluator::as_words(ev.eval(expr), expr.position);
}

WordVector eval_expression(std::string_view src, const Bindings& bindings,
                           const Alphabet& alphabet) {
  return evaluate(parse_expression(src), bindings, alphabet);
}

}  // namespace freegroup
