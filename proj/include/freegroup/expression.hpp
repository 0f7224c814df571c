#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "freegroup/text_io.hpp"
#include "freegroup/vectorized.hpp"

namespace freegroup {

/// Syntax tree for free-group expressions.
///
///   expr    := term (('+' | '-') term)*
///   term    := power ('*' power)*
///   power   := unary ('^' unary)*
///   unary   := '-' unary | primary
///   primary := '(' expr ')' | '[' expr ',' expr ']' | int | int ':' int
///            | name '(' expr ')' | word-literal | identifier
///
/// Binary operators are left-associative. `+` is juxtaposition, binary `-`
/// juxtaposes the inverse, `*` repeats (one operand must be integers), `^` is
/// conjugation and `[x,y]` the commutator. Integers are only meaningful as an
/// operand of `*` or a function argument, except that `0` also denotes the
/// identity word. Functions: alpha(ints), abc(ints), sum(words).
struct Expression {
  enum class Kind {
    word_literal,  // text: canonical literal such as "a^2.b"
    identifier,    // text: bare name, bound variable or generator
    integer,       // first
    range,         // first:last inclusive
    negate,
    concat,
    difference,
    repeat,
    conjugate,
    commutator,
    call,          // text: function name
  };

  Kind kind = Kind::integer;
  std::size_t position = 0;
  std::string text;
  std::int64_t first = 0;
  std::int64_t last = 0;
  std::vector<Expression> operands;
};

/// Throws ParseError with the byte offset of the first problem.
Expression parse_expression(std::string_view src);

/// Named word vectors available to expressions. A bare identifier resolves
/// to a binding first and to an alphabet name otherwise.
using Bindings = std::map<std::string, WordVector, std::less<>>;

/// Evaluates elementwise with recycling. Throws ParseError for integers used
/// as words, UnboundIdentifierError, RecyclingError and OverflowError.
WordVector evaluate(const Expression& expr, const Bindings& bindings,
                    const Alphabet& alphabet = Alphabet::letters());

WordVector eval_expression(std::string_view src, const Bindings& bindings = {},
                           const Alphabet& alphabet = Alphabet::letters());

}  // namespace freegroup
