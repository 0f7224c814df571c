"""Free group on finitely many generators (C++ core)."""

from ._core import (
    AbelianWord,
    Alphabet,
    Error,
    InvalidAlphabetError,
    InvalidSpecError,
    InvalidSymbolError,
    InvalidWordError,
    OutOfAlphabetError,
    OverflowError,
    ParseError,
    RandomSpec,
    RecyclingError,
    UnboundIdentifierError,
    Word,
    abc,
    abelian_sum,
    abelianize,
    alpha,
    commutator,
    concat,
    conjugate,
    deserialize,
    eval_expression,
    format_word,
    from_matrix,
    generator,
    inverse,
    parse_canonical,
    parse_compact,
    repeat,
    rfree,
    serialize,
    to_matrix,
    word_sum,
)

__all__ = [name for name in dir() if not name.startswith("_")]
