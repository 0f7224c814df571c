#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

#include "freegroup/word.hpp"

namespace freegroup {

using WordVector = std::vector<Word>;

/// Result length when recycling operands of lengths `a` and `b`.
///
/// Equal lengths, a length of 1, or a shorter length that exactly divides the
/// longer one are accepted; anything else throws RecyclingError. Two empty
/// operands give an empty result, but an empty operand cannot be recycled
/// against a nonempty one.
std::size_t recycled_length(std::size_t a, std::size_t b);

/// result[i] = op(xs[i % |xs|], ys[i % |ys|]).
template <class A, class B, class Op>
auto zip_with(std::span<const A> xs, std::span<const B> ys, Op&& op)
    -> std::vector<std::decay_t<std::invoke_result_t<Op&, const A&, const B&>>> {
  const std::size_t n = recycled_length(xs.size(), ys.size());
  std::vector<std::decay_t<std::invoke_result_t<Op&, const A&, const B&>>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(op(xs[i % xs.size()], ys[i % ys.size()]));
  }
  return out;
}

template <class Op>
WordVector zip_op(Op&& op, std::span<const Word> xs, std::span<const Word> ys) {
  return zip_with<Word, Word>(xs, ys, std::forward<Op>(op));
}

WordVector concat(std::span<const Word> xs, std::span<const Word> ys);
WordVector difference(std::span<const Word> xs, std::span<const Word> ys);
WordVector inverse(std::span<const Word> xs);
WordVector repeat(std::span<const Word> xs, std::span<const std::int64_t> ns);
WordVector conjugate(std::span<const Word> xs, std::span<const Word> ys);
WordVector commutator(std::span<const Word> xs, std::span<const Word> ys);
std::vector<AbelianWord> abelianize(std::span<const Word> xs);

std::vector<bool> is_identity(std::span<const Word> xs);
std::vector<bool> equal(std::span<const Word> xs, std::span<const Word> ys);
std::vector<bool> equal(std::span<const AbelianWord> xs, std::span<const AbelianWord> ys);

/// Left-to-right juxtaposition of every element; the empty vector sums to the
/// identity.
Word sum(std::span<const Word> xs);

/// Single-generator words, one per id.
WordVector alpha(std::span<const std::int64_t> symbols);
/// Cumulative words a, a.b, a.b.c, ... one per length.
WordVector abc(std::span<const std::int64_t> lengths);

}  // namespace freegroup
