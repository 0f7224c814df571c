#include "freegroup/vectorized.hpp"

#include <string>

namespace freegroup {

std::size_t recycled_length(std::size_t a, std::size_t b) {
  if (a == b) return a;
  const std::size_t shorter = std::min(a, b);
  const std::size_t longer = std::max(a, b);
  if (shorter == 0 || longer % shorter != 0) {
    throw RecyclingError("cannot recycle operands of lengths " + std::to_string(a) + " and " +
                         std::to_string(b));
  }
  return longer;
}

WordVector concat(std::span<const Word> xs, std::span<const Word> ys) {
  return zip_op([](const Word& x, const Word& y) { return concat(x, y); }, xs, ys);
}

WordVector difference(std::span<const Word> xs, std::span<const Word> ys) {
  return zip_op([](const Word& x, const Word& y) { return x - y; }, xs, ys);
}

WordVector inverse(std::span<const Word> xs) {
  WordVector out;
  out.reserve(xs.size());
  for (const Word& x : xs) out.push_back(inverse(x));
  return out;
}

WordVector repeat(std::span<const Word> xs, std::span<const std::int64_t> ns) {
  return zip_with<Word, std::int64_t>(xs, ns,
                                      [](const Word& x, std::int64_t n) { return repeat(x, n); });
}

WordVector conjugate(std::span<const Word> xs, std::span<const Word> ys) {
  return zip_op([](const Word& x, const Word& y) { return conjugate(x, y); }, xs, ys);
}

WordVector commutator(std::span<const Word> xs, std::span<const Word> ys) {
  return zip_op([](const Word& x, const Word& y) { return commutator(x, y); }, xs, ys);
}

std::vector<AbelianWord> abelianize(std::span<const Word> xs) {
  std::vector<AbelianWord> out;
  out.reserve(xs.size());
  for (const Word& x : xs) out.push_back(abelianize(x));
  return out;
}

std::vector<bool> is_identity(std::span<const Word> xs) {
  std::vector<bool> out;
  out.reserve(xs.size());
  for (const Word& x : xs) out.push_back(is_identity(x));
  return out;
}

std::vector<bool> equal(std::span<const Word> xs, std::span<const Word> ys) {
  const std::size_t n = recycled_length(xs.size(), ys.size());
  std::vector<bool> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = xs[i % xs.size()] == ys[i % ys.size()];
  return out;
}

std::vector<bool> equal(std::span<const AbelianWord> xs, std::span<const AbelianWord> ys) {
  const std::size_t n = recycled_length(xs.size(), ys.size());
  std::vector<bool> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = xs[i % xs.size()] == ys[i % ys.size()];
  return out;
}

Word sum(std::span<const Word> xs) {
  WordBuilder b;
  for (const Word& x : xs) b.append(x);
  return std::move(b).build();
}

WordVector alpha(std::span<const std::int64_t> symbols) {
  WordVector out;
  out.reserve(symbols.size());
  for (std::int64_t s : symbols) out.push_back(generator(s));
  return out;
}

WordVector abc(std::span<const std::int64_t> lengths) {
  WordVector out;
  out.reserve(lengths.size());
  for (std::int64_t n : lengths) out.push_back(abc(n));
  return out;
}

}  // namespace freegroup
