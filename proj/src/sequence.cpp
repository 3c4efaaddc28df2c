#include "dragon/sequence.hpp"

#include <bit>

namespace dragon {

FoldSymbol sigma(std::uint64_t n) {
  if (n == 0) return FoldSymbol::L;
  n >>= std::countr_zero(n);
  return (n & 2u) == 0 ? FoldSymbol::L : FoldSymbol::R;
}

FoldSymbol sigma_reflection(std::uint64_t n) {
  if (n == 0) return FoldSymbol::L;
  bool flipped = false;
  // For 2^k < n < 2^(k+1): sigma(n) = complement(sigma(2^(k+1) - n)), and
  // 2^(k+1) - n < 2^k, so each step drops at least one bit.
  while (!std::has_single_bit(n)) {
    const std::uint64_t lower = std::bit_floor(n);
    n = 2 * lower - n;
    flipped = !flipped;
  }
  return flipped ? FoldSymbol::R : FoldSymbol::L;
}

std::vector<FoldSymbol> prefix(std::uint64_t len) {
  std::vector<FoldSymbol> out;
  out.reserve(len);
  for (std::uint64_t i = 1; i <= len; ++i) out.push_back(sigma(i));
  return out;
}

}  // namespace dragon
