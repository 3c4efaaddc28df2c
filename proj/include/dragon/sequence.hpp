#pragma once

#include <cstdint>
#include <vector>

namespace dragon {

// Crease symbol. L is a left turn of the traversed polygon, R a right turn.
enum class FoldSymbol : std::uint8_t { L, R };

constexpr FoldSymbol complement(FoldSymbol s) {
  return s == FoldSymbol::L ? FoldSymbol::R : FoldSymbol::L;
}

constexpr char to_char(FoldSymbol s) { return s == FoldSymbol::L ? 'L' : 'R'; }

// Inflation law: L for n = 1 mod 4, R for n = 3 mod 4, sigma(n/2) for even n.
// Requires n >= 1 (returns L for n == 0 to stay total).
FoldSymbol sigma(std::uint64_t n);

// Reflection law: sigma(2^k) = L and sigma(2^k - d) = complement(sigma(2^k + d)).
// Independent of `sigma`; used as a cross-check.
FoldSymbol sigma_reflection(std::uint64_t n);

// [sigma(1), ..., sigma(len)].
std::vector<FoldSymbol> prefix(std::uint64_t len);

}  // namespace dragon
