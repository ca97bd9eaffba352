#pragma once

#include <bit>
#include <cstdint>

namespace cyc {

using VertexSet = std::uint64_t;

inline int popcount(VertexSet m) { return std::popcount(m); }

// lowest set bit index; m must be nonzero
inline int lowest_bit(VertexSet m) { return std::countr_zero(m); }

inline VertexSet bit(int v) { return VertexSet{1} << v; }

// bits 0..k-1
inline VertexSet low_mask(int k) {
  return k >= 64 ? ~VertexSet{0} : (VertexSet{1} << k) - 1;
}

inline bool contains(VertexSet m, int v) { return (m >> v) & 1; }

}  // namespace cyc
