#pragma once

#include <cstdint>
#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

namespace neckcat {

// Subsets of {0,...,31} as bitmasks.  Ranks throughout the library are
// capped well below 32; constructors enforce this.
using Mask = std::uint32_t;

inline constexpr int kMaxRank = 30;

struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct size_cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int popcount(Mask m) { return std::popcount(m); }

inline bool mask_contains(Mask m, int i) { return (m >> i) & 1u; }

inline Mask mask_range(int lo, int hi) {  // {lo,...,hi}, empty if hi < lo
  if (hi < lo) return 0;
  return ((hi >= 31 ? ~0u : ((1u << (hi + 1)) - 1u))) & ~((lo == 0) ? 0u : ((1u << lo) - 1u));
}

inline std::vector<int> mask_to_list(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

inline Mask list_to_mask(const std::vector<int>& xs) {
  Mask m = 0;
  for (int x : xs) {
    if (x < 0 || x > kMaxRank) throw invalid_input("mask element out of range");
    m |= (1u << x);
  }
  return m;
}

// Insert a new slot at position `pos`: elements >= pos shift up, the new
// slot is absent from the set.
inline Mask mask_insert_slot(Mask m, int pos) {
  Mask low = m & ((pos == 0) ? 0u : ((1u << pos) - 1u));
  Mask high = (m & ~((pos == 0) ? 0u : ((1u << pos) - 1u))) << 1;
  return low | high;
}

// Delete the slot at position `pos`: elements > pos shift down.
inline Mask mask_delete_slot(Mask m, int pos) {
  Mask low = m & ((pos == 0) ? 0u : ((1u << pos) - 1u));
  Mask high = (m >> 1) & ~((pos == 0) ? 0u : ((1u << pos) - 1u));
  return low | high;
}

// Index of element i within mask m (i must be in m).
inline int mask_index_of(Mask m, int i) {
  return popcount(m & ((i == 0) ? 0u : ((1u << i) - 1u)));
}

// k-th smallest element of m, 0-indexed.
inline int mask_nth(Mask m, int k) {
  for (int i = 0; i <= 31; ++i)
    if (mask_contains(m, i) && k-- == 0) return i;
  throw invalid_input("mask_nth out of range");
}

inline std::string mask_to_string(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int i : mask_to_list(m)) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

}  // namespace neckcat
