#ifndef SEMISPACE_SETS_HPP
#define SEMISPACE_SETS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace semispace {

// Subsets of a small ground set as bitmasks. Elements are 0-based internally;
// every external surface (JSON, CLI, error text) is 1-based.
using SmallSet = std::uint32_t;

inline int set_size(SmallSet s) { return std::popcount(s); }

inline bool set_contains(SmallSet s, int i) { return (s >> i) & 1u; }

inline SmallSet set_add(SmallSet s, int i) { return s | (SmallSet{1} << i); }

inline SmallSet set_remove(SmallSet s, int i) { return s & ~(SmallSet{1} << i); }

inline bool set_subset(SmallSet a, SmallSet b) { return (a & ~b) == 0; }

inline SmallSet full_set(int n) {
  return n >= 32 ? ~SmallSet{0} : (SmallSet{1} << n) - 1;
}

inline std::vector<int> set_elements(SmallSet s) {
  std::vector<int> out;
  for (SmallSet t = s; t; t &= t - 1) out.push_back(std::countr_zero(t));
  return out;
}

inline SmallSet set_from_elements(const std::vector<int>& elems) {
  SmallSet s = 0;
  for (int e : elems) s = set_add(s, e);
  return s;
}

// Sorted 1-based element list for output.
inline std::vector<int> set_elements_1based(SmallSet s) {
  auto v = set_elements(s);
  for (int& e : v) ++e;
  return v;
}

// Keeps only the inclusion-minimal sets; output sorted by (size, mask).
std::vector<SmallSet> inclusion_minimal(std::vector<SmallSet> sets);

// Keeps only the inclusion-maximal sets; output sorted by mask.
std::vector<SmallSet> inclusion_maximal(std::vector<SmallSet> sets);

}  // namespace semispace

#endif
