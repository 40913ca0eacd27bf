#include "semispace/sets.hpp"

#include <algorithm>

namespace semispace {

std::vector<SmallSet> inclusion_minimal(std::vector<SmallSet> sets) {
  std::sort(sets.begin(), sets.end(), [](SmallSet a, SmallSet b) {
    int sa = set_size(a), sb = set_size(b);
    return sa != sb ? sa < sb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<SmallSet> out;
  for (SmallSet s : sets) {
    bool dominated = false;
    for (SmallSet kept : out) {
      if (set_subset(kept, s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  return out;
}

std::vector<SmallSet> inclusion_maximal(std::vector<SmallSet> sets) {
  std::sort(sets.begin(), sets.end(), [](SmallSet a, SmallSet b) {
    int sa = set_size(a), sb = set_size(b);
    return sa != sb ? sa > sb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<SmallSet> out;
  for (SmallSet s : sets) {
    bool dominated = false;
    for (SmallSet kept : out) {
      if (set_subset(s, kept)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace semispace
