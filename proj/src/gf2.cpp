#include "qlocal/gf2.hpp"

namespace qlocal {

std::vector<BitVec> nullspace_gf2(const std::vector<BitVec>& rows,
                                  std::size_t width) {
  // Row-reduce a copy, remembering pivot columns.
  std::vector<BitVec> red;
  std::vector<std::size_t> pivot_col;
  for (BitVec r : rows) {
    for (std::size_t i = 0; i < red.size(); ++i)
      if (r.get(pivot_col[i])) r ^= red[i];
    long p = r.lowest_set();
    if (p < 0) continue;
    // Back-substitute to full RREF.
    for (std::size_t i = 0; i < red.size(); ++i)
      if (red[i].get(static_cast<std::size_t>(p))) red[i] ^= r;
    red.push_back(r);
    pivot_col.push_back(static_cast<std::size_t>(p));
  }

  std::vector<bool> is_pivot(width, false);
  for (auto p : pivot_col) is_pivot[p] = true;

  std::vector<BitVec> basis;
  for (std::size_t free = 0; free < width; ++free) {
    if (is_pivot[free]) continue;
    BitVec v(width);
    v.set(free, true);
    for (std::size_t i = 0; i < red.size(); ++i)
      if (red[i].get(free)) v.set(pivot_col[i], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qlocal
