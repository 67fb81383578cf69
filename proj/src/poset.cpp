#include "chroma/poset.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace chroma {

Poset Poset::from_strict_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  Poset p;
  p.n_ = n;
  p.words_ = (n + 63) / 64;
  p.rows_.assign(n, std::vector<uint64_t>(p.words_, 0));
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("poset index out of range");
    if (a == b) throw std::invalid_argument("poset relation is not irreflexive");
    p.rows_[a][b >> 6] |= uint64_t(1) << (b & 63);
  }
  // Transitive closure (bit-parallel Warshall).
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a)
      if (p.less(a, k))
        for (int w = 0; w < p.words_; ++w) p.rows_[a][w] |= p.rows_[k][w];
  for (int a = 0; a < n; ++a)
    if (p.less(a, a)) throw std::invalid_argument("poset relation has a cycle");

  // Hasse arc (a,b): a<b and no c with a<c<b.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!p.less(a, b)) continue;
      bool immediate = true;
      for (int w = 0; w < p.words_ && immediate; ++w) {
        uint64_t mids = p.rows_[a][w];
        while (mids) {
          int c = w * 64 + __builtin_ctzll(mids);
          mids &= mids - 1;
          if (c != b && p.less(c, b)) { immediate = false; break; }
        }
      }
      if (immediate) p.hasse_.emplace_back(a, b);
    }
  std::sort(p.hasse_.begin(), p.hasse_.end());
  return p;
}

std::vector<int> Poset::linear_extension() const {
  std::vector<std::vector<int>> succ(n_);
  std::vector<int> indeg(n_, 0);
  for (auto [x, y] : hasse_) {
    succ[x].push_back(y);
    ++indeg[y];
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int i = 0; i < n_; ++i)
    if (indeg[i] == 0) ready.push(i);
  std::vector<int> order;
  order.reserve(n_);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int y : succ[v])
      if (--indeg[y] == 0) ready.push(y);
  }
  return order;
}

} // namespace chroma
