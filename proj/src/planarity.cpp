#include "chroma/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace chroma {

bool planarity_check(const SimpleGraph& g) {
  if (g.n <= 2) return true;
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph bg(g.n);
  for (auto [a, b] : g.edges) boost::add_edge(a, b, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

} // namespace chroma
