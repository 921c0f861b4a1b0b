#include "hyperseidel/fixtures.hpp"

namespace hyperseidel {
namespace fixtures {

// Edge lists below use 0-based indices (the JSON format is 1-based).

Hypergraph energy_increase() {
  return Hypergraph(6, {{0, 1, 2}, {0, 3, 4}, {1, 4, 5}, {2, 3, 5}});
}

Hypergraph energy_decrease() {
  return Hypergraph(8, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {0, 6, 7}});
}

Hypergraph single_edge(int n) {
  if (n < 2) throw InvalidParams("single_edge: need n >= 2");
  Edge e;
  for (int i = 0; i < n; ++i) e.push_back(i);
  return Hypergraph(n, {e});
}

Hypergraph hstar() {
  return Hypergraph(6, {{0, 1, 2}, {0, 1, 4}, {0, 2, 5}, {0, 4, 5}, {1, 3, 5}, {2, 3, 4}});
}

Hypergraph c3_3_6() {
  return gen_complete_bipartite(3, 3, 6).first;
}

Hypergraph by_name(const std::string& name) {
  if (name == "h1") return energy_increase();
  if (name == "h2") return energy_decrease();
  if (name == "single-edge") return single_edge(5);
  if (name == "hstar") return hstar();
  if (name == "c3-3-6") return c3_3_6();
  throw InvalidParams("unknown fixture: " + name);
}

std::vector<std::string> names() {
  return {"h1", "h2", "single-edge", "hstar", "c3-3-6"};
}

}  // namespace fixtures
}  // namespace hyperseidel
