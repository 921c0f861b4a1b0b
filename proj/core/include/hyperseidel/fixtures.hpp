#ifndef HYPERSEIDEL_FIXTURES_HPP
#define HYPERSEIDEL_FIXTURES_HPP

#include "hyperseidel/hypergraph.hpp"

namespace hyperseidel {
namespace fixtures {

/// 6-vertex hypergraph whose Seidel energy increases under any single
/// hyperedge deletion (12 -> 6*sqrt(5)).
Hypergraph energy_increase();

/// 8-vertex loose cycle whose Seidel energy decreases under hyperedge
/// deletion (8 + 8*sqrt(2) -> ~18.585).
Hypergraph energy_decrease();

/// Single edge covering all n vertices; energy 2(n-1) before and after
/// deleting the edge.
Hypergraph single_edge(int n);

/// 6-vertex 3-uniform hypergraph where strong deletion of vertex 4 (1-based)
/// increases the Seidel energy.
Hypergraph hstar();

/// C^3_{3,6} with V1 = {1,2,3} (1-based).
Hypergraph c3_3_6();

/// Lookup by name: "h1", "h2", "single-edge" (n=5), "hstar", "c3-3-6".
/// Throws InvalidParams for unknown names.
Hypergraph by_name(const std::string& name);

std::vector<std::string> names();

}  // namespace fixtures
}  // namespace hyperseidel

#endif
