#ifndef HYPERSEIDEL_HYPERGRAPH_HPP
#define HYPERSEIDEL_HYPERGRAPH_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace hyperseidel {

using Edge = std::vector<int>;  // strictly ascending vertex indices, size >= 2

struct HypergraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IndexOutOfRange : HypergraphError {
  using HypergraphError::HypergraphError;
};
struct InvalidPair : HypergraphError {
  using HypergraphError::HypergraphError;
};
struct InvalidParams : HypergraphError {
  using HypergraphError::HypergraphError;
};
struct EdgeNotFound : HypergraphError {
  using HypergraphError::HypergraphError;
};
struct NotClassifiable : HypergraphError {
  using HypergraphError::HypergraphError;
};

/// A finite hypergraph on vertices 0..n-1 with a canonically ordered edge
/// list (each edge sorted ascending, edges sorted lexicographically, no
/// duplicates, no edges of size < 2).
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Canonicalizes the given edges (sorts within and across edges, drops
  /// duplicates). Throws if an edge has size < 2 or a vertex is out of range.
  Hypergraph(int n, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(const Edge& e) const;

  /// Number of edges containing vertex v.
  int degree(int v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

struct BipartitionLabels {
  std::vector<int> side_a;  // V1
  std::vector<int> side_b;  // V2
};

enum class EdgeType {
  TypeI,   // one vertex in V1, two in V2
  TypeII,  // two vertices in V1, one in V2
};

/// Result of a weak vertex deletion; the raw multiset of shrunken edges is
/// summarized so callers can audit what canonicalization discarded.
struct WeakDeletionResult {
  Hypergraph hypergraph;
  int dropped_small = 0;   // edges that shrank below size 2
  int merged_duplicates = 0;
  int containments = 0;    // edge pairs with containment after deletion
};

bool is_simple(const Hypergraph& h);
bool is_k_uniform(const Hypergraph& h, int k);
bool is_connected(const Hypergraph& h);

/// |{e in E : i in e and j in e}|
int co_degree(const Hypergraph& h, int i, int j);

/// C^k_{m,n}: vertices 0..m-1 form V1, m..m+n-1 form V2; edges are all
/// k-subsets meeting both sides. Zero possible edges yields an edgeless
/// hypergraph, not an error.
std::pair<Hypergraph, BipartitionLabels> gen_complete_bipartite(int k, int m, int n);

/// Turan hypergraph T(n,k,r): r near-equal parts (larger parts first); an
/// edge is any k-subset not contained in a single part. With
/// strict_pairwise_distinct, an edge instead requires all k vertices in
/// pairwise different parts.
std::pair<Hypergraph, std::vector<std::vector<int>>> gen_turan(
    int n, int k, int r, bool strict_pairwise_distinct = false);

Hypergraph delete_hyperedge(const Hypergraph& h, const Edge& e);
Hypergraph strong_delete_vertex(const Hypergraph& h, int v);

/// Removes the edges incident to v but keeps the vertex (now isolated).
/// This is the matrix the strong-deletion spectra are computed from: the
/// order stays n, so spectra before and after are comparable pointwise.
Hypergraph strip_incident_edges(const Hypergraph& h, int v);
WeakDeletionResult weak_delete_vertex(const Hypergraph& h, int v);

EdgeType classify_edge(const Edge& e, const BipartitionLabels& labels);

}  // namespace hyperseidel

#endif
