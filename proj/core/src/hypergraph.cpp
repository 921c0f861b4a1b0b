#include "hyperseidel/hypergraph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace hyperseidel {

Hypergraph::Hypergraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw InvalidParams("vertex count must be nonnegative");
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (e.size() < 2) throw InvalidParams("edge of size < 2");
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] >= n) throw IndexOutOfRange("edge vertex out of range");
      if (i > 0 && e[i] == e[i - 1]) throw InvalidParams("repeated vertex inside an edge");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

bool Hypergraph::has_edge(const Edge& e) const {
  Edge sorted = e;
  std::sort(sorted.begin(), sorted.end());
  return std::binary_search(edges_.begin(), edges_.end(), sorted);
}

int Hypergraph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges_)
    if (std::binary_search(e.begin(), e.end(), v)) ++d;
  return d;
}

bool is_simple(const Hypergraph& h) {
  const auto& es = h.edges();
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j) {
      const Edge& a = es[i].size() <= es[j].size() ? es[i] : es[j];
      const Edge& b = es[i].size() <= es[j].size() ? es[j] : es[i];
      if (std::includes(b.begin(), b.end(), a.begin(), a.end())) return false;
    }
  return true;
}

bool is_k_uniform(const Hypergraph& h, int k) {
  if (k < 2) throw InvalidParams("k must be >= 2");
  for (const auto& e : h.edges())
    if (static_cast<int>(e.size()) != k) return false;
  return true;
}

bool is_connected(const Hypergraph& h) {
  const int n = h.num_vertices();
  if (n == 0) return false;
  if (n == 1) return h.num_edges() == 0 ? false : true;  // no singleton edges exist
  // BFS on the vertex-edge incidence graph, vertex side only.
  std::vector<std::vector<int>> incident(n);
  for (int ei = 0; ei < h.num_edges(); ++ei)
    for (int v : h.edges()[ei]) incident[v].push_back(ei);
  std::vector<bool> vseen(n, false), eseen(h.num_edges(), false);
  std::queue<int> q;
  q.push(0);
  vseen[0] = true;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int ei : incident[v]) {
      if (eseen[ei]) continue;
      eseen[ei] = true;
      for (int w : h.edges()[ei])
        if (!vseen[w]) {
          vseen[w] = true;
          ++count;
          q.push(w);
        }
    }
  }
  return count == n;
}

int co_degree(const Hypergraph& h, int i, int j) {
  if (i < 0 || i >= h.num_vertices() || j < 0 || j >= h.num_vertices())
    throw IndexOutOfRange("co_degree vertex out of range");
  if (i == j) throw InvalidPair("co_degree needs distinct vertices");
  int c = 0;
  for (const auto& e : h.edges())
    if (std::binary_search(e.begin(), e.end(), i) &&
        std::binary_search(e.begin(), e.end(), j))
      ++c;
  return c;
}

namespace {

// Enumerate k-subsets of 0..n-1, calling f on each.
template <typename F>
void for_each_subset(int n, int k, F&& f) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::pair<Hypergraph, BipartitionLabels> gen_complete_bipartite(int k, int m, int n) {
  if (k < 2 || m < 1 || n < 1) throw InvalidParams("gen_complete_bipartite: need k>=2, m,n>=1");
  BipartitionLabels labels;
  for (int i = 0; i < m; ++i) labels.side_a.push_back(i);
  for (int i = 0; i < n; ++i) labels.side_b.push_back(m + i);
  std::vector<Edge> edges;
  for_each_subset(m + n, k, [&](const std::vector<int>& s) {
    if (s.front() < m && s.back() >= m) edges.push_back(s);
  });
  return {Hypergraph(m + n, std::move(edges)), std::move(labels)};
}

std::pair<Hypergraph, std::vector<std::vector<int>>> gen_turan(
    int n, int k, int r, bool strict_pairwise_distinct) {
  if (r < 2 || k < 2 || n < r) throw InvalidParams("gen_turan: need r>=2, k>=2, n>=r");
  // Parts sized ceil(n/r) for the first n%r parts, floor(n/r) after.
  std::vector<std::vector<int>> parts(r);
  std::vector<int> part_of(n);
  int next = 0;
  for (int p = 0; p < r; ++p) {
    int size = n / r + (p < n % r ? 1 : 0);
    for (int i = 0; i < size; ++i) {
      parts[p].push_back(next);
      part_of[next] = p;
      ++next;
    }
  }
  std::vector<Edge> edges;
  for_each_subset(n, k, [&](const std::vector<int>& s) {
    if (strict_pairwise_distinct) {
      std::set<int> ps;
      for (int v : s) ps.insert(part_of[v]);
      if (static_cast<int>(ps.size()) == k) edges.push_back(s);
    } else {
      bool all_same = true;
      for (int v : s)
        if (part_of[v] != part_of[s[0]]) {
          all_same = false;
          break;
        }
      if (!all_same) edges.push_back(s);
    }
  });
  return {Hypergraph(n, std::move(edges)), std::move(parts)};
}

Hypergraph delete_hyperedge(const Hypergraph& h, const Edge& e) {
  Edge sorted = e;
  std::sort(sorted.begin(), sorted.end());
  if (!h.has_edge(sorted)) throw EdgeNotFound("delete_hyperedge: edge not in hypergraph");
  std::vector<Edge> edges;
  edges.reserve(h.num_edges() - 1);
  for (const auto& f : h.edges())
    if (f != sorted) edges.push_back(f);
  return Hypergraph(h.num_vertices(), std::move(edges));
}

namespace {

int shift_down(int w, int v) { return w > v ? w - 1 : w; }

}  // namespace

Hypergraph strong_delete_vertex(const Hypergraph& h, int v) {
  if (v < 0 || v >= h.num_vertices()) throw IndexOutOfRange("strong_delete_vertex");
  std::vector<Edge> edges;
  for (const auto& e : h.edges()) {
    if (std::binary_search(e.begin(), e.end(), v)) continue;
    Edge shifted;
    for (int w : e) shifted.push_back(shift_down(w, v));
    edges.push_back(std::move(shifted));
  }
  return Hypergraph(h.num_vertices() - 1, std::move(edges));
}

Hypergraph strip_incident_edges(const Hypergraph& h, int v) {
  if (v < 0 || v >= h.num_vertices()) throw IndexOutOfRange("strip_incident_edges");
  std::vector<Edge> edges;
  for (const auto& e : h.edges())
    if (!std::binary_search(e.begin(), e.end(), v)) edges.push_back(e);
  return Hypergraph(h.num_vertices(), std::move(edges));
}

WeakDeletionResult weak_delete_vertex(const Hypergraph& h, int v) {
  if (v < 0 || v >= h.num_vertices()) throw IndexOutOfRange("weak_delete_vertex");
  WeakDeletionResult result;
  std::vector<Edge> edges;
  for (const auto& e : h.edges()) {
    Edge shrunk;
    for (int w : e)
      if (w != v) shrunk.push_back(shift_down(w, v));
    if (shrunk.size() < 2) {
      ++result.dropped_small;
      continue;
    }
    edges.push_back(std::move(shrunk));
  }
  std::sort(edges.begin(), edges.end());
  auto last = std::unique(edges.begin(), edges.end());
  result.merged_duplicates = static_cast<int>(edges.end() - last);
  edges.erase(last, edges.end());
  result.hypergraph = Hypergraph(h.num_vertices() - 1, edges);
  // Containments are preserved, not removed; report them.
  for (size_t i = 0; i < edges.size(); ++i)
    for (size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& a = edges[i].size() <= edges[j].size() ? edges[i] : edges[j];
      const Edge& b = edges[i].size() <= edges[j].size() ? edges[j] : edges[i];
      if (a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end()))
        ++result.containments;
    }
  return result;
}

EdgeType classify_edge(const Edge& e, const BipartitionLabels& labels) {
  if (e.size() != 3) throw NotClassifiable("classify_edge: edge must have 3 vertices");
  int in_a = 0;
  for (int v : e)
    if (std::find(labels.side_a.begin(), labels.side_a.end(), v) != labels.side_a.end())
      ++in_a;
  if (in_a == 1) return EdgeType::TypeI;
  if (in_a == 2) return EdgeType::TypeII;
  throw NotClassifiable("classify_edge: edge does not straddle the bipartition");
}

}  // namespace hyperseidel
