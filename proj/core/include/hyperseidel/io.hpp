#ifndef HYPERSEIDEL_IO_HPP
#define HYPERSEIDEL_IO_HPP

#include <iosfwd>
#include <string>

#include "hyperseidel/hypergraph.hpp"

namespace hyperseidel {

struct IoError : HypergraphError {
  using HypergraphError::HypergraphError;
};

/// Hypergraph JSON: {"n": <int>, "edges": [[1-based ascending ints], ...]}.
/// Readers accept unsorted input and canonicalize; writers emit canonical
/// form with edges in lexicographic order.
Hypergraph read_hypergraph_json(std::istream& in);
Hypergraph read_hypergraph_file(const std::string& path);

std::string to_hypergraph_json(const Hypergraph& h);
void write_hypergraph_file(const Hypergraph& h, const std::string& path);

}  // namespace hyperseidel

#endif
