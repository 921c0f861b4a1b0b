#include "hyperseidel/equitable.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hyperseidel {

void VertexPartition::validate(int n) const {
  std::vector<int> seen(n, 0);
  for (const auto& block : blocks) {
    if (block.empty()) throw InvalidPartition("empty block");
    for (int v : block) {
      if (v < 0 || v >= n) throw InvalidPartition("vertex out of range in partition");
      if (seen[v]++) throw InvalidPartition("vertex repeated across blocks");
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) throw InvalidPartition("partition does not cover all vertices");
}

EquitableCheck check_equitable(const SeidelMatrix& s, const VertexPartition& p) {
  p.validate(s.order());
  const int t = p.num_blocks();
  for (int r = 0; r < t; ++r)
    for (int c = 0; c < t; ++c) {
      bool first = true;
      long long expected = 0;
      int first_row = -1;
      for (int i : p.blocks[r]) {
        long long sum = 0;
        for (int j : p.blocks[c]) sum += s(i, j);
        if (first) {
          expected = sum;
          first_row = i;
          first = false;
        } else if (sum != expected) {
          return {false, EquitableWitness{r, c, first_row, i, expected, sum}};
        }
      }
    }
  return {true, std::nullopt};
}

IntMatrix quotient_matrix(const SeidelMatrix& s, const VertexPartition& p) {
  auto check = check_equitable(s, p);
  if (!check.equitable) throw NotEquitable("quotient_matrix: partition is not equitable");
  const int t = p.num_blocks();
  IntMatrix q(t);
  for (int r = 0; r < t; ++r) {
    const int i = p.blocks[r].front();
    for (int c = 0; c < t; ++c) {
      long long sum = 0;
      for (int j : p.blocks[c]) sum += s(i, j);
      q(r, c) = static_cast<long>(sum);
    }
  }
  return q;
}

bool quotient_spectrum_subset(const SeidelMatrix& s, const VertexPartition& p, double tol) {
  IntMatrix q = quotient_matrix(s, p);
  std::vector<double> roots = real_roots(char_poly_exact(q));
  std::vector<double> eigs = eig_symmetric(s.real_view()).values;
  // Greedy multiset matching: both lists are descending.
  std::vector<bool> used(eigs.size(), false);
  for (double r : roots) {
    bool matched = false;
    for (size_t i = 0; i < eigs.size(); ++i) {
      if (!used[i] && std::abs(eigs[i] - r) <= tol) {
        used[i] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

VertexPartition parse_partition(const std::string& spec) {
  VertexPartition p;
  std::stringstream blocks_stream(spec);
  std::string block_str;
  while (std::getline(blocks_stream, block_str, '|')) {
    std::vector<int> block;
    std::stringstream items(block_str);
    std::string item;
    while (std::getline(items, item, ',')) {
      auto dash = item.find('-');
      try {
        if (dash != std::string::npos) {
          int lo = std::stoi(item.substr(0, dash));
          int hi = std::stoi(item.substr(dash + 1));
          if (lo < 1) throw InvalidPartition("labels are 1-based: " + item);
          if (lo > hi) throw InvalidPartition("bad range: " + item);
          for (int v = lo; v <= hi; ++v) block.push_back(v - 1);
        } else {
          int v = std::stoi(item);
          if (v < 1) throw InvalidPartition("labels are 1-based: " + item);
          block.push_back(v - 1);
        }
      } catch (const std::logic_error&) {
        throw InvalidPartition("cannot parse partition item: " + item);
      }
    }
    if (block.empty()) throw InvalidPartition("empty block in partition spec");
    p.blocks.push_back(std::move(block));
  }
  if (p.blocks.empty()) throw InvalidPartition("empty partition spec");
  return p;
}

}  // namespace hyperseidel
