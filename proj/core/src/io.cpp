#include "hyperseidel/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hyperseidel {

Hypergraph read_hypergraph_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("invalid hypergraph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw IoError("hypergraph JSON must contain \"n\" and \"edges\"");
  int n;
  std::vector<Edge> edges;
  try {
    n = j.at("n").get<int>();
    for (const auto& je : j.at("edges")) {
      Edge e;
      for (const auto& v : je) e.push_back(v.get<int>() - 1);  // 1-based on disk
      edges.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("invalid hypergraph JSON: ") + e.what());
  }
  try {
    return Hypergraph(n, std::move(edges));
  } catch (const HypergraphError& e) {
    throw IoError(std::string("invalid hypergraph: ") + e.what());
  }
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path);
  return read_hypergraph_json(in);
}

std::string to_hypergraph_json(const Hypergraph& h) {
  nlohmann::json j;
  j["n"] = h.num_vertices();
  j["edges"] = nlohmann::json::array();
  for (const auto& e : h.edges()) {
    nlohmann::json je = nlohmann::json::array();
    for (int v : e) je.push_back(v + 1);
    j["edges"].push_back(std::move(je));
  }
  return j.dump(2) + "\n";
}

void write_hypergraph_file(const Hypergraph& h, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open file for writing: " + path);
  out << to_hypergraph_json(h);
}

}  // namespace hyperseidel
