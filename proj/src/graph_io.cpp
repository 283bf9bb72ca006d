#include "oddspectra/graph_io.hpp"

#include <sstream>
#include <stdexcept>

namespace oddspectra {

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (const auto& labels = g.labels()) {
    auto arr = nlohmann::json::array();
    for (const auto& l : *labels) arr.push_back({{"subset", l.subset}, {"parity", l.parity}});
    j["labels"] = std::move(arr);
  } else {
    j["labels"] = nullptr;
  }
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  Graph g(j.at("n").get<std::size_t>());
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
  if (j.contains("labels") && !j["labels"].is_null()) {
    std::vector<DoubleOddLabel> labels;
    for (const auto& l : j["labels"]) {
      const auto parity = l.at("parity").get<int>();
      if (parity != 0 && parity != 1) throw std::invalid_argument("parity must be 0 or 1");
      labels.push_back({l.at("subset").get<std::uint32_t>(), static_cast<std::uint8_t>(parity)});
    }
    g.set_labels(std::move(labels));
  }
  return g;
}

std::string graph_to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# n=" << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph graph_from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line.rfind("# n=", 0) != 0)
    throw std::invalid_argument("edge list must start with a '# n=<n>' header");
  Graph g(std::stoul(line.substr(4)));
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    Vertex u = 0, v = 0;
    if (!(fields >> u >> v)) throw std::invalid_argument("malformed edge line: " + line);
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace oddspectra
