#pragma once

// Graph serialization: the JSON object form and the "u v" edge-list text form.

#include "oddspectra/graph.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace oddspectra {

/// {"n": int, "edges": [[u,v],...], "labels": [{"subset": int, "parity": 0|1}, ...] | null}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// "# n=<n>" header followed by one "u v" line per edge.
std::string graph_to_edge_list(const Graph& g);
Graph graph_from_edge_list(std::string_view text);

}  // namespace oddspectra
