#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "modcyc/chain.hpp"
#include "modcyc/cycle_search.hpp"
#include "modcyc/expansion.hpp"
#include "modcyc/generators.hpp"
#include "modcyc/graph.hpp"
#include "modcyc/spectral.hpp"

namespace modcyc {

/// Edge-list text: a header line "n m", then m lines "u v" (0-indexed).
/// '#' starts a comment; blank lines are ignored. Errors carry line numbers.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::string& path, const Graph& g);

/// One vertex id per line ('#' comments allowed), checked against `order`.
std::vector<Vertex> parse_vertex_list(std::istream& in, std::size_t order);
std::vector<Vertex> read_vertex_list(const std::string& path, std::size_t order);

nlohmann::json to_json(const VertexSet& s);
nlohmann::json to_json(const PathWitness& p);
nlohmann::json to_json(const CycleWitness& c);
nlohmann::json to_json(const ResidueSet& b);
nlohmann::json to_json(const ExpansionReport& r);
nlohmann::json to_json(const SpectralBound& b);
nlohmann::json to_json(const CycleSearchResult& r);
nlohmann::json to_json(const SpectrumModK& s);
nlohmann::json to_json(const ParameterSchedule& s);
nlohmann::json to_json(const StepFailure& f);
nlohmann::json to_json(const ChainState& s);
nlohmann::json to_json(const ResidueCycleReport& r);
nlohmann::json to_json(const DivisibilityResult& r);

}  // namespace modcyc
