#include "modcyc/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "modcyc/errors.hpp"

namespace modcyc {

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::uint64_t parse_count(const std::string& token, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(std::string("expected a non-negative integer ") + what + ", got '" + token + "'", line);
  }
  return value;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractViolation("cannot open '" + path + "'");
  return in;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, raw)) {
    ++line;
    auto t = tokens(strip_comment(raw));
    if (t.empty()) continue;
    if (t.size() != 2) {
      throw ParseError("expected two fields, got " + std::to_string(t.size()), line);
    }
    if (!have_header) {
      n = parse_count(t[0], line, "vertex count");
      m = parse_count(t[1], line, "edge count");
      if (n > kNoVertex) throw ParseError("vertex count too large", line);
      have_header = true;
      continue;
    }
    if (edges.size() == m) throw ParseError("more than the declared " + std::to_string(m) + " edges", line);
    auto u = parse_count(t[0], line, "endpoint");
    auto v = parse_count(t[1], line, "endpoint");
    if (u >= n || v >= n) {
      throw ParseError("endpoint out of range for n = " + std::to_string(n), line);
    }
    if (u == v) throw ParseError("self-loop at " + std::to_string(u), line);
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(e).second) {
      throw ParseError("repeated edge " + std::to_string(e.first) + " " + std::to_string(e.second), line);
    }
    edges.push_back(e);
  }
  if (!have_header) throw ParseError("missing header line 'n m'", line);
  if (edges.size() != m) {
    throw ParseError("declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()), line);
  }
  return Graph::from_edges(n, edges);
}

Graph read_edge_list(const std::string& path) {
  auto in = open_input(path);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw ContractViolation("cannot write '" + path + "'");
  write_edge_list(out, g);
}

std::vector<Vertex> parse_vertex_list(std::istream& in, std::size_t order) {
  std::vector<Vertex> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto t = tokens(strip_comment(raw));
    if (t.empty()) continue;
    if (t.size() != 1) throw ParseError("expected one vertex id per line", line);
    auto v = parse_count(t[0], line, "vertex id");
    if (v >= order) throw ParseError("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(order), line);
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::vector<Vertex> read_vertex_list(const std::string& path, std::size_t order) {
  auto in = open_input(path);
  return parse_vertex_list(in, order);
}

nlohmann::json to_json(const VertexSet& s) { return s.members(); }

nlohmann::json to_json(const PathWitness& p) { return {{"vertices", p.vertices}, {"length", p.length()}}; }

nlohmann::json to_json(const CycleWitness& c) { return {{"vertices", c.vertices}, {"length", c.length()}}; }

nlohmann::json to_json(const ResidueSet& b) { return b.members(); }

nlohmann::json to_json(const ExpansionReport& r) {
  nlohmann::json j{{"alpha", r.alpha_target.to_string()},
                   {"verdict", to_string(r.verdict)},
                   {"method", to_string(r.method)}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (r.spectral_bound) j["spectral_bound"] = *r.spectral_bound;
  if (r.spectral_tolerance) j["spectral_tolerance"] = *r.spectral_tolerance;
  return j;
}

nlohmann::json to_json(const SpectralBound& b) {
  return {{"degree", b.degree},       {"lambda", b.lambda},
          {"tolerance", b.tolerance}, {"alpha", b.alpha},
          {"alpha_conservative", b.alpha_conservative}, {"iterations", b.iterations}};
}

nlohmann::json to_json(const CycleSearchResult& r) {
  nlohmann::json j{{"found", r.found()}, {"exhaustive", r.exhaustive}, {"steps", r.steps_used}};
  if (r.cycle) j["cycle"] = to_json(*r.cycle);
  return j;
}

nlohmann::json to_json(const SpectrumModK& s) {
  return {{"k", s.k}, {"lengths", s.lengths}, {"residues", to_json(s.residues_present)}};
}

nlohmann::json to_json(const ParameterSchedule& s) {
  nlohmann::json j{{"alpha", s.alpha.to_string()},
                   {"k", s.k},
                   {"p", s.p},
                   {"epsilon", s.epsilon.to_string()},
                   {"alpha_prime", s.alpha_prime.to_string()},
                   {"a1", s.constants.a1.to_string()},
                   {"a2", s.constants.a2.to_string()},
                   {"A", s.constants.A},
                   {"N", s.constants.N},
                   {"D", s.D},
                   {"mode", to_string(s.mode)},
                   {"d_cap", s.d_cap},
                   {"warnings", s.warnings}};
  j["n0"] = s.n0 ? nlohmann::json(*s.n0) : nlohmann::json(nullptr);
  j["n0_log10"] = std::isfinite(static_cast<double>(s.n0_log10)) ? nlohmann::json(static_cast<double>(s.n0_log10))
                                                                 : nlohmann::json("inf");
  return j;
}

nlohmann::json to_json(const StepFailure& f) {
  return {{"kind", to_string(f.kind)}, {"step", f.step}, {"detail", f.detail}};
}

nlohmann::json to_json(const ChainState& s) {
  nlohmann::json cycles = nlohmann::json::array(), paths = nlohmann::json::array();
  for (const auto& c : s.cycles) cycles.push_back(to_json(c));
  for (const auto& p : s.paths) paths.push_back(to_json(p));
  return {{"t", s.t()},          {"reservoir", to_json(s.reservoir)},
          {"S", to_json(s.cleaned_away)}, {"cycles", cycles},
          {"paths", paths},      {"u", s.u},
          {"v", s.v},            {"z", s.z},
          {"B", to_json(s.b)}};
}

nlohmann::json to_json(const ResidueCycleReport& r) {
  nlohmann::json residues = nlohmann::json::array();
  for (const auto& e : r.residues) {
    nlohmann::json j{{"r", e.r}, {"found", e.cycle.has_value()}};
    if (e.cycle) {
      j["cycle"] = to_json(*e.cycle);
      j["J"] = e.subset;
    } else {
      j["failure"] = e.failure;
    }
    residues.push_back(std::move(j));
  }
  nlohmann::json j{{"k", r.k}, {"mode", to_string(r.mode)}, {"residues", residues}, {"found", r.found()}};
  if (r.schedule) j["schedule"] = to_json(*r.schedule);
  if (r.failure) j["failure"] = to_json(*r.failure);
  if (r.chain) j["chain"] = to_json(*r.chain);
  if (r.closing) j["closing_path"] = to_json(*r.closing);
  return j;
}

nlohmann::json to_json(const DivisibilityResult& r) {
  nlohmann::json cert;
  if (r.violating_cycle) {
    cert = {{"kind", "cycle"}, {"cycle", to_json(*r.violating_cycle)}};
  } else if (r.p == 2) {
    cert = {{"kind", "two_coloring"}, {"coloring", r.coloring}};
  } else {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& cls : r.series_classes) {
      nlohmann::json edges = nlohmann::json::array();
      for (auto [u, v] : cls) edges.push_back({u, v});
      classes.push_back({{"size", cls.size()}, {"edges", edges}});
    }
    cert = {{"kind", "series_classes"}, {"classes", classes}};
  }
  return {{"divisible", r.divisible}, {"p", r.p}, {"certificate", cert}};
}

}  // namespace modcyc
