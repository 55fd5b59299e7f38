// modcyc: command-line front end. Every JSON report embeds the tool version,
// the seed and the full option set, so re-running a report's config reproduces it.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "modcyc/chain.hpp"
#include "modcyc/cycle_search.hpp"
#include "modcyc/errors.hpp"
#include "modcyc/expansion.hpp"
#include "modcyc/generators.hpp"
#include "modcyc/io.hpp"
#include "modcyc/spectral.hpp"

#ifndef MODCYC_VERSION
#define MODCYC_VERSION "0.0.0"
#endif

using json = nlohmann::json;
using namespace modcyc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitHonestFailure = 2;

const char* const kFormats = R"(Formats:
  graph file   header "n m", then m lines "u v" (0-indexed, whitespace separated); '#' starts a comment
  vertex set   one vertex id per line
  alpha, beta  "P/Q", an integer, or a decimal such as 0.75
  reports      JSON on stdout (or --out); exit 0 success, 2 honest search/step failure, 1 usage or contract error)";

struct Common {
  std::string out;
  std::uint64_t seed = 0;
  bool verbose = false;
};

json config_of(const CLI::App* sub) {
  json config = json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_name(false, true);
    if (name.empty() || name == "--help" || name == "-h") continue;
    std::string key = opt->get_single_name();
    if (opt->count() > 0) {
      const auto& results = opt->results();
      if (opt->get_type_size() == 0) {
        config[key] = true;
      } else if (results.size() == 1) {
        config[key] = results.front();
      } else {
        config[key] = results;
      }
    } else if (!opt->get_default_str().empty()) {
      config[key] = opt->get_default_str();
    }
  }
  return config;
}

void emit(const CLI::App* sub, const Common& common, const json& result) {
  json report{{"tool", "modcyc"},
              {"version", MODCYC_VERSION},
              {"command", sub->get_name()},
              {"config", config_of(sub)},
              {"seed", common.seed},
              {"result", result}};
  const std::string text = report.dump(2) + "\n";
  if (common.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(common.out);
    if (!file) throw ContractViolation("cannot write '" + common.out + "'");
    file << text;
  }
}

std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ContractViolation("--params expects key=value pairs, got '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

std::uint64_t param(const std::map<std::string, std::string>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw ContractViolation("--params is missing '" + key + "'");
  try {
    std::size_t used = 0;
    auto value = std::stoull(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(it->second);
    return value;
  } catch (const std::exception&) {
    throw ContractViolation("--params '" + key + "' must be a non-negative integer, got '" + it->second + "'");
  }
}

void print_residue_table(std::ostream& os, const ResidueCycleReport& report) {
  os << "residue  status   length  J\n";
  for (const auto& e : report.residues) {
    os << std::setw(7) << e.r << "  ";
    if (e.cycle) {
      os << "found    " << std::setw(6) << e.cycle->length() << "  {";
      for (std::size_t i = 0; i < e.subset.size(); ++i) os << (i ? "," : "") << e.subset[i];
      os << "}\n";
    } else {
      os << "missing  " << e.failure << "\n";
    }
  }
  os << report.found() << "/" << report.residues.size() << " residues realised";
  if (report.chain) os << ", chain t = " << report.chain->t();
  if (report.failure) os << ", stopped: " << to_string(report.failure->kind) << " (" << report.failure->detail << ")";
  os << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycles of every residue class in expanding graphs: expansion certification, "
               "cleaning, cycle search, chain construction, and sharpness generators."};
  app.footer(kFormats);
  app.set_version_flag("--version", MODCYC_VERSION);
  app.require_subcommand(1);

  Common common;
  std::function<int()> run;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", common.out, "Write the JSON report here instead of stdout");
    sub->add_option("--seed", common.seed, "Random seed")->capture_default_str();
    sub->add_flag("--verbose", common.verbose, "Human-readable summary on stderr");
  };

  // certify
  std::string input;
  std::string alpha_text = "3/4";
  std::size_t exact_threshold = kDefaultExactThreshold;
  bool spectral = false;
  auto* certify = app.add_subcommand("certify", "Certify or refute alpha-expansion");
  certify->add_option("--input", input, "Graph file")->required();
  certify->add_option("--alpha", alpha_text, "Target expansion P/Q")->required();
  certify->add_option("--exact-threshold", exact_threshold, "Largest order for exhaustive certification")
      ->capture_default_str();
  certify->add_flag("--spectral", spectral, "Use the spectral lower bound (regular graphs)");
  add_common(certify);
  certify->callback([&] {
    run = [&] {
      Graph g = read_edge_list(input);
      Rational alpha = Rational::parse(alpha_text);
      ExpansionReport report = spectral ? certify_spectral(g, alpha) : certify_exact(g, alpha, exact_threshold);
      if (common.verbose) std::cerr << "verdict: " << to_string(report.verdict) << "\n";
      emit(certify, common, to_json(report));
      return kExitOk;
    };
  });

  // clean
  std::string beta_text, delete_path, cleaned_out;
  bool no_precondition = false;
  auto* clean = app.add_subcommand("clean", "Removal lemma: find Y so that G-(X u Y) is beta-expanding");
  clean->add_option("--input", input, "Graph file")->required();
  clean->add_option("--alpha", alpha_text, "Expansion of the input P/Q")->required();
  clean->add_option("--beta", beta_text, "Target expansion after cleaning P/Q")->required();
  clean->add_option("--delete", delete_path, "Vertex-set file X")->required();
  clean->add_option("--cleaned-out", cleaned_out, "Write G-(X u Y) as an edge list here");
  clean->add_option("--exact-threshold", exact_threshold, "Largest order for exact cleaning")->capture_default_str();
  clean->add_flag("--no-precondition", no_precondition, "Skip the |X| size precondition");
  add_common(clean);
  clean->callback([&] {
    run = [&] {
      Graph g = read_edge_list(input);
      VertexSet x(g.order(), read_vertex_list(delete_path, g.order()));
      CleanOptions options;
      options.exact_threshold = exact_threshold;
      options.enforce_precondition = !no_precondition;
      CleaningResult result;
      try {
        result = clean_after_deletion(g, Rational::parse(alpha_text), Rational::parse(beta_text), x, options);
      } catch (const CleaningFailed& e) {
        emit(clean, common, {{"failure", "CleaningFailed"}, {"detail", e.what()}});
        return kExitHonestFailure;
      }
      if (!cleaned_out.empty()) write_edge_list(cleaned_out, result.cleaned);
      json j{{"y", to_json(result.y)},
             {"beta", result.beta.to_string()},
             {"certified", result.certified},
             {"rounds", result.rounds},
             {"cleaned_order", result.cleaned.order()},
             {"cleaned_origin", result.cleaned.origin()}};
      j["cleaned_graph_file"] = cleaned_out.empty() ? json(nullptr) : json(cleaned_out);
      emit(clean, common, j);
      return kExitOk;
    };
  });

  // find-cycle
  std::size_t ell = 3, slack = 0;
  std::uint64_t budget = SearchOptions{}.budget;
  auto* find = app.add_subcommand("find-cycle", "Find a cycle with length in [ell, ell + slack]");
  find->add_option("--input", input, "Graph file")->required();
  find->add_option("--ell", ell, "Lower end of the length window")->required();
  find->add_option("--slack", slack, "Window width")->capture_default_str();
  find->add_option("--budget", budget, "Search budget in edge traversals")->capture_default_str();
  add_common(find);
  find->callback([&] {
    run = [&] {
      Graph g = read_edge_list(input);
      SearchOptions options;
      options.budget = budget;
      options.seed = common.seed;
      auto result = find_cycle_in_window(g, {ell, slack}, options);
      emit(find, common, to_json(result));
      return result.found() ? kExitOk : kExitHonestFailure;
    };
  });

  // spectrum
  std::uint64_t k = 3;
  std::size_t max_len = 0;
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
  auto* spectrum = app.add_subcommand("spectrum", "All cycle lengths and their residues mod k");
  spectrum->add_option("--input", input, "Graph file")->required();
  spectrum->add_option("--mod", k, "Modulus k")->required();
  spectrum->add_option("--max-len", max_len, "Only lengths up to this (0 = no limit)")->capture_default_str();
  spectrum->add_option("--budget", enumeration_budget, "Enumeration budget in edge traversals")
      ->capture_default_str();
  add_common(spectrum);
  spectrum->callback([&] {
    run = [&] {
      Graph g = read_edge_list(input);
      std::optional<std::size_t> cap;
      if (max_len > 0) cap = max_len;
      try {
        auto s = spectrum_mod_k(g, k, cap, enumeration_budget);
        emit(spectrum, common, to_json(s));
      } catch (const BudgetExceeded& e) {
        emit(spectrum, common, {{"failure", "BudgetExceeded"}, {"detail", e.what()}});
        return kExitHonestFailure;
      }
      return kExitOk;
    };
  });

  // chain
  std::string mode_text = "best-effort", trace_path;
  std::uint64_t chain_budget = ChainOptions{}.search_budget;
  auto* chain = app.add_subcommand("chain", "Build the cycle chain and one cycle per residue mod k");
  chain->add_option("--input", input, "Graph file")->required();
  chain->add_option("--alpha", alpha_text, "Asserted expansion P/Q")->required();
  chain->add_option("--mod", k, "Modulus k")->required();
  chain->add_option("--mode", mode_text, "strict or best-effort")->capture_default_str();
  chain->add_option("--trace", trace_path, "Write one JSON object per construction step (JSON lines)");
  chain->add_option("--budget", chain_budget, "Budget per cycle search")->capture_default_str();
  chain->add_option("--exact-threshold", exact_threshold, "Largest order for exact cleaning")->capture_default_str();
  add_common(chain);
  chain->callback([&] {
    run = [&] {
      Graph g = read_edge_list(input);
      ChainOptions options;
      options.seed = common.seed;
      options.search_budget = chain_budget;
      options.clean.exact_threshold = exact_threshold;
      auto report = cycles_all_residues(g, Rational::parse(alpha_text), k, parse_mode(mode_text), options);
      if (!trace_path.empty()) {
        std::ofstream trace(trace_path);
        if (!trace) throw ContractViolation("cannot write '" + trace_path + "'");
        for (const auto& entry : report.trace) trace << entry.dump() << "\n";
      }
      if (common.verbose) print_residue_table(std::cerr, report);
      emit(chain, common, to_json(report));
      return report.all_found() ? kExitOk : kExitHonestFailure;
    };
  });

  // generate
  std::string family, params_text, graph_out;
  auto* generate = app.add_subcommand("generate", "Generate a graph family");
  generate->add_option("--family", family, "Graph family")
      ->required()
      ->check(CLI::IsMember({"regular", "subdivided-regular", "subdivided-clique", "complete", "cycle", "path",
                             "star", "petersen", "random"}));
  generate->add_option("--params", params_text,
                       "Comma-separated key=value: regular n,d; subdivided-regular k,n (base order); "
                       "subdivided-clique f,k; complete/cycle/path n; star leaves; random n,permille");
  generate->add_option("--graph-out", graph_out, "Edge-list output (stdout when absent)");
  add_common(generate);
  generate->callback([&] {
    run = [&] {
      auto params = parse_params(params_text);
      Graph g;
      json meta{{"family", family}};
      if (family == "regular") {
        g = random_regular(param(params, "n"), param(params, "d"), common.seed);
      } else if (family == "subdivided-regular") {
        auto c = proposition_counterexample(param(params, "k"), param(params, "n"), common.seed);
        g = c.graph;
        meta["p"] = c.p;
        meta["base_n"] = c.base_n;
      } else if (family == "subdivided-clique") {
        g = subdivided_clique(param(params, "f"), param(params, "k"));
      } else if (family == "complete") {
        g = complete_graph(param(params, "n"));
      } else if (family == "cycle") {
        g = cycle_graph(param(params, "n"));
      } else if (family == "path") {
        g = path_graph(param(params, "n"));
      } else if (family == "star") {
        g = star_graph(param(params, "leaves"));
      } else if (family == "petersen") {
        g = petersen_graph();
      } else {
        g = random_graph(param(params, "n"), static_cast<double>(param(params, "permille")) / 1000.0, common.seed);
      }
      meta["n"] = g.order();
      meta["m"] = g.size();
      if (graph_out.empty()) {
        write_edge_list(std::cout, g);
        return kExitOk;
      }
      write_edge_list(graph_out, g);
      meta["graph_file"] = graph_out;
      emit(generate, common, meta);
      return kExitOk;
    };
  });

  // verify-divisibility
  std::uint64_t p = 2;
  auto* verify = app.add_subcommand("verify-divisibility", "Decide whether every cycle length is a multiple of p");
  verify->add_option("--input", input, "Graph file")->required();
  verify->add_option("--p", p, "Modulus p (2 or odd)")->required();
  add_common(verify);
  verify->callback([&] {
    run = [&] {
      Graph g = read_edge_list(input);
      emit(verify, common, to_json(verify_divisibility(g, p)));
      return kExitOk;
    };
  });

  // demo
  std::size_t demo_n = 1000, demo_d = 6;
  std::string demo_alpha = "3/4";
  auto* demo = app.add_subcommand("demo", "Random regular graph, best-effort chain, residue table");
  demo->add_option("--k", k, "Modulus k")->capture_default_str();
  demo->add_option("--n", demo_n, "Order")->capture_default_str();
  demo->add_option("--d", demo_d, "Degree")->capture_default_str();
  demo->add_option("--alpha", demo_alpha, "Asserted expansion")->capture_default_str();
  add_common(demo);
  demo->callback([&] {
    run = [&] {
      Graph g = random_regular(demo_n, demo_d, common.seed);
      ChainOptions options;
      options.seed = common.seed;
      auto report = cycles_all_residues(g, Rational::parse(demo_alpha), k, Mode::kBestEffort, options);
      std::cout << "random " << demo_d << "-regular graph, n = " << demo_n << ", seed " << common.seed << ", k = " << k
                << "\n";
      print_residue_table(std::cout, report);
      if (!common.out.empty()) emit(demo, common, to_json(report));
      return report.all_found() ? kExitOk : kExitHonestFailure;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    return run();
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitHonestFailure;
  } catch (const GenerationFailed& e) {
    std::cerr << "generation failed: " << e.what() << "\n";
    return kExitHonestFailure;
  } catch (const EigenNonConvergence& e) {
    std::cerr << "eigensolver: " << e.what() << "\n";
    return kExitHonestFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
