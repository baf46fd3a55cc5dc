// hampower: command-line front end.
//
// Exit codes: 0 success, 1 domain or usage error, 2 resource bound, 3 internal invariant breach.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hampower/calculus.hpp"
#include "hampower/errors.hpp"
#include "hampower/graph.hpp"
#include "hampower/lab.hpp"
#include "hampower/oracle.hpp"
#include "hampower/report.hpp"
#include "hampower/rewire.hpp"
#include "hampower/slope.hpp"

namespace hp = hampower;
using nlohmann::json;

namespace {

struct Globals {
  std::string format;
  std::uint64_t seed = 1;
  int threads = 1;
  bool override_limits = false;
};

hp::TableFormat table_format(const Globals& g, hp::TableFormat fallback) {
  return g.format.empty() ? fallback : hp::table_format_from_string(g.format);
}

void require_json(const Globals& g) {
  if (!g.format.empty() && hp::table_format_from_string(g.format) != hp::TableFormat::json) {
    throw hp::DomainError("this command only emits json");
  }
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

hp::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hp::DomainError("cannot open " + path);
  return hp::read_edge_list(in);
}

void emit_graph(const hp::Graph& g, const std::string& out) {
  if (out.empty()) {
    hp::write_edge_list(std::cout, g);
    return;
  }
  std::ofstream f(out);
  if (!f) throw hp::DomainError("cannot write " + out);
  hp::write_edge_list(f, g);
}

std::vector<int> read_ints(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hp::DomainError("cannot open " + path);
  std::vector<int> out;
  std::string token;
  while (in >> token) {
    if (token.front() == '#') {
      std::getline(in, token);
      continue;
    }
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw hp::DomainError("'" + token + "' in " + path + " is not an integer");
    out.push_back(v);
  }
  return out;
}

// "p/q", an integer, a decimal such as 0.025, or "N^a/b" (approximated to 12 digits).
hp::Rational parse_probability(const std::string& text) {
  if (auto caret = text.find('^'); caret != std::string::npos) {
    long base = std::stol(text.substr(0, caret));
    return hp::power_approximation(base, hp::Rational::parse(text.substr(caret + 1)), 12);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::string den = "1" + std::string(text.size() - dot - 1, '0');
    return hp::Rational::parse(digits + "/" + den);
  }
  return hp::Rational::parse(text);
}

json gnp_report(int n, const hp::Rational& p, std::uint64_t seed, const hp::Graph& g) {
  return json{{"n", n}, {"p", p}, {"seed", seed}, {"edges", g.edge_count()}};
}

json decomposition_json(int k, int ell, int r, int t, const hp::Decomposition& d) {
  std::size_t braid_total = 0;
  json per_class = json::array();
  for (const auto& cls : d.braid_edges) {
    per_class.push_back(cls.size());
    braid_total += cls.size();
  }
  const auto path_edges = hp::power_path(d.n, d.m).edge_count();
  return json{{"k", k},
              {"ell", ell},
              {"r", r},
              {"t", t},
              {"n", d.n},
              {"m", d.m},
              {"path_edges", path_edges},
              {"blowup_edges", d.blowup_edges.size()},
              {"braid_edges", per_class},
              {"total", d.blowup_edges.size() + braid_total},
              {"covers", d.covers},
              {"disjoint", d.disjoint},
              {"verified", d.verified}};
}

std::string scan_csv(const std::vector<hp::ScanRow>& rows) {
  std::ostringstream os;
  os << "m,applicable,holds,witness\n";
  for (const auto& r : rows) {
    os << r.m << "," << (r.applicable ? "true" : "false") << "," << (r.holds ? "true" : "false") << ",";
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
      os << (i ? ";" : "") << r.witness[i].first << "=" << r.witness[i].second;
    }
    os << "\n";
  }
  return os.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Exact calculus, constructions and oracles for powers of Hamilton cycles in randomly "
               "augmented graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format: markdown, csv or json")
      ->check(CLI::IsMember({"markdown", "md", "csv", "json"}));
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1, 256));
  app.add_flag("--override-limits", g.override_limits, "Lift the enumeration size limits");

  int k = 0, m = 0, from = 0, to = 0, count = 0, s = 0, i = 0, n = 0, ell = 0, r = 0, t = 1;
  std::string mode, file, out, order_file, v0_file, p_text = "1/2", eps_text;
  bool emit_cert = false;
  std::uint64_t budget = 1000000;
  int L = 0, trials = 100, parts = 0, size = 0;
  std::optional<int> s_opt;

  auto* params = app.add_subcommand("params", "Parameters and classification for one (k, m)");
  params->add_option("--k", k)->required();
  params->add_option("--m", m)->required();

  auto* table = app.add_subcommand("table", "Parameter table for a range of m");
  table->add_option("--k", k)->required();
  table->add_option("--from", from)->required();
  table->add_option("--to", to)->required();

  auto* scan = app.add_subcommand("scan", "Scan an inequality over a range of m");
  scan->add_option("--mode", mode)->required()->check(CLI::IsMember({"ad", "diff", "rcr"}));
  scan->add_option("--k", k)->required();
  scan->add_option("--from", from)->required();
  scan->add_option("--to", to)->required();

  auto* pell = app.add_subcommand("pell", "Values of m with integral lambda");
  pell->add_option("--k", k)->required();
  pell->add_option("--count", count)->required()->check(CLI::Range(1, 1000));

  auto* graph = app.add_subcommand("graph", "Graph constructions and measurements");
  graph->require_subcommand(1);
  auto* g_path = graph->add_subcommand("path", "m-th power of a path");
  g_path->add_option("--n", n)->required();
  g_path->add_option("--m", m)->required();
  g_path->add_option("--out", out);
  auto* g_cycle = graph->add_subcommand("cycle", "m-th power of a cycle");
  g_cycle->add_option("--n", n)->required();
  g_cycle->add_option("--m", m)->required();
  g_cycle->add_option("--out", out);
  auto* g_complete = graph->add_subcommand("complete", "Complete graph");
  g_complete->add_option("--n", n)->required();
  g_complete->add_option("--out", out);
  auto* g_multi = graph->add_subcommand("multipartite", "Complete balanced multipartite graph");
  g_multi->add_option("--parts", parts)->required();
  g_multi->add_option("--size", size)->required();
  g_multi->add_option("--out", out);
  auto* g_braid = graph->add_subcommand("braid", "Braid B(ell, r, t)");
  g_braid->add_option("--ell", ell)->required();
  g_braid->add_option("--r", r)->required();
  g_braid->add_option("--t", t)->required();
  g_braid->add_option("--out", out);
  auto* g_blowup = graph->add_subcommand("blowup", "ell-blow-up of a graph");
  g_blowup->add_option("file", file)->required();
  g_blowup->add_option("--ell", ell)->required();
  g_blowup->add_option("--out", out);
  auto* g_decompose = graph->add_subcommand("decompose", "Block decomposition of a path power");
  g_decompose->add_option("--k", k)->required();
  g_decompose->add_option("--ell", ell)->required();
  g_decompose->add_option("--r", r)->required();
  g_decompose->add_option("--t", t)->required();
  auto* g_density = graph->add_subcommand("density", "Maximum density m_F by parametric flow");
  g_density->add_option("file", file)->required();
  auto* g_cliques = graph->add_subcommand("cliques", "Count s-cliques");
  g_cliques->add_option("file", file)->required();
  g_cliques->add_option("--s", s)->required();

  auto* rewire_cmd = app.add_subcommand("rewire", "Reorder an m-path around a vertex subset");
  rewire_cmd->add_option("--m", m)->required();
  rewire_cmd->add_option("--order", order_file, "File of vertex ids in path order")->required();
  rewire_cmd->add_option("--v0", v0_file, "File of the vertex ids in V_0")->required();
  rewire_cmd->add_flag("--emit-cert", emit_cert, "Print the certificate instead of the order");

  auto* slope = app.add_subcommand("slope", "Edge-count slope from the far-edge LP");
  slope->add_option("--k", k)->required();
  slope->add_option("--m", m)->required();
  slope->add_option("--s", s)->required();

  auto* far_min = app.add_subcommand("far-min", "Minimum i-far count of an (m+1)-segment");
  far_min->add_option("--k", k)->required();
  far_min->add_option("--m", m)->required();
  far_min->add_option("--s", s)->required();
  far_min->add_option("--i", i)->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force oracles");
  oracle->require_subcommand(1);
  auto* o_part = oracle->add_subcommand("min-partition", "Minimum same-class edges over labellings");
  o_part->add_option("--L", L)->required();
  o_part->add_option("--m", m)->required();
  o_part->add_option("--k", k)->required();
  auto* o_def = oracle->add_subcommand("deficit", "Minimum of the largest class deficit");
  o_def->add_option("--L", L)->required();
  o_def->add_option("--m", m)->required();
  o_def->add_option("--k", k)->required();
  auto* o_density = oracle->add_subcommand("density", "Maximum density by subset enumeration");
  o_density->add_option("file", file)->required();
  auto* o_ham = oracle->add_subcommand("ham-power", "Search for the m-th power of a Hamilton cycle");
  o_ham->add_option("file", file)->required();
  o_ham->add_option("--m", m)->required();
  o_ham->add_option("--budget", budget);

  auto* lab = app.add_subcommand("lab", "Seeded random experiments");
  lab->require_subcommand(1);
  auto* l_gnp = lab->add_subcommand("gnp", "Sample G(n, p)");
  l_gnp->add_option("--n", n)->required();
  l_gnp->add_option("--p", p_text)->required();
  l_gnp->add_option("--out", out);
  auto* l_gadget = lab->add_subcommand("gadget", "Minimum-degree gadget");
  l_gadget->add_option("--n", n)->required();
  l_gadget->add_option("--k", k)->required();
  l_gadget->add_option("--eps", eps_text)->required();
  l_gadget->add_option("--out", out);
  auto* l_cliques = lab->add_subcommand("cliques", "Clique counts over repeated samples");
  l_cliques->add_option("--n", n)->required();
  l_cliques->add_option("--s", s)->required();
  l_cliques->add_option("--p", p_text)->required();
  l_cliques->add_option("--trials", trials);
  auto* l_zero = lab->add_subcommand("zero", "Gadget plus G(n, p), searched for a power cycle");
  l_zero->add_option("--k", k)->required();
  l_zero->add_option("--m", m)->required();
  l_zero->add_option("--n", n)->required();
  l_zero->add_option("--p", p_text)->required();
  l_zero->add_option("--eps", eps_text)->required();
  l_zero->add_option("--budget", budget);
  l_zero->add_option("--s", s_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  if (!g.format.empty()) hp::table_format_from_string(g.format);
  hp::EnumerationLimits limits;
  limits.override_limits = g.override_limits;

  if (*params) {
    auto fmt = table_format(g, hp::TableFormat::json);
    if (fmt == hp::TableFormat::json) {
      print(json(hp::profile(k, m)));
    } else {
      std::cout << hp::emit_table(k, m, m, fmt);
    }
  } else if (*table) {
    std::cout << hp::emit_table(k, from, to, table_format(g, hp::TableFormat::markdown));
  } else if (*scan) {
    auto rows = hp::scan_inequalities(hp::scan_mode_from_string(mode), k, from, to);
    if (table_format(g, hp::TableFormat::json) == hp::TableFormat::json) {
      print(json{{"mode", mode}, {"k", k}, {"from", from}, {"to", to}, {"rows", rows}});
    } else {
      std::cout << scan_csv(rows);
    }
  } else if (*pell) {
    require_json(g);
    print(json{{"k", k}, {"solutions", hp::pell_integer_lambdas(k, count)}});
  } else if (*graph) {
    if (*g_path) {
      emit_graph(hp::power_path(n, m), out);
    } else if (*g_cycle) {
      emit_graph(hp::power_cycle(n, m), out);
    } else if (*g_complete) {
      emit_graph(hp::complete_graph(n), out);
    } else if (*g_multi) {
      emit_graph(hp::complete_multipartite(parts, size), out);
    } else if (*g_braid) {
      emit_graph(hp::braid({ell, r, t}), out);
    } else if (*g_blowup) {
      emit_graph(hp::blow_up(load_graph(file), ell), out);
    } else if (*g_decompose) {
      require_json(g);
      print(decomposition_json(k, ell, r, t, hp::decompose_power_path(k, ell, r, t)));
    } else if (*g_density) {
      require_json(g);
      hp::Graph graph_in = load_graph(file);
      print(json{{"file", file}, {"density", hp::max_density(graph_in)}});
    } else if (*g_cliques) {
      require_json(g);
      print(json{{"file", file}, {"s", s}, {"count", hp::clique_count(load_graph(file), s)}});
    }
  } else if (*rewire_cmd) {
    require_json(g);
    hp::LabeledPowerPath path;
    path.m = m;
    path.order = read_ints(order_file);
    hp::validate(path);
    std::vector<int> v0_ids = read_ints(v0_file);
    std::vector<int> position(path.order.empty() ? 0 : *std::max_element(path.order.begin(), path.order.end()) + 1, -1);
    for (int p = 0; p < path.length(); ++p) {
      if (path.order[p] < 0) throw hp::DomainError("vertex ids must be nonnegative");
      position[path.order[p]] = p;
    }
    std::vector<int> v0_positions;
    for (int v : v0_ids) {
      if (v < 0 || v >= static_cast<int>(position.size()) || position[v] < 0) {
        throw hp::DomainError("V_0 vertex " + std::to_string(v) + " is not on the path");
      }
      v0_positions.push_back(position[v]);
    }
    hp::RewireResult res = hp::rewire(path, v0_positions);
    if (!res.certificate.valid()) {
      std::cerr << "error: rewire certificate failed\n" << json(res).dump(2) << "\n";
      return 3;
    }
    if (emit_cert) {
      print(json(res));
    } else {
      print(json{{"m", m}, {"order", res.order}});
    }
  } else if (*slope) {
    require_json(g);
    print(json(hp::zero_statement_slope(k, m, s)));
  } else if (*far_min) {
    require_json(g);
    print(json{{"k", k}, {"m", m}, {"s", s}, {"i", i}, {"minimum", hp::segment_far_minimum(k, m, s, i)}});
  } else if (*oracle) {
    require_json(g);
    if (*o_part) {
      json j = hp::min_partition_edges(L, m, k, limits);
      j["L"] = L;
      j["m"] = m;
      j["k"] = k;
      print(j);
    } else if (*o_def) {
      json j = hp::conjecture_deficit(L, m, k, limits);
      j["L"] = L;
      j["m"] = m;
      j["k"] = k;
      print(j);
    } else if (*o_density) {
      json j = hp::exhaustive_density(load_graph(file));
      j["file"] = file;
      print(j);
    } else if (*o_ham) {
      hp::Graph graph_in = load_graph(file);
      json j = hp::find_power_hamilton(graph_in, m, budget);
      j["file"] = file;
      j["m"] = m;
      j["budget"] = budget;
      print(j);
    }
  } else if (*lab) {
    if (*l_gnp) {
      hp::Rational p = parse_probability(p_text);
      hp::Graph sample = hp::gnp(n, p, g.seed);
      if (out.empty()) {
        hp::write_edge_list(std::cout, sample);
      } else {
        emit_graph(sample, out);
        print(gnp_report(n, p, g.seed, sample));
      }
    } else if (*l_gadget) {
      hp::Gadget gadget = hp::posa_gadget({n, k, hp::Rational::parse(eps_text)});
      if (out.empty()) {
        hp::write_edge_list(std::cout, gadget.graph);
      } else {
        emit_graph(gadget.graph, out);
        print(json(gadget));
      }
    } else if (*l_cliques) {
      require_json(g);
      print(json(hp::clique_experiment(n, s, parse_probability(p_text), trials, g.seed, g.threads)));
    } else if (*l_zero) {
      require_json(g);
      print(json(hp::zero_statement_experiment(k, m, n, parse_probability(p_text),
                                               hp::Rational::parse(eps_text), g.seed, budget, s_opt)));
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hp::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const hp::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const hp::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
