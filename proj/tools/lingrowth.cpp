// Command-line front end. Exit codes: 0 success, 1 a check failed, 2 usage or
// input error, 3 a size budget was exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lingrowth.hpp"

using namespace lingrowth;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw io_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

graph read_graph(const std::string& path) { return parse_edge_list(read_text(path)); }

json read_json(const std::string& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::exception& e) {
    throw parse_error("'" + path + "': " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw io_error("cannot write '" + path + "'");
  out << text;
}

rational resolve_c(const graph& g, const std::string& text) {
  if (!text.empty()) return parse_rational(text);
  const rational c = g.empty() ? rational(1) : growth_constant(g);
  std::cerr << "# c = " << to_string(c) << " (growth constant of the input)\n";
  return c;
}

vertex_set parse_vertex_list(const std::string& text) {
  vertex_set out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw parse_error("bad vertex '" + item + "' in list '" + text + "'");
    }
  }
  return normalized(std::move(out));
}

template <typename T>
std::vector<T> parse_int_list(const std::string& text) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(static_cast<T>(std::stoll(item)));
    } catch (const std::exception&) {
      throw parse_error("bad integer '" + item + "' in list '" + text + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Growth, separators, tree-decompositions, stack layouts and subdivisions of graphs"};
  app.require_subcommand(1);
  std::string input = "-", output = "-", c_text;

  auto* generate_cmd = app.add_subcommand("generate", "Emit a graph family as an edge list");
  std::string family_text;
  int size = 0, factors = 2;
  std::uint64_t seed = 1;
  generate_cmd->add_option("family", family_text,
                           "path | cycle | star | complete | complete_binary_tree | grid | random_cubic | "
                           "random_tree | path_product")
      ->required();
  generate_cmd->add_option("size", size, "vertex count (grid, path_product: side length)")->required();
  generate_cmd->add_option("--seed", seed, "seed for random families");
  generate_cmd->add_option("--factors", factors, "number of path factors for path_product");
  generate_cmd->add_option("-o,--output", output);

  auto* growth_cmd = app.add_subcommand("growth", "Growth profile f(r) = max ball size, as CSV");
  int r_max = 0;
  growth_cmd->add_option("input", input, "edge list ('-' for stdin)");
  growth_cmd->add_option("--r-max", r_max, "largest radius (default: vertex count)");

  auto* separate_cmd = app.add_subcommand("separate", "BFS-layer separation of a connected vertex set");
  std::string set_text, alpha_text;
  bool with_trace = false, rebalance = false;
  separate_cmd->add_option("input", input);
  separate_cmd->add_option("--c", c_text, "growth bound c (default: growth constant)");
  separate_cmd->add_option("--set", set_text, "comma-separated vertex set (default: all vertices)");
  separate_cmd->add_option("--alpha", alpha_text, "balance to report against (default 1 - 1/(4c))");
  separate_cmd->add_flag("--trace", with_trace, "include the layer trace");
  separate_cmd->add_flag("--rebalance", rebalance, "lift to disconnected sets and rebalance to 2/3");

  auto* treedecomp_cmd = app.add_subcommand("treedecomp", "Tree-decomposition by recursive separation");
  treedecomp_cmd->add_option("input", input);
  treedecomp_cmd->add_option("--c", c_text);
  treedecomp_cmd->add_option("-o,--output", output);

  auto* checktd_cmd = app.add_subcommand("checktd", "Validate a tree-decomposition against a graph");
  std::string td_path;
  checktd_cmd->add_option("input", input)->required();
  checktd_cmd->add_option("decomposition", td_path, "decomposition JSON")->required();

  auto* tw_cmd = app.add_subcommand("tw-exact", "Exact treewidth of a small graph");
  int tw_limit = exact_treewidth_default_limit;
  std::string witness_path;
  tw_cmd->add_option("input", input);
  tw_cmd->add_option("--limit", tw_limit, "vertex budget (at most 64)");
  tw_cmd->add_option("--witness", witness_path, "write the witness decomposition here");

  auto* stack_cmd = app.add_subcommand("stack", "Stack layout from a tree-decomposition");
  stack_cmd->add_option("input", input);
  stack_cmd->add_option("--td", td_path, "decomposition JSON (default: build one)");
  stack_cmd->add_option("--c", c_text);
  stack_cmd->add_option("-o,--output", output);

  auto* stack_exact_cmd = app.add_subcommand("stack-exact", "Exact stack number of a graph on at most 8 vertices");
  stack_exact_cmd->add_option("input", input);
  stack_exact_cmd->add_option("-o,--output", output);

  auto* subdivide_cmd = app.add_subcommand("subdivide", "Subdivisions with checked growth certificates");
  std::string mode = "host", embedding_path, eps_text = "1", f_text, graph_out;
  std::int64_t budget = default_subdivision_budget;
  subdivide_cmd->add_option("input", input);
  subdivide_cmd->add_option("--mode", mode, "host | uniform")->check(CLI::IsMember({"host", "uniform"}));
  subdivide_cmd->add_option("--embedding", embedding_path,
                            "host embedding JSON (default: the tree itself, or a BFS layering)");
  subdivide_cmd->add_option("--eps", eps_text, "epsilon for host mode");
  subdivide_cmd->add_option("--f", f_text, "polynomial coefficients c0,c1,... for uniform mode");
  subdivide_cmd->add_option("--budget", budget, "largest result vertex count");
  subdivide_cmd->add_option("--graph-out", graph_out, "write the subdivided graph here");
  subdivide_cmd->add_option("-o,--output", output);

  auto* expand_cmd = app.add_subcommand("expand3", "Max-degree-3 graph with the input as a minor");
  std::string map_path;
  expand_cmd->add_option("input", input);
  expand_cmd->add_option("--map", map_path, "write the minor map (new vertex -> original) as JSON");
  expand_cmd->add_option("-o,--output", output);

  auto* verify_cmd = app.add_subcommand("verify", "Run the bound checks on the default corpus");
  std::string suite_text = "all";
  verify_cmd->add_option("--suite", suite_text, "l2.2 | l2.4 | t1.1 | t1.2 | t3.1 | t5 | all");

  auto* explore_cmd = app.add_subcommand("explore-lower-bound", "Growth and treewidth of random cubic graphs");
  std::string sizes_text = "10,12,14,16,18", seeds_text = "1,2,3";
  explore_cmd->add_option("--sizes", sizes_text, "even vertex counts, at most 18");
  explore_cmd->add_option("--seeds", seeds_text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (generate_cmd->parsed()) {
      graph g;
      if (family_text == "random_cubic") g = random_cubic(size, seed);
      else if (family_text == "random_tree") g = random_tree(size, seed);
      else if (family_text == "path_product") g = path_product(size, factors);
      else {
        static const std::pair<const char*, family> names[] = {
            {"path", family::path},         {"cycle", family::cycle},
            {"star", family::star},         {"complete", family::complete},
            {"complete_binary_tree", family::complete_binary_tree}, {"grid", family::grid}};
        bool found = false;
        for (auto [name, f] : names)
          if (family_text == name) {
            g = generate(f, size);
            found = true;
          }
        if (!found) throw parse_error("unknown family '" + family_text + "'");
      }
      write_text(output, serialize_edge_list(g));
      return exit_ok;
    }

    if (growth_cmd->parsed()) {
      const auto g = read_graph(input);
      const auto profile = compute_growth_profile(g, r_max > 0 ? r_max : std::max(1, g.vertex_count()));
      std::cout << "r,f\n";
      for (int r = 1; r <= profile.r_max; ++r) std::cout << r << ',' << profile.at(r) << '\n';
      std::cout << "# c = " << to_string(profile.growth_constant) << " at r = " << profile.argmax_radius << '\n';
      return exit_ok;
    }

    if (separate_cmd->parsed()) {
      const auto g = read_graph(input);
      const rational c = resolve_c(g, c_text);
      const vertex_set x = set_text.empty() ? all_vertices(g) : parse_vertex_list(set_text);
      for (vertex v : x) require_vertex(g, v);
      json out;
      bool ok;
      if (rebalance) {
        const rational alpha = 1 - 1 / (4 * c);
        const auto connected = layer_oracle(g, c);
        const separation_oracle lifted = [&](const vertex_set& s) {
          return separate_possibly_disconnected(g, s, alpha, connected);
        };
        const auto result = rebalance_to_two_thirds(g, x, alpha, lifted);
        const auto report = check_separation(g, x, result.sep, rational(2, 3));
        out = {{"separation", to_json(result.sep)},
               {"report", to_json(report)},
               {"iterations", result.iterations},
               {"cap", rebalance_round_cap(alpha)},
               {"max_step_order", result.max_step_order}};
        ok = report.valid && report.within_alpha;
      } else {
        const rational alpha = alpha_text.empty() ? 1 - 1 / (4 * c) : parse_rational(alpha_text);
        const auto [sep, trace] = bfs_layer_separation(g, x, c);
        const auto report = check_separation(g, x, sep, alpha);
        out = {{"separation", to_json(sep)}, {"report", to_json(report)}};
        if (with_trace) out["trace"] = to_json(trace);
        ok = report.valid;
      }
      std::cout << out.dump(2) << '\n';
      return ok ? exit_ok : exit_check_failed;
    }

    if (treedecomp_cmd->parsed()) {
      const auto g = read_graph(input);
      const auto td = build_tree_decomposition(g, resolve_c(g, c_text));
      write_text(output, to_json(td).dump(2) + "\n");
      return exit_ok;
    }

    if (checktd_cmd->parsed()) {
      const auto g = read_graph(input);
      const auto report = check_tree_decomposition(g, tree_decomposition_from_json(read_json(td_path)));
      json out = {{"valid", report.valid}, {"width", report.width}};
      if (!report.valid) out["failure"] = report.first_failure;
      std::cout << out.dump() << '\n';
      return report.valid ? exit_ok : exit_check_failed;
    }

    if (tw_cmd->parsed()) {
      const auto g = read_graph(input);
      const auto result = exact_treewidth(g, tw_limit);
      std::cout << result.width << '\n';
      if (!witness_path.empty()) write_text(witness_path, to_json(result.witness).dump(2) + "\n");
      return exit_ok;
    }

    if (stack_cmd->parsed()) {
      const auto g = read_graph(input);
      const auto td = td_path.empty() ? build_tree_decomposition(g, resolve_c(g, c_text))
                                       : tree_decomposition_from_json(read_json(td_path));
      const auto layout = layout_from_decomposition(g, td);
      write_text(output, to_json(layout).dump(2) + "\n");
      return check_stack_layout(g, layout).valid ? exit_ok : exit_check_failed;
    }

    if (stack_exact_cmd->parsed()) {
      const auto g = read_graph(input);
      write_text(output, to_json(exact_stack_number(g).witness).dump(2) + "\n");
      return exit_ok;
    }

    if (subdivide_cmd->parsed()) {
      const auto g = read_graph(input);
      subdivision_record rec;
      polynomial_bound certificate;
      if (mode == "host") {
        host_embedding emb;
        if (!embedding_path.empty()) emb = host_embedding_from_json(read_json(embedding_path));
        else if (is_tree(g)) emb = tree_self_embedding(g);
        else emb = layering_embedding(g);
        const rational eps = parse_rational(eps_text);
        rec = subdivide_in_host(g, emb, eps, budget);
        certificate = linear_bound(rational(emb.k) * g.max_degree() + eps, 1);
      } else {
        if (f_text.empty()) throw parse_error("uniform mode needs --f");
        certificate = polynomial_bound::parse(f_text);
        superlinear_options opts;
        opts.size_budget = budget;
        rec = subdivide_uniform_superlinear(g, certificate, true, opts);
      }
      const auto verdict = verify_growth_bound(rec.result, certificate);
      json out = to_json(rec);
      out["certificate"] = {{"bound", "f(r) <= " + certificate.to_string()}, {"holds", verdict.holds}};
      if (verdict.first_violation)
        out["certificate"]["violation"] = {{"r", verdict.first_violation->r}, {"f", verdict.first_violation->f}};
      write_text(output, out.dump(2) + "\n");
      if (!graph_out.empty()) write_text(graph_out, serialize_edge_list(rec.result));
      return verdict.holds ? exit_ok : exit_check_failed;
    }

    if (expand_cmd->parsed()) {
      const auto g = read_graph(input);
      const auto x = expand_to_degree3(g);
      write_text(output, serialize_edge_list(x.result));
      if (!map_path.empty()) write_text(map_path, json(x.minor_map).dump() + "\n");
      return contract_minor_map(x.result, x.minor_map) == g ? exit_ok : exit_check_failed;
    }

    if (verify_cmd->parsed()) {
      const auto reports = run_theorem_suite(default_corpus(), parse_suite(suite_text));
      std::size_t failed = 0;
      for (const auto& r : reports) {
        std::cout << r.to_json().dump() << '\n';
        if (!r.pass) ++failed;
      }
      std::cerr << reports.size() - failed << " of " << reports.size() << " checks passed on the default corpus";
      if (failed != 0) std::cerr << "; " << failed << " failed";
      std::cerr << '\n';
      return failed == 0 ? exit_ok : exit_check_failed;
    }

    if (explore_cmd->parsed()) {
      const auto rows = lower_bound_exploration(parse_int_list<int>(sizes_text),
                                                parse_int_list<std::uint64_t>(seeds_text));
      bool ok = true;
      int above_four = 0;
      for (const auto& row : rows) {
        std::cout << row.to_json().dump() << '\n';
        ok = ok && row.ball_bound_holds;
        if (!row.within_four) ++above_four;
      }
      std::cerr << rows.size() << " graphs; ball bound " << (ok ? "holds" : "FAILS") << "; " << above_four
                << " with c > 4\n";
      return ok ? exit_ok : exit_check_failed;
    }
  } catch (const capacity_error& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return exit_budget;
  } catch (const lingrowth::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
