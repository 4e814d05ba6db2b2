// mutanta: count, enumerate and verify the mutation class of A_n.
//
// Exit codes: 0 success, 1 a verification found a violation, 2 usage or
// input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <httplib.h>

#include "mutanta/catalog_io.h"
#include "mutanta/combinatorics.h"
#include "mutanta/enumeration.h"
#include "mutanta/explorer_service.h"
#include "mutanta/json_io.h"
#include "mutanta/verify.h"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) {
    throw std::runtime_error("cannot write " + path);
  }
}

struct CountOptions {
  int n = 0;
  bool formula = false;
  bool bfs = false;
  bool orbits = false;
  bool all = false;
};

int run_count(const CountOptions& o, const mutanta::Limits& limits, int jobs) {
  if (o.n < 2) throw std::invalid_argument("count needs n >= 2");
  const bool formula = o.formula || o.all || (!o.bfs && !o.orbits);
  const bool bfs = o.bfs || o.all;
  const bool orbits = o.orbits || o.all;
  std::vector<std::pair<std::string, std::string>> rows;
  if (formula) rows.emplace_back("formula", mutanta::a_closed_form(o.n).str());
  if (bfs) {
    rows.emplace_back("bfs", std::to_string(
        mutanta::enumerate_mutation_class(o.n, limits, jobs).members.size()));
  }
  if (orbits) {
    rows.emplace_back("orbits", std::to_string(
        mutanta::enumerate_triangulations(o.n + 3, limits, jobs).rotation_classes.size()));
  }
  if (rows.size() == 1) {
    std::cout << rows.front().second << "\n";
    return kOk;
  }
  bool agree = true;
  for (const auto& [name, value] : rows) {
    std::cout << name << ": " << value << "\n";
    agree = agree && value == rows.front().second;
  }
  if (o.all && !agree) {
    std::cerr << "counts disagree\n";
    return kViolation;
  }
  return kOk;
}

int run_enumerate(int n, bool triangulations, const mutanta::Limits& limits, int jobs) {
  if (triangulations) {
    const auto catalog = mutanta::enumerate_triangulations(n + 3, limits, jobs);
    std::cout << "polygon_size: " << n + 3 << "\n"
              << "triangulations: " << catalog.members.size() << "\n"
              << "rotation_classes: " << catalog.rotation_classes.size() << "\n";
    for (const auto& [size, count] : mutanta::orbit_statistics(catalog)) {
      std::cout << "orbits_of_size_" << size << ": " << count << "\n";
    }
    return kOk;
  }
  const auto catalog = mutanta::enumerate_mutation_class(n, limits, jobs);
  std::cout << "rank: " << n << "\n"
            << "members: " << catalog.members.size() << "\n"
            << "bfs_depth: " << catalog.stats.depth << "\n"
            << "mutations: " << catalog.stats.mutations << "\n"
            << "level_sizes:";
  for (std::size_t s : catalog.stats.level_sizes) std::cout << " " << s;
  std::cout << "\n";
  return kOk;
}

int run_mutate(const std::string& file, const std::vector<int>& sequence) {
  mutanta::Quiver q = mutanta::parse_quiver(read_input(file));
  for (int k : sequence) q = mutanta::mutate(q, k);
  std::cout << mutanta::to_json(q).dump() << "\n";
  return kOk;
}

int run_flip(const std::string& file, const std::vector<int>& endpoints) {
  if (endpoints.size() % 2 != 0) {
    throw std::invalid_argument("flip takes diagonals as endpoint pairs");
  }
  mutanta::Triangulation t = mutanta::parse_triangulation(read_input(file));
  for (std::size_t i = 0; i < endpoints.size(); i += 2) {
    t = mutanta::flip(t, mutanta::make_diagonal(endpoints[i], endpoints[i + 1],
                                                t.polygon_size()));
  }
  std::cout << mutanta::to_json(t).dump() << "\n";
  return kOk;
}

int run_verify(int n, const std::string& suite, bool json,
               const mutanta::Limits& limits, int jobs) {
  const mutanta::Report report = mutanta::run_suite(suite, n, limits, jobs);
  if (json) {
    std::cout << mutanta::to_json_string(report) << "\n";
  } else {
    std::cout << mutanta::to_text(report);
  }
  return report.ok() ? kOk : kViolation;
}

int run_export(int n, const std::string& format, const std::string& out,
               const mutanta::Limits& limits, int jobs) {
  const auto catalog = mutanta::enumerate_mutation_class(n, limits, jobs);
  write_output(out, format == "dot" ? mutanta::catalog_to_dot(catalog)
                                    : mutanta::catalog_to_jsonl(catalog));
  return kOk;
}

int run_serve(const std::string& host, int port, const mutanta::Limits& limits,
              int jobs) {
  mutanta::ServiceOptions options;
  options.limits = limits;
  options.jobs = jobs;
  mutanta::ExplorerService service(options);
  httplib::Server server;
  service.mount(server);
  std::cerr << "explorer service listening on http://" << host << ":" << port << "\n";
  if (!server.listen(host, port)) {
    std::cerr << "cannot listen on " << host << ":" << port << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quivers of cluster-tilted algebras of type A_n and polygon triangulations"};
  app.require_subcommand(1);
  app.fallthrough();

  int jobs = 0;
  std::optional<int> max_n;
  app.add_option("-j,--jobs", jobs, "Worker threads for enumeration (0 = default)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--max-n", max_n, "Raise or lower every rank limit (default 13)");

  CountOptions count;
  auto* count_cmd = app.add_subcommand("count", "Number of cluster-tilted algebras of type A_n");
  count_cmd->add_option("n", count.n)->required();
  count_cmd->add_flag("--formula", count.formula, "Closed form");
  count_cmd->add_flag("--bfs", count.bfs, "Breadth-first mutation-class enumeration");
  count_cmd->add_flag("--orbits", count.orbits, "Rotation classes of triangulations");
  count_cmd->add_flag("--all", count.all, "All three, failing on disagreement");

  int enumerate_n = 0;
  bool enumerate_triangulations = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumeration statistics");
  enumerate_cmd->add_option("n", enumerate_n)->required();
  enumerate_cmd->add_flag("--triangulations", enumerate_triangulations,
                          "Triangulations of the (n+3)-gon instead of the mutation class");

  std::string mutate_file;
  std::vector<int> mutate_sequence;
  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate a quiver JSON file (- for stdin)");
  mutate_cmd->add_option("file", mutate_file)->required();
  mutate_cmd->add_option("vertices", mutate_sequence, "Vertices, applied left to right");

  std::string flip_file;
  std::vector<int> flip_endpoints;
  auto* flip_cmd = app.add_subcommand("flip", "Flip diagonals of a triangulation JSON file");
  flip_cmd->add_option("file", flip_file)->required();
  flip_cmd->add_option("endpoints", flip_endpoints, "a b [a b ...]");

  int verify_n = 0;
  std::string suite = "bijection";
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify_cmd->add_option("n", verify_n)->required();
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"bijection", "tau", "orbits", "commutation", "lemmas", "structure"}));
  verify_cmd->add_flag("--json", verify_json, "Machine-readable report");

  int export_n = 0;
  std::string format = "jsonl";
  std::string out_path;
  auto* export_cmd = app.add_subcommand("export", "Write the mutation-class catalog");
  export_cmd->add_option("n", export_n)->required();
  export_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "jsonl"}));
  export_cmd->add_option("--out", out_path, "Output path (default stdout)");

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve_cmd = app.add_subcommand("serve", "Run the local explorer HTTP service");
  serve_cmd->add_option("--host", host);
  serve_cmd->add_option("--port", port)->check(CLI::Range(1, 65535));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    mutanta::Limits limits = mutanta::Limits::from_environment();
    if (max_n) limits = limits.with_max_rank(*max_n);

    if (*count_cmd) return run_count(count, limits, jobs);
    if (*enumerate_cmd) return run_enumerate(enumerate_n, enumerate_triangulations, limits, jobs);
    if (*mutate_cmd) return run_mutate(mutate_file, mutate_sequence);
    if (*flip_cmd) return run_flip(flip_file, flip_endpoints);
    if (*verify_cmd) return run_verify(verify_n, suite, verify_json, limits, jobs);
    if (*export_cmd) return run_export(export_n, format, out_path, limits, jobs);
    if (*serve_cmd) return run_serve(host, port, limits, jobs);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
