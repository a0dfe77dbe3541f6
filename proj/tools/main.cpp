// koszulab: depth experiments for powers of whisker edge ideals, polarization
// of monomial ideals and Koszul cycles, and the certificate constructions.
//
// Exit codes: 0 all checks passed, 1 a verification failed, 2 usage or
// capacity error.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kz/errors.hpp"
#include "kz/experiments.hpp"
#include "kz/text_io.hpp"

namespace {

struct GlobalOptions {
  std::string format = "json";
  std::string out_path;
  uint64_t seed = 20240718;
  int jobs = 1;
};

kz::ReportFormat parse_format(const std::string& name) {
  if (name == "json") return kz::ReportFormat::Json;
  if (name == "csv") return kz::ReportFormat::Csv;
  if (name == "text") return kz::ReportFormat::Text;
  throw CLI::ValidationError("--format must be json, csv or text");
}

void deliver(const GlobalOptions& opts, const std::string& payload) {
  if (opts.out_path.empty())
    std::cout << payload;
  else
    kz::write_text_file(opts.out_path, payload);
}

kz::SimpleGraph load_graph(const std::string& path) {
  return kz::parse_graph(kz::read_text_file(path));
}

int exit_code_for(const std::vector<kz::SuiteReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Koszul homology laboratory for monomial ideals and whisker graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", global.out_path, "write output to a file instead of stdout");
  app.add_option("--seed", global.seed, "seed for randomized suites");
  app.add_option("--jobs", global.jobs, "worker threads for graph-level sweeps")
      ->check(CLI::PositiveNumber);

  // depth
  auto* depth_cmd = app.add_subcommand("depth", "depth of S*/I(G*)^k for a graph file");
  std::string depth_graph;
  int depth_power = 0, depth_kmax = 0;
  uint32_t depth_prime = kz::PrimeField::kDefaultPrime;
  uint64_t depth_cap = 200000;
  depth_cmd->add_option("--graph", depth_graph, "graph file")->required();
  depth_cmd->add_option("--power", depth_power, "single power k");
  depth_cmd->add_option("--kmax", depth_kmax, "series 1..kmax");
  depth_cmd->add_option("--prime", depth_prime, "coefficient field prime");
  depth_cmd->add_option("--cap", depth_cap, "lcm-lattice capacity");

  // polarize
  auto* polarize_cmd = app.add_subcommand("polarize", "polarize a monomial ideal file");
  std::string polarize_ideal_path;
  polarize_cmd->add_option("--ideal", polarize_ideal_path, "ideal file")->required();

  // friendly
  auto* friendly_cmd = app.add_subcommand("friendly", "friendly maximal independent set");
  std::string friendly_graph;
  friendly_cmd->add_option("--graph", friendly_graph, "graph file")->required();

  // certificate
  auto* cert_cmd = app.add_subcommand("certificate", "depth-bound certificate for S*/I(G*)^k");
  std::string cert_graph;
  int cert_power = 1;
  uint32_t cert_prime = kz::PrimeField::kDefaultPrime;
  cert_cmd->add_option("--graph", cert_graph, "graph file")->required();
  cert_cmd->add_option("--power", cert_power, "power k")->required();
  cert_cmd->add_option("--prime", cert_prime, "coefficient field prime");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "verification suites");
  verify_cmd->require_subcommand(1);
  auto* verify_main = verify_cmd->add_subcommand("main", "polarized-basis check for an ideal");
  std::string main_ideal_path;
  int main_homdeg = 1;
  uint32_t main_prime = kz::PrimeField::kDefaultPrime;
  verify_main->add_option("--ideal", main_ideal_path, "ideal file")->required();
  verify_main->add_option("--homdeg", main_homdeg, "homological degree i")->required();
  verify_main->add_option("--prime", main_prime, "coefficient field prime");
  auto* verify_whisker = verify_cmd->add_subcommand("whisker", "upper bound on connected graphs");
  auto* verify_tree = verify_cmd->add_subcommand("tree", "equality on labeled trees");
  auto* verify_limit = verify_cmd->add_subcommand("limit", "stabilization at high powers");
  auto* verify_colon = verify_cmd->add_subcommand("colon", "colon identities on random trees");
  int verify_nmax = 4, tree_nmax = 4, limit_nmax = 3, colon_trials = 50, forest_nmax = 0;
  verify_whisker->add_option("--nmax", verify_nmax, "largest vertex count");
  verify_tree->add_option("--nmax", tree_nmax, "largest vertex count");
  verify_tree->add_option("--forest-probe", forest_nmax,
                          "also probe forests up to this size (report only)");
  verify_limit->add_option("--nmax", limit_nmax, "largest vertex count (capped at 3)");
  verify_colon->add_option("--trials", colon_trials, "number of random trees");

  // depth-series
  auto* series_cmd = app.add_subcommand("depth-series", "depth series over a graph family");
  std::string family = "trees";
  int series_nmax = 4, series_kmax = 0;
  uint32_t series_prime = kz::PrimeField::kDefaultPrime;
  uint64_t series_cap = 200000;
  series_cmd->add_option("--family", family, "trees, connected, cycles or paths")
      ->check(CLI::IsMember({"trees", "connected", "cycles", "paths"}));
  series_cmd->add_option("--nmax", series_nmax, "largest vertex count")->required();
  series_cmd->add_option("--kmax", series_kmax, "series length (default: each graph's n)");
  series_cmd->add_option("--prime", series_prime, "coefficient field prime");
  series_cmd->add_option("--cap", series_cap, "lcm-lattice capacity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits clean, usage errors exit 2
  }

  try {
    kz::ReportFormat format = parse_format(global.format);
    kz::ExperimentConfig cfg;
    cfg.seed = global.seed;
    cfg.jobs = global.jobs;

    if (depth_cmd->parsed()) {
      cfg.primes = {depth_prime};
      cfg.lattice_cap = depth_cap;
      kz::SimpleGraph g = load_graph(depth_graph);
      kz::DepthSeries series;
      if (depth_kmax > 0) {
        series = kz::depth_series(g, depth_graph, depth_kmax, cfg);
      } else {
        // single power: compute just that cell
        int k = depth_power > 0 ? depth_power : 1;
        series.graph_id = depth_graph;
        series.n = g.vertex_count();
        kz::DepthCell cell;
        cell.k = k;
        cell.depth = kz::depth_multi_prime(kz::ideal_power(kz::whisker_edge_ideal(g), k), cfg).depth;
        if (kz::is_connected(g) && k <= g.vertex_count()) {
          kz::WhiskerCertificate cert = kz::certificate(g, k, kz::PrimeField(depth_prime));
          if (cert.verified) {
            cell.bound = cert.implied_bound;
            cell.pass = cell.depth <= *cell.bound;
          }
        }
        series.cells.push_back(cell);
      }
      deliver(global, kz::emit_depth_series({series}, format));
      bool ok = !series.truncated;
      for (const auto& c : series.cells) ok = ok && c.pass;
      return ok ? 0 : 1;
    }

    if (polarize_cmd->parsed()) {
      kz::MonomialIdeal ideal = kz::parse_ideal(kz::read_text_file(polarize_ideal_path));
      auto [polarized, space] = kz::polarize_ideal(ideal);
      deliver(global, kz::format_ideal(polarized));
      return 0;
    }

    if (friendly_cmd->parsed()) {
      kz::SimpleGraph g = load_graph(friendly_graph);
      std::vector<int> s = kz::friendly_independent_set(g);
      std::string out;
      for (int v : s) out += (out.empty() ? "" : " ") + std::to_string(v + 1);
      deliver(global, out + "\n");
      return 0;
    }

    if (cert_cmd->parsed()) {
      kz::SimpleGraph g = load_graph(cert_graph);
      kz::WhiskerCertificate cert = kz::certificate(g, cert_power, kz::PrimeField(cert_prime));
      bool ok = kz::verify_certificate(cert);
      deliver(global, kz::certificate_json(cert));
      return ok ? 0 : 1;
    }

    if (verify_cmd->parsed()) {
      if (verify_main->parsed()) {
        kz::MonomialIdeal ideal = kz::parse_ideal(kz::read_text_file(main_ideal_path));
        kz::PolarizedBasisReport report =
            kz::verify_polarized_basis(ideal, main_homdeg, kz::PrimeField(main_prime));
        deliver(global, kz::polarized_basis_report_json(ideal, report));
        return report.pass ? 0 : 1;
      }
      std::vector<kz::SuiteReport> reports;
      if (verify_whisker->parsed()) {
        cfg.nmax = verify_nmax;
        reports = kz::run_verification_suite(cfg, {kz::Suite::Whisker});
      } else if (verify_tree->parsed()) {
        cfg.nmax = tree_nmax;
        reports = kz::run_verification_suite(cfg, {kz::Suite::Trees});
        if (forest_nmax > 0) {
          kz::ExperimentConfig probe_cfg = cfg;
          probe_cfg.nmax = forest_nmax;
          auto probe = kz::run_verification_suite(probe_cfg, {kz::Suite::ForestProbe});
          reports.insert(reports.end(), probe.begin(), probe.end());
        }
      } else if (verify_limit->parsed()) {
        cfg.nmax = limit_nmax;
        reports = kz::run_verification_suite(cfg, {kz::Suite::Limit});
      } else if (verify_colon->parsed()) {
        cfg.trials = colon_trials;
        reports = kz::run_verification_suite(cfg, {kz::Suite::Colon});
      }
      deliver(global, kz::emit_suite_reports(reports, format));
      return exit_code_for(reports);
    }

    if (series_cmd->parsed()) {
      cfg.primes = {series_prime};
      cfg.lattice_cap = series_cap;
      std::vector<kz::DepthSeries> all;
      auto run_one = [&](const kz::SimpleGraph& g, const std::string& id) {
        int kmax = series_kmax > 0 ? series_kmax : g.vertex_count();
        all.push_back(kz::depth_series(g, id, kmax, cfg));
      };
      if (family == "trees") {
        for (int n = 1; n <= series_nmax; ++n) {
          auto trees = kz::enumerate_trees(n);
          for (size_t t = 0; t < trees.size(); ++t)
            run_one(trees[t], "tree-n" + std::to_string(n) + "-" + std::to_string(t));
        }
      } else if (family == "connected") {
        for (int n = 1; n <= series_nmax; ++n) {
          int index = 0;
          kz::for_each_connected_graph(n, [&](const kz::SimpleGraph& g) {
            run_one(g, "conn-n" + std::to_string(n) + "-" + std::to_string(index++));
            return true;
          });
        }
      } else if (family == "cycles") {
        for (int n = 3; n <= series_nmax; ++n) run_one(kz::SimpleGraph::cycle(n), "C" + std::to_string(n));
      } else if (family == "paths") {
        for (int n = 2; n <= series_nmax; ++n) run_one(kz::SimpleGraph::path(n), "P" + std::to_string(n));
      }
      deliver(global, kz::emit_depth_series(all, format));
      for (const auto& s : all) {
        if (s.truncated) return 1;
        for (const auto& c : s.cells)
          if (!c.pass) return 1;
      }
      return 0;
    }
  } catch (const kz::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
