#include "h22/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "h22/cli/csv.hpp"
#include "h22/errors.hpp"
#include "h22/graph/graph_io.hpp"
#include "h22/integrate/derivative.hpp"
#include "h22/integrate/mcmc.hpp"
#include "h22/integrate/monotonicity.hpp"
#include "h22/integrate/parallel.hpp"
#include "h22/verify/run_all.hpp"

namespace h22::cli {

namespace {

nlohmann::ordered_json config_json(const RunConfig& cfg) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  std::istringstream in(canonical_text(cfg));
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find(" = ");
    j[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return j;
}

nlohmann::ordered_json report_json(const char* command, const RunConfig& cfg, const verify::VerificationReport& r) {
  nlohmann::ordered_json out;
  out["command"] = command;
  out["config-digest"] = config_digest(cfg);
  out["config"] = config_json(cfg);
  const auto body = verify::to_json(r);
  for (const auto& [k, v] : body.items()) out[k] = v;
  return out;
}

void log_report(const verify::VerificationReport& r, std::ostream& log) {
  for (const auto& s : r.suites) {
    log << (s.pass() ? "PASS " : "FAIL ") << s.suite << ": " << s.checks.size() - s.failures() << "/"
        << s.checks.size() << " checks\n";
    for (const auto& c : s.checks)
      if (!c.pass) log << "  failed: " << c.name << " (expected " << c.expected << ", got " << c.got << ")\n";
  }
}

verify::VerificationReport run_suites(const RunConfig& cfg, std::vector<std::string> defaults) {
  verify::VerifyConfig vc;
  vc.seed = cfg.seed;
  vc.suites = cfg.suites ? *cfg.suites : std::move(defaults);
  vc.tamper_sign = cfg.tamper_sign;
  vc.threads = cfg.threads;
  return verify::run_all_suites(vc);
}

std::string edge_key(const graph::RootedGraph& g, graph::Edge e) { return g.edge_name(graph::make_edge(e.a, e.b)); }

}  // namespace

graph::RootedGraph resolve_graph(const RunConfig& cfg, std::string* id) {
  if (cfg.graph) {
    if (id) *id = cfg.graph->stem().string();
    return graph::load_graph(*cfg.graph);
  }
  if (id) *id = "uniform-" + std::to_string(cfg.uniform_n);
  return graph::RootedGraph::uniform(cfg.uniform_n, cfg.uniform_w);
}

std::vector<graph::Edge> resolve_edges(const graph::RootedGraph& g, const std::vector<std::string>& names) {
  std::vector<graph::Edge> out;
  for (const auto& name : names) {
    bool found = false;
    for (auto e : graph::all_edges(g)) {
      if (g.edge_name(e) == name || g.edge_name(graph::Edge{e.b, e.a}) == name) {
        out.push_back(e);
        found = true;
        break;
      }
    }
    if (!found) throw ConfigError("unknown edge '" + name + "'");
  }
  return out;
}

int cmd_susy_check(const RunConfig& cfg, std::ostream& log) {
  validate(cfg);
  std::vector<std::string> exact;
  for (const auto& s : verify::suite_names())
    if (verify::is_exact_suite(s)) exact.push_back(s);
  const auto report = run_suites(cfg, exact);
  write_text(cfg.out / "susy_check.json", report_json("susy-check", cfg, report).dump(2) + "\n");
  log_report(report, log);
  log << report.check_count() - report.failure_count() << "/" << report.check_count() << " checks passed\n";
  return report.pass() ? ok : check_failed;
}

int cmd_mono_scan(const RunConfig& cfg, std::ostream& log) {
  validate(cfg);
  std::string id;
  const auto g = resolve_graph(cfg, &id);
  const bool quad = cfg.backend == "quad";
  if (quad && g.n() > kernels::kMaxBulk) throw SizeError("quadrature backend supports N <= 3, got N = " + std::to_string(g.n()));
  if (!quad && g.n() > 6) throw SizeError("MCMC backend supports N <= 6, got N = " + std::to_string(g.n()));
  const auto probes = integrate::select_probes(cfg.probe, g.n());
  const auto edges = cfg.edges.empty() ? graph::all_edges(g) : resolve_edges(g, cfg.edges);
  const std::string digest = config_digest(cfg);

  CsvTable table;
  table.header = {"config_digest", "graph", "edge", "probe", "convex", "W", "K", "K_stderr",
                  "estimate", "stderr", "method", "finite_diff", "pass"};
  std::size_t flagged = 0;
  auto add_row = [&](const std::string& edge, const integrate::Probe& p, double w, double k, double k_se, double est,
                     double se, const char* method, double fd, bool pass) {
    flagged += !pass;
    table.add({digest, id, edge, p.name, p.convex ? "true" : "false", csv_number(w), csv_number(k), csv_number(k_se),
               csv_number(est), csv_number(se), method, csv_number(fd), pass ? "true" : "false"});
  };

  if (quad) {
    integrate::ScanSpec spec;
    spec.w_grid = cfg.w_grid;
    spec.edges = edges;
    spec.quad = cfg.quad;
    spec.tolerance = cfg.tolerance;
    spec.agreement = cfg.agreement;
    spec.threads = cfg.threads;
    const auto reports = integrate::monotonicity_scan(g, id, probes, spec);
    for (const auto& r : reports) {
      const auto& p = *std::find_if(probes.begin(), probes.end(), [&](const auto& q) { return q.name == r.probe; });
      for (std::size_t i = 0; i < r.w_grid.size(); ++i) {
        const bool pass = r.score[i] <= cfg.tolerance && r.finite_diff[i] <= cfg.tolerance && r.error[i] <= cfg.agreement;
        add_row(r.edge_name, p, r.w_grid[i], r.k[i], 0.0, r.score[i], 0.0, "quad-score", r.finite_diff[i], pass);
      }
    }
  } else {
    // One chain per (edge, W); rows keep (edge, probe, W) order.
    struct Cell {
      std::vector<integrate::McEstimate> k;
      std::vector<integrate::Estimate> score, fd;
    };
    const std::size_t nw = cfg.w_grid.size();
    std::vector<Cell> cells(edges.size() * nw);
    integrate::parallel_for(cells.size(), cfg.threads, [&](std::size_t task) {
      const auto e = edges[task / nw];
      const double w = cfg.w_grid[task % nw];
      const auto at = g.with_weight(e, w);
      integrate::ChainSpec cs = cfg.chain;
      cs.seed = cfg.seed ^ verify::fnv1a(edge_key(g, e) + "@" + csv_number(w));
      const auto chain = integrate::mcmc_chain(at, cs);
      const auto sf = integrate::mcmc_edge_factors(at, chain, e, integrate::Method::score);
      const auto ff = integrate::mcmc_edge_factors(at, chain, e, integrate::Method::finite_diff);
      Cell c;
      for (const auto& p : probes) {
        c.k.push_back(integrate::chain_expectation(
            chain,
            [&](std::span<const double> t) {
              std::vector<double> x(t.size());
              for (std::size_t k = 0; k < t.size(); ++k) x[k] = std::exp(t[k]);
              return p.eval(x);
            },
            cs.batches));
        c.score.push_back(integrate::dK_dW_mcmc(chain, sf, p, cs.batches));
        c.fd.push_back(integrate::dK_dW_mcmc(chain, ff, p, cs.batches));
      }
      cells[task] = std::move(c);
    });
    for (std::size_t ei = 0; ei < edges.size(); ++ei)
      for (std::size_t q = 0; q < probes.size(); ++q)
        for (std::size_t wi = 0; wi < nw; ++wi) {
          const auto& c = cells[ei * nw + wi];
          const auto& s = c.score[q];
          add_row(edge_key(g, edges[ei]), probes[q], cfg.w_grid[wi], c.k[q].mean, c.k[q].std_error, s.value,
                  s.std_error, "mcmc-score", c.fd[q].value, s.value <= 3.0 * s.std_error);
        }
  }

  write_text(cfg.out / "mono_scan.csv", table.to_string());
  log << "mono-scan " << id << " (N = " << g.n() << ", " << cfg.backend << "): " << table.rows.size() << " rows, "
      << flagged << " flagged\n";
  if (cfg.expect_violations) return flagged > 0 ? ok : check_failed;
  return flagged == 0 ? ok : check_failed;
}

int cmd_partition_reroot_reduce(const RunConfig& cfg, std::ostream& log) {
  validate(cfg);
  const auto report = run_suites(cfg, {"partition", "ward", "rerooting", "schur", "twopoint"});
  write_text(cfg.out / "partition_reroot_reduce.json",
             report_json("partition-reroot-reduce", cfg, report).dump(2) + "\n");
  CsvTable table;
  table.header = {"config_digest", "suite", "check", "inputs_digest", "expected", "got", "tolerance", "pass"};
  const std::string digest = config_digest(cfg);
  for (const auto& s : report.suites)
    for (const auto& c : s.checks)
      table.add({digest, c.suite, c.name, verify::hex_digest(c.inputs), c.expected, c.got,
                 c.exact ? "exact" : csv_number(c.tolerance), c.pass ? "true" : "false"});
  write_text(cfg.out / "residuals.csv", table.to_string());
  log_report(report, log);
  return report.pass() ? ok : check_failed;
}

int cmd_export_plotdata(const RunConfig& cfg, std::ostream& log) {
  const auto input = cfg.input ? *cfg.input : cfg.out / "mono_scan.csv";
  if (!std::filesystem::exists(input)) throw FileError("missing input " + input.string() + " (run mono-scan first)");
  const auto scan = read_csv(input);
  CsvTable out;
  out.header = {"config_digest", "graph", "edge", "probe", "quantity", "W", "estimate", "stderr"};
  if (!scan.header.empty()) {
    auto col = [&](const std::string& name) {
      const auto it = std::find(scan.header.begin(), scan.header.end(), name);
      if (it == scan.header.end()) throw FileError(input.string() + ": missing column '" + name + "'");
      return static_cast<std::size_t>(it - scan.header.begin());
    };
    const auto c_digest = col("config_digest"), c_graph = col("graph"), c_edge = col("edge"), c_probe = col("probe"),
               c_w = col("W"), c_k = col("K"), c_kse = col("K_stderr"), c_est = col("estimate"), c_se = col("stderr");
    for (const char* quantity : {"K", "dK/dW"})
      for (const auto& r : scan.rows) {
        const bool k = std::string(quantity) == "K";
        out.add({r[c_digest], r[c_graph], r[c_edge], r[c_probe], quantity, r[c_w], k ? r[c_k] : r[c_est],
                 k ? r[c_kse] : r[c_se]});
      }
  }
  write_text(cfg.out / "plotdata.csv", out.to_string());
  log << "plotdata: " << out.rows.size() << " rows from " << input.string() << "\n";
  return ok;
}

}  // namespace h22::cli
