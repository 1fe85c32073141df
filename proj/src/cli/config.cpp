#include "h22/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "h22/errors.hpp"
#include "h22/verify/identity_check.hpp"

namespace h22::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <class T>
T parse_number(const std::string& v, const char* what) {
  T x{};
  const auto* end = v.data() + v.size();
  auto [ptr, ec] = std::from_chars(v.data(), end, x);
  if (ec != std::errc() || ptr != end) throw ConfigError(std::string("expected ") + what);
  if constexpr (std::is_floating_point_v<T>)
    if (!std::isfinite(x)) throw ConfigError(std::string("expected finite ") + what);
  return x;
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("expected true or false");
}

std::filesystem::path resolve(const std::string& v, const std::filesystem::path& base) {
  std::filesystem::path p(v);
  return p.is_relative() && !base.empty() ? base / p : p;
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::filesystem::path&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table{
      {"seed", [](RunConfig& c, const std::string& v, auto&) { c.seed = parse_number<std::uint64_t>(v, "unsigned integer"); }},
      {"suites", [](RunConfig& c, const std::string& v, auto&) { c.suites = split_list(v); }},
      {"tamper_sign", [](RunConfig& c, const std::string& v, auto&) { c.tamper_sign = parse_bool(v); }},
      {"graph", [](RunConfig& c, const std::string& v, const auto& base) { c.graph = resolve(v, base); }},
      {"uniform_n", [](RunConfig& c, const std::string& v, auto&) { c.uniform_n = parse_number<int>(v, "integer"); }},
      {"uniform_w", [](RunConfig& c, const std::string& v, auto&) { c.uniform_w = parse_number<double>(v, "number"); }},
      {"w_grid",
       [](RunConfig& c, const std::string& v, auto&) {
         c.w_grid.clear();
         for (const auto& item : split_list(v)) c.w_grid.push_back(parse_number<double>(item, "number list"));
       }},
      {"edges", [](RunConfig& c, const std::string& v, auto&) { c.edges = split_list(v); }},
      {"probe", [](RunConfig& c, const std::string& v, auto&) { c.probe = v; }},
      {"backend", [](RunConfig& c, const std::string& v, auto&) { c.backend = v; }},
      {"quad.truncation",
       [](RunConfig& c, const std::string& v, auto&) { c.quad.truncation = parse_number<double>(v, "number"); }},
      {"quad.nodes", [](RunConfig& c, const std::string& v, auto&) { c.quad.nodes = parse_number<int>(v, "integer"); }},
      {"mcmc.steps", [](RunConfig& c, const std::string& v, auto&) { c.chain.steps = parse_number<long>(v, "integer"); }},
      {"mcmc.burn_in",
       [](RunConfig& c, const std::string& v, auto&) { c.chain.burn_in = parse_number<long>(v, "integer"); }},
      {"mcmc.scale", [](RunConfig& c, const std::string& v, auto&) { c.chain.scale = parse_number<double>(v, "number"); }},
      {"mcmc.batches",
       [](RunConfig& c, const std::string& v, auto&) { c.chain.batches = parse_number<int>(v, "integer"); }},
      {"tolerance", [](RunConfig& c, const std::string& v, auto&) { c.tolerance = parse_number<double>(v, "number"); }},
      {"agreement", [](RunConfig& c, const std::string& v, auto&) { c.agreement = parse_number<double>(v, "number"); }},
      {"threads", [](RunConfig& c, const std::string& v, auto&) { c.threads = parse_number<int>(v, "integer"); }},
      {"out", [](RunConfig& c, const std::string& v, const auto& base) { c.out = resolve(v, base); }},
      {"expect_violations", [](RunConfig& c, const std::string& v, auto&) { c.expect_violations = parse_bool(v); }},
      {"input", [](RunConfig& c, const std::string& v, const auto& base) { c.input = resolve(v, base); }},
  };
  return table;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s;
}

}  // namespace

RunConfig parse_config(std::string_view text, const std::filesystem::path& base) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const std::string where = "config line " + std::to_string(line_no) + ": ";
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError(where + "unknown key '" + key + "'");
    if (!seen.insert(key).second) throw ConfigError(where + "duplicate key '" + key + "'");
    try {
      it->second(cfg, value, base);
    } catch (const ConfigError& e) {
      throw ConfigError(where + "key '" + key + "': " + e.what());
    }
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw FileError("cannot open config file " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), path.parent_path());
}

void validate(const RunConfig& cfg) {
  if (cfg.backend != "quad" && cfg.backend != "mcmc") throw ConfigError("backend must be 'quad' or 'mcmc'");
  if (cfg.w_grid.empty()) throw ConfigError("w_grid must not be empty");
  for (double w : cfg.w_grid)
    if (!(w > 0.0)) throw ConfigError("w_grid values must be positive");
  if (cfg.uniform_n < 1) throw ConfigError("uniform_n must be at least 1");
  if (!(cfg.uniform_w > 0.0)) throw ConfigError("uniform_w must be positive");
  if (!(cfg.quad.truncation > 0.0)) throw ConfigError("quad.truncation must be positive");
  if (cfg.quad.nodes != 0 && cfg.quad.nodes < 2) throw ConfigError("quad.nodes must be 0 (default) or at least 2");
  if (!(cfg.tolerance >= 0.0) || !(cfg.agreement >= 0.0)) throw ConfigError("tolerances must be non-negative");
  if (cfg.threads < 0) throw ConfigError("threads must be non-negative");
  integrate::validate(cfg.chain);
}

std::string canonical_text(const RunConfig& cfg) {
  std::ostringstream s;
  auto num = [](double v) { return verify::format_double(v); };
  s << "seed = " << cfg.seed << "\n";
  s << "suites = " << (cfg.suites ? join(*cfg.suites) : "(default)") << "\n";
  s << "tamper_sign = " << (cfg.tamper_sign ? "true" : "false") << "\n";
  s << "graph = " << (cfg.graph ? cfg.graph->generic_string() : "(uniform)") << "\n";
  s << "uniform_n = " << cfg.uniform_n << "\n";
  s << "uniform_w = " << num(cfg.uniform_w) << "\n";
  std::vector<std::string> grid;
  for (double w : cfg.w_grid) grid.push_back(num(w));
  s << "w_grid = " << join(grid) << "\n";
  s << "edges = " << (cfg.edges.empty() ? "(all)" : join(cfg.edges)) << "\n";
  s << "probe = " << cfg.probe << "\n";
  s << "backend = " << cfg.backend << "\n";
  s << "quad.truncation = " << num(cfg.quad.truncation) << "\n";
  s << "quad.nodes = " << cfg.quad.nodes << "\n";
  s << "mcmc.steps = " << cfg.chain.steps << "\n";
  s << "mcmc.burn_in = " << cfg.chain.burn_in << "\n";
  s << "mcmc.scale = " << num(cfg.chain.scale) << "\n";
  s << "mcmc.batches = " << cfg.chain.batches << "\n";
  s << "tolerance = " << num(cfg.tolerance) << "\n";
  s << "agreement = " << num(cfg.agreement) << "\n";
  s << "expect_violations = " << (cfg.expect_violations ? "true" : "false") << "\n";
  s << "input = " << (cfg.input ? cfg.input->generic_string() : "(out/mono_scan.csv)") << "\n";
  return s.str();
}

std::string config_digest(const RunConfig& cfg) { return verify::hex_digest(canonical_text(cfg)); }

}  // namespace h22::cli
