#include "h22/graph/graph_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "h22/errors.hpp"

namespace h22::graph {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ConfigError("graph line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::optional<long> parse_int(const std::string& tok) {
  long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) return std::nullopt;
  return v;
}

std::optional<double> parse_double(const std::string& tok) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) return std::nullopt;
  return v;
}

// Labels 1..N for the bulk and "d" for the root.
Vertex parse_vertex(const std::string& tok, int n, int line) {
  if (tok == "d") return static_cast<Vertex>(n);
  auto v = parse_int(tok);
  if (!v || *v < 1 || *v > n) fail(line, "vertex label '" + tok + "' must be 1.." + std::to_string(n) + " or d");
  return static_cast<Vertex>(*v - 1);
}

}  // namespace

RootedGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<int> n;
  Eigen::MatrixXd w;
  Eigen::MatrixXi seen;
  int lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto tok = split_ws(raw);
    if (tok.empty()) continue;
    if (tok[0] == "n") {
      if (n) fail(lineno, "duplicate 'n' line");
      if (tok.size() != 2) fail(lineno, "expected 'n <N>'");
      auto v = parse_int(tok[1]);
      if (!v || *v < 1 || *v > 64) fail(lineno, "N must be an integer in 1..64");
      n = static_cast<int>(*v);
      w = Eigen::MatrixXd::Zero(*n + 1, *n + 1);
      seen = Eigen::MatrixXi::Zero(*n + 1, *n + 1);
    } else if (tok[0] == "w") {
      if (!n) fail(lineno, "'n' must precede weight lines");
      if (tok.size() != 4) fail(lineno, "expected 'w <i> <j> <value>'");
      Vertex a = parse_vertex(tok[1], *n, lineno), b = parse_vertex(tok[2], *n, lineno);
      if (a == b) fail(lineno, "self-loop");
      auto val = parse_double(tok[3]);
      if (!val || !std::isfinite(*val) || *val < 0.0) fail(lineno, "weight must be a finite nonnegative number");
      if (seen(a, b)) fail(lineno, "duplicate weight for edge " + tok[1] + "-" + tok[2]);
      seen(a, b) = seen(b, a) = 1;
      w(a, b) = w(b, a) = *val;
    } else {
      fail(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  if (!n) throw ConfigError("graph: missing 'n' line");
  try {
    return RootedGraph(std::move(w));
  } catch (const PreconditionError& e) {
    throw ConfigError(std::string("graph: ") + e.what());
  }
}

RootedGraph load_graph(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw FileError("cannot open graph file " + path.string());
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_graph(buf.str());
}

std::string to_text(const RootedGraph& g) {
  std::ostringstream out;
  out.precision(17);
  out << "n " << g.n() << "\n";
  for (auto e : all_edges(g))
    if (g.weight(e) != 0.0) out << "w " << g.vertex_name(e.a) << " " << g.vertex_name(e.b) << " " << g.weight(e) << "\n";
  return out.str();
}

}  // namespace h22::graph
