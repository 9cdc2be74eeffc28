#include "cli/config.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace gaussideal::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

struct Located {
  std::string value;
  int line = 0;
};

}  // namespace

ConfigError::ConfigError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(line > 0 ? source + ":" + std::to_string(line) + ": " + message : source + ": " + message),
      line_(line) {}

ProjectorMethod parse_method(const std::string& text) {
  if (text == "lie") return ProjectorMethod::LieAlgebra;
  if (text == "quad") return ProjectorMethod::Quadrature;
  throw std::invalid_argument("unknown projector method '" + text + "' (expected lie or quad)");
}

std::string to_string(ProjectorMethod m) { return m == ProjectorMethod::LieAlgebra ? "lie" : "quad"; }

RunConfig parse_config(std::istream& in, const std::string& source) {
  std::optional<Located> group_name, bound, nmax, tol, method, coarse, out;
  std::vector<Located> vertices;
  std::vector<Located> edges;
  std::string section;
  int line_no = 0;

  auto fail = [&](int line, const std::string& msg) -> ConfigError { return ConfigError(source, line, msg); };
  auto set_once = [&](std::optional<Located>& slot, const std::string& key, const std::string& value) {
    if (slot) throw fail(line_no, "duplicate key '" + key + "' (first set on line " + std::to_string(slot->line) + ")");
    slot = Located{value, line_no};
  };

  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw fail(line_no, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "group" && section != "graph" && section != "truncation" && section != "verify" &&
          section != "output")
        throw fail(line_no, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw fail(line_no, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty()) throw fail(line_no, "key '" + key + "' outside any section");
    if (value.empty()) throw fail(line_no, "empty value for '" + key + "'");

    if (section == "group" && key == "name") {
      set_once(group_name, key, value);
    } else if (section == "graph" && (key == "vertex" || key == "vertices")) {
      const auto names = words(value);
      if (key == "vertex" && names.size() != 1) throw fail(line_no, "'vertex' takes exactly one name");
      for (const auto& n : names) vertices.push_back({n, line_no});
    } else if (section == "graph" && key == "edge") {
      edges.push_back({value, line_no});
    } else if (section == "truncation" && key == "bound") {
      set_once(bound, key, value);
    } else if (section == "verify" && key == "nmax") {
      set_once(nmax, key, value);
    } else if (section == "verify" && key == "tol") {
      set_once(tol, key, value);
    } else if (section == "verify" && key == "method") {
      set_once(method, key, value);
    } else if (section == "verify" && key == "coarse") {
      set_once(coarse, key, value);
    } else if (section == "output" && key == "path") {
      set_once(out, key, value);
    } else {
      throw fail(line_no, "unknown key '" + key + "' in [" + section + "]");
    }
  }

  RunConfig cfg;
  if (!group_name) throw fail(0, "missing [group] name");
  try {
    cfg.group = parse_group(group_name->value);
  } catch (const std::invalid_argument& e) {
    throw fail(group_name->line, e.what());
  }

  for (const auto& v : vertices) {
    try {
      cfg.graph.add_vertex(v.value);
    } catch (const std::invalid_argument& e) {
      throw fail(v.line, e.what());
    }
  }
  if (cfg.graph.num_vertices() == 0) throw fail(0, "graph has no vertices");
  for (const auto& e : edges) {
    const auto parts = words(e.value);
    if (parts.size() != 3) throw fail(e.line, "edge needs 'name source target', got '" + e.value + "'");
    try {
      cfg.graph.add_edge(parts[0], parts[1], parts[2]);
    } catch (const std::invalid_argument& err) {
      throw fail(e.line, err.what());
    }
  }

  if (!bound) throw fail(0, "missing [truncation] bound");
  try {
    cfg.bound = parse_label(cfg.group, bound->value);
    if (cfg.bound.value < 0) throw std::invalid_argument("bound must be nonnegative");
  } catch (const std::invalid_argument& e) {
    throw fail(bound->line, e.what());
  }

  if (nmax) {
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(nmax->value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != nmax->value.size() || n < 1) throw fail(nmax->line, "nmax must be an integer >= 1");
    cfg.n_max = n;
  }
  if (tol) {
    std::size_t used = 0;
    double t = 0.0;
    try {
      t = std::stod(tol->value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tol->value.size() || !(t > 0.0)) throw fail(tol->line, "tol must be a positive number");
    cfg.tol = t;
  }
  if (method) {
    try {
      cfg.method = parse_method(method->value);
    } catch (const std::invalid_argument& e) {
      throw fail(method->line, e.what());
    }
  }
  if (coarse) {
    if (coarse->value == "true" || coarse->value == "on" || coarse->value == "1") {
      cfg.coarse = true;
    } else if (coarse->value == "false" || coarse->value == "off" || coarse->value == "0") {
      cfg.coarse = false;
    } else {
      throw fail(coarse->line, "coarse must be true or false");
    }
  }
  if (out) cfg.out = out->value;
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, "cannot open config file");
  return parse_config(in, path);
}

}  // namespace gaussideal::cli
