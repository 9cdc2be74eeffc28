#pragma once

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>

#include "gaussideal/graph.hpp"
#include "gaussideal/group.hpp"
#include "gaussideal/reduction.hpp"

namespace gaussideal::cli {

/// Malformed configuration; `line` is 1-based, 0 when the problem is not tied to a line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& source, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

struct RunConfig {
  GroupId group = GroupId::U1;
  Graph graph;
  IrrepLabel bound;
  std::optional<int> n_max;
  double tol = 1e-8;
  ProjectorMethod method = ProjectorMethod::LieAlgebra;
  bool coarse = false;
  std::optional<std::string> out;
};

/// Parses the sectioned key-value format:
///
///   # comment
///   [group]
///   name = SU2                 # U1 or SU2
///   [graph]
///   vertices = x y             # or one `vertex = x` line per vertex
///   edge = e1 x y              # name source target
///   [truncation]
///   bound = 1/2                # |n| <= bound for U1, spin j <= bound for SU2
///   [verify]
///   nmax = 2
///   tol = 1e-8
///   method = lie               # lie or quad
///   coarse = false
///   [output]
///   path = report.json
RunConfig parse_config(std::istream& in, const std::string& source = "config");
RunConfig load_config(const std::string& path);

ProjectorMethod parse_method(const std::string& text);
std::string to_string(ProjectorMethod m);

}  // namespace gaussideal::cli
