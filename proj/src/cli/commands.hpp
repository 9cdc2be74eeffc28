#pragma once

#include "json.hpp"

#include "cli/config.hpp"

namespace gaussideal::cli {

using Json = nlohmann::ordered_json;

struct CommandResult {
  Json report;
  int exit_code = 0;
};

struct RunFlags {
  /// Fill `seconds` with wall-clock time; off by default so reports are byte-reproducible.
  bool timing = false;
};

/// Block table, total dimension, invariant dimensions and the iota flag.
CommandResult cmd_decompose(const RunConfig& config, const RunFlags& flags = {});

/// Theorem check; exit 0 on pass, 1 when containment or equality fails at the configured n_max.
CommandResult cmd_verify(const RunConfig& config, const RunFlags& flags = {});

/// Laplacian eigenspaces within the truncation; with coarsening on, also the grouped verification.
CommandResult cmd_spectrum(const RunConfig& config, const RunFlags& flags = {});

/// n_max used when the config leaves it unset: the largest block dimension.
int default_nmax(const LatticeSystem& system);

}  // namespace gaussideal::cli
