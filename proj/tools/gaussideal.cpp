#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "gaussideal/gauge.hpp"

using namespace gaussideal;

namespace {

constexpr int kExitConfig = 2;

struct Overrides {
  std::string config;
  std::optional<int> nmax;
  std::optional<double> tol;
  std::optional<std::string> method;
  bool coarse = false;
  std::optional<std::string> out;
  bool timing = false;
};

void add_common(CLI::App* sub, Overrides& o) {
  sub->add_option("--config", o.config, "configuration file")->required();
  sub->add_option("--nmax", o.nmax, "largest generator power")->check(CLI::PositiveNumber);
  sub->add_option("--tol", o.tol, "subspace distance tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--method", o.method, "invariant projector: lie or quad")->check(CLI::IsMember({"lie", "quad"}));
  sub->add_flag("--coarse", o.coarse, "also verify over Laplacian eigenspaces");
  sub->add_option("--out", o.out, "write the JSON report here instead of stdout");
  sub->add_flag("--timing", o.timing, "record wall-clock seconds in the report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauge-invariant observables and the Gauss-law ideal at finite truncation"};
  app.require_subcommand(1);
  Overrides o;
  auto* decompose = app.add_subcommand("decompose", "Peter-Weyl blocks, energies and invariant dimensions");
  auto* verify = app.add_subcommand("verify", "compare the generated ideal with ker(pi)");
  auto* spectrum = app.add_subcommand("spectrum", "Laplacian eigenspaces within the truncation");
  for (auto* s : {decompose, verify, spectrum}) add_common(s, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  cli::RunConfig cfg;
  try {
    cfg = cli::load_config(o.config);
  } catch (const cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  if (o.nmax) cfg.n_max = *o.nmax;
  if (o.tol) cfg.tol = *o.tol;
  if (o.method) cfg.method = cli::parse_method(*o.method);
  if (o.coarse) cfg.coarse = true;
  if (o.out) cfg.out = *o.out;

  cli::CommandResult result;
  const cli::RunFlags flags{o.timing};
  try {
    if (decompose->parsed()) {
      result = cli::cmd_decompose(cfg, flags);
    } else if (verify->parsed()) {
      result = cli::cmd_verify(cfg, flags);
    } else {
      result = cli::cmd_spectrum(cfg, flags);
    }
  } catch (const BandError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const std::string text = result.report.dump(2) + "\n";
  if (cfg.out) {
    std::ofstream f(*cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << *cfg.out << "\n";
      return kExitConfig;
    }
    f << text;
  } else {
    std::cout << text;
  }
  return result.exit_code;
}
