#include "cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "gaussideal/ideal.hpp"
#include "gaussideal/spectrum.hpp"

namespace gaussideal::cli {
namespace {

using Clock = std::chrono::steady_clock;

Json label_json(GroupId g, IrrepLabel l) {
  if (g == GroupId::U1 || l.value % 2 == 0) return g == GroupId::U1 ? l.value : l.value / 2;
  return 0.5 * l.value;
}

Json graph_json(const Graph& graph) {
  Json edges = Json::array();
  for (const auto& e : graph.edges())
    edges.push_back({{"name", e.name}, {"source", graph.vertex_name(e.source)}, {"target", graph.vertex_name(e.target)}});
  return {{"vertices", graph.vertex_names()},
          {"edges", edges},
          {"connected", graph.connected()},
          {"iota_injective", graph.iota_injective()}};
}

Json labels_json(const BlockLabel& block) {
  Json out = Json::array();
  for (auto l : block.labels) out.push_back(label_json(block.group, l));
  return out;
}

Json bands_json(GroupId g, const std::vector<IrrepLabel>& bands) {
  Json out = Json::array();
  for (auto b : bands) out.push_back(label_json(g, b));
  return out;
}

Json header(const char* command, const RunConfig& cfg) {
  return {{"command", command},
          {"group", to_string(cfg.group)},
          {"graph", graph_json(cfg.graph)},
          {"bound", label_json(cfg.group, cfg.bound)}};
}

Json blocks_json(const LatticeSystem& system, const InvariantSubspace& inv) {
  Json out = Json::array();
  for (std::size_t b = 0; b < system.truncation.blocks.size(); ++b) {
    const auto& block = system.truncation.blocks[b];
    out.push_back({{"labels", labels_json(block)},
                   {"dim", block.dim()},
                   {"energy", block_energy(block).value()},
                   {"dim_HK", static_cast<std::size_t>(inv.per_block[b].cols())}});
  }
  return out;
}

Json per_nmax_json(const IdealReport& r) {
  Json out = Json::array();
  for (const auto& rec : r.per_nmax)
    out.push_back({{"n", rec.n},
                   {"dim_ideal", rec.dim_ideal},
                   {"containment_residual", rec.containment_residual},
                   {"distance", rec.distance}});
  return out;
}

Json seconds_json(const RunFlags& flags, Clock::time_point start) {
  if (!flags.timing) return nullptr;
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string saturation_hint(const IdealReport& r, int n_max) {
  std::ostringstream os;
  if (!r.containment) {
    os << "generated ideal leaves ker(pi) (containment residual above tol); this indicates a numerical problem";
    return os.str();
  }
  const auto got = r.per_nmax.empty() ? std::size_t{0} : r.per_nmax.back().dim_ideal;
  os << "ideal dimension " << got << " < dim ker(pi) " << r.dim_ker_pi << " at n_max = " << n_max
     << "; powers have not saturated, rerun with a larger --nmax";
  return os.str();
}

VerifyOptions options_for(const RunConfig& cfg, const LatticeSystem& system) {
  VerifyOptions opt;
  opt.n_max = cfg.n_max.value_or(default_nmax(system));
  opt.tol = cfg.tol;
  opt.method = cfg.method;
  return opt;
}

Json coarse_json(const LatticeSystem& system, const ReducedSystem& reduced, const IdealReport& fine,
                 const VerifyOptions& opt, bool* ok) {
  const auto grouping = eigenspace_grouping(system.truncation);
  const bool refined = refines(system.truncation, grouping);
  const auto coarse = coarsened_verify(system, reduced, grouping, opt);
  const double to_fine = subspace_distance(fine.ideal, coarse.ideal);
  *ok = refined && coarse.pass && to_fine <= opt.tol;
  return {{"scope", "eigenspace within truncation"},
          {"num_groups", grouping.groups.size()},
          {"refines", refined},
          {"per_nmax", per_nmax_json(coarse)},
          {"containment", coarse.containment},
          {"equality", coarse.equality},
          {"distance_to_fine_ideal", to_fine},
          {"pass", *ok}};
}

}  // namespace

int default_nmax(const LatticeSystem& system) {
  return static_cast<int>(std::max<std::size_t>(1, system.truncation.max_block_dim()));
}

CommandResult cmd_decompose(const RunConfig& cfg, const RunFlags& flags) {
  const auto start = Clock::now();
  const auto system = LatticeSystem::make(cfg.graph, cfg.group, cfg.bound);
  const auto inv = invariant_basis(system, cfg.method);
  Json r = header("decompose", cfg);
  r["method"] = to_string(cfg.method);
  r["rank_threshold"] = kRankThreshold;
  r["blocks"] = blocks_json(system, inv);
  r["num_blocks"] = system.truncation.blocks.size();
  r["total_dim"] = system.truncation.total_dim();
  r["dim_HK"] = inv.basis.dim();
  r["iota_injective"] = cfg.graph.iota_injective();
  r["seconds"] = seconds_json(flags, start);
  return {r, 0};
}

CommandResult cmd_verify(const RunConfig& cfg, const RunFlags& flags) {
  const auto start = Clock::now();
  const auto system = LatticeSystem::make(cfg.graph, cfg.group, cfg.bound);
  const auto reduced = reduce(system, cfg.method);
  const auto opt = options_for(cfg, system);
  const auto report = verify_theorem(system, reduced, opt);

  Json r = header("verify", cfg);
  r["tol"] = opt.tol;
  r["rank_threshold"] = kRankThreshold;
  r["method"] = to_string(opt.method);
  r["n_max"] = opt.n_max;
  r["quadrature_bands"] = bands_json(cfg.group, report.bands);
  r["blocks"] = blocks_json(system, reduced.invariant);
  r["total_dim"] = system.truncation.total_dim();
  r["dim_HK"] = report.dim_HK;
  r["dim_AK"] = report.dim_AK;
  r["dim_ker_pi"] = report.dim_ker_pi;
  r["rank_pi"] = report.rank_pi;
  r["num_generators"] = report.num_generators;
  r["per_nmax"] = per_nmax_json(report);
  r["containment"] = report.containment;
  r["equality"] = report.equality;
  bool pass = report.pass;
  if (cfg.coarse) {
    bool coarse_ok = false;
    r["coarse"] = coarse_json(system, reduced, report, opt, &coarse_ok);
    pass = pass && coarse_ok;
  }
  r["pass"] = pass;
  if (!report.pass) r["hint"] = saturation_hint(report, opt.n_max);
  r["seconds"] = seconds_json(flags, start);
  return {r, pass ? 0 : 1};
}

CommandResult cmd_spectrum(const RunConfig& cfg, const RunFlags& flags) {
  const auto start = Clock::now();
  const auto system = LatticeSystem::make(cfg.graph, cfg.group, cfg.bound);
  const auto& trunc = system.truncation;
  const auto grouping = eigenspace_grouping(trunc);

  Json groups = Json::array();
  for (const auto& g : grouping.groups) {
    Json blocks = Json::array();
    for (auto b : g.blocks) blocks.push_back(labels_json(trunc.blocks[b]));
    groups.push_back({{"energy", g.energy.value()},
                      {"scope", "eigenspace within truncation"},
                      {"dim", g.dim},
                      {"block_indices", g.blocks},
                      {"blocks", blocks}});
  }

  // The Laplacian is gauge invariant: check it against every Gauss generator.
  const auto h = laplacian(trunc);
  double commutator = 0.0;
  for (VertexId v = 0; v < cfg.graph.num_vertices(); ++v) {
    for (std::size_t x = 0; x < lie_dim(cfg.group); ++x) {
      BlockOperator gen(trunc.block_dims());
      for (std::size_t b = 0; b < trunc.blocks.size(); ++b)
        gen.block(b, b) = gauss_generator_block(cfg.graph, trunc.blocks[b], {v, LieBasisIndex{x}});
      BlockOperator c = h * gen;
      BlockOperator hg = gen * h;
      hg *= Complex(-1.0, 0.0);
      c += hg;
      commutator = std::max(commutator, c.norm());
    }
  }

  Json r = header("spectrum", cfg);
  r["groups"] = groups;
  r["num_groups"] = grouping.groups.size();
  r["refines"] = refines(trunc, grouping);
  r["laplacian_commutator_residual"] = commutator;
  int code = 0;
  if (cfg.coarse) {
    const auto reduced = reduce(system, cfg.method);
    const auto opt = options_for(cfg, system);
    const auto fine = verify_theorem(system, reduced, opt);
    bool ok = false;
    r["tol"] = opt.tol;
    r["n_max"] = opt.n_max;
    r["coarse"] = coarse_json(system, reduced, fine, opt, &ok);
    code = ok ? 0 : 1;
  }
  r["seconds"] = seconds_json(flags, start);
  return {r, code};
}

}  // namespace gaussideal::cli
