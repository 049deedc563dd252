//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#include "rolekit/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rolekit/dataset.h"
#include "rolekit/error.h"
#include "rolekit/metrics.h"
#include "rolekit/snp.h"
#include "rolekit/verify.h"
#include "rolekit/wl.h"

namespace rolekit::cli {
namespace fs = std::filesystem;

namespace {
class ConfigError: public Error {
public:
  using Error::Error;
};

struct RunConfig {
  std::string dataset_dir;
  std::string prefix;
  std::string builtin;
  std::string method = "wl";
  int depth = -1;
  int depth_min = 0;
  int depth_max = -1;
  std::string output = "-";
  std::string format = "csv";
  std::string embeddings_path;
  int max_exact_nodes = 32;
  int jobs = 1;

  std::uint64_t seed = 42;
  int trials = 200;
  std::string inject_fault;
};

struct LoadedDataset {
  std::string name;
  GraphCollection collection;
};

LoadedDataset load_dataset(const RunConfig &cfg) {
  if (!cfg.builtin.empty()) {
    if (cfg.builtin != "figure1")
      throw ConfigError("unknown builtin fixture '" + cfg.builtin + "'");
    auto [cycle, triangles] = make_figure1_pair();
    return { "figure1", GraphCollection({ std::move(cycle), std::move(triangles) }) };
  }

  fs::path dir = cfg.dataset_dir;
  std::string prefix = cfg.prefix;
  if (dir.empty()) {
    const char *root = std::getenv("ROLEKIT_DATA_DIR");
    if (prefix.empty() || root == nullptr)
      throw ConfigError("no dataset given: pass --dataset/--prefix, --builtin, or set "
                        "ROLEKIT_DATA_DIR and --prefix");
    dir = fs::path(root) / prefix;
  }
  if (prefix.empty())
    prefix = fs::path(dir).lexically_normal().filename().string();
  if (prefix.empty())
    prefix = fs::path(dir).lexically_normal().parent_path().filename().string();
  return { prefix, load_tudataset(dir, prefix) };
}

RoleMethod method_of(const RunConfig &cfg) {
  auto m = parse_role_method(cfg.method);
  if (!m)
    throw ConfigError("unknown method '" + cfg.method + "'");
  return *m;
}

RoleOptions role_options(const RunConfig &cfg) {
  if (cfg.jobs < 1)
    throw ConfigError("--jobs must be at least 1");
  if (cfg.max_exact_nodes < 0)
    throw ConfigError("--max-exact-nodes must be non-negative");
  return { .jobs = cfg.jobs, .max_exact_nodes = cfg.max_exact_nodes };
}

void with_output(const std::string &path, std::ostream &stdout_stream,
                 const std::function<void(std::ostream &)> &write) {
  if (path == "-") {
    write(stdout_stream);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file)
    throw IoError("cannot open output file " + path);
  write(file);
  if (!file)
    throw IoError("write failed for " + path);
}

int cmd_roles(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  if (cfg.depth < 0)
    throw ConfigError("--depth must be non-negative");
  if (cfg.format != "csv" && cfg.format != "json")
    throw ConfigError("--format must be csv or json");
  const RoleMethod method = method_of(cfg);
  const RoleOptions options = role_options(cfg);
  if (!cfg.embeddings_path.empty() && method != RoleMethod::kSnp)
    throw ConfigError("--dump-embeddings requires --method snp");

  const auto data = load_dataset(cfg);
  err << "rolekit: " << data.name << ": " << data.collection.num_graphs() << " graphs, "
      << data.collection.total_nodes() << " nodes\n";

  const Coloring roles = compute_roles(data.collection, method, cfg.depth, options);
  err << "rolekit: " << to_string(method) << " depth " << cfg.depth << ": "
      << roles.num_classes() << " roles\n";

  with_output(cfg.output, out, [&](std::ostream &os) {
    if (cfg.format == "csv") {
      write_roles_csv(os, data.collection, roles);
      return;
    }
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (int g = 0; g < data.collection.num_graphs(); ++g)
      for (NodeId v = 0; v < data.collection.graph(g).num_nodes(); ++v)
        doc.push_back({ { "graph_id", g + 1 },
                        { "node_id", v + 1 },
                        { "role_id", roles[data.collection.global_index(g, v)] } });
    os << doc.dump(2) << '\n';
  });

  if (!cfg.embeddings_path.empty())
    with_output(cfg.embeddings_path, out, [&](std::ostream &os) {
      write_embedding_dump(os, data.collection, cfg.depth, options.jobs);
    });
  return kOk;
}

int cmd_sweep(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  if (cfg.depth_max < 0 || cfg.depth_min < 0 || cfg.depth_min > cfg.depth_max)
    throw ConfigError("empty depth range [" + std::to_string(cfg.depth_min) + ", "
                      + std::to_string(cfg.depth_max) + "]");
  if (cfg.format != "csv" && cfg.format != "json")
    throw ConfigError("--format must be csv or json");
  const RoleMethod method = method_of(cfg);
  const RoleOptions options = role_options(cfg);

  const auto data = load_dataset(cfg);
  err << "rolekit: " << data.name << ": " << data.collection.num_graphs() << " graphs, "
      << data.collection.total_nodes() << " nodes\n";

  auto rows = depth_sweep(data.collection, method, cfg.depth_max, options);
  rows.erase(rows.begin(), rows.begin() + cfg.depth_min);

  with_output(cfg.output, out, [&](std::ostream &os) {
    if (cfg.format == "csv")
      write_sweep_csv(os, data.name, rows);
    else
      write_sweep_json(os, data.name, rows);
  });
  return kOk;
}

int cmd_verify(const RunConfig &cfg, std::ostream &err) {
  if (cfg.trials < 1)
    throw ConfigError("--trials must be at least 1");

  std::optional<wl::testing::ScopedNonInjectiveSignatures> fault;
  if (cfg.inject_fault == "non-injective-hash")
    fault.emplace();
  else if (!cfg.inject_fault.empty())
    throw ConfigError("unknown fault '" + cfg.inject_fault + "'");

  const auto results = verify::run_all({ .seed = cfg.seed, .trials = cfg.trials });
  err << "rolekit verify: seed " << cfg.seed << ", trials " << cfg.trials << '\n';
  verify::print_report(err, results);

  bool ok = std::all_of(results.begin(), results.end(), [](const auto &r) { return r.ok(); });
  return ok ? kOk : kPropertyViolation;
}

void add_dataset_options(CLI::App *cmd, RunConfig &cfg) {
  cmd->add_option("--dataset", cfg.dataset_dir,
                  "Directory with TUDataset files (default: $ROLEKIT_DATA_DIR/<prefix>)");
  cmd->add_option("--prefix", cfg.prefix, "File prefix, e.g. MUTAG (default: directory name)");
  cmd->add_option("--builtin", cfg.builtin, "Use a built-in fixture instead (figure1)");
  cmd->add_option("--method", cfg.method, "Role definition: wl, snp or exact");
  cmd->add_option("-o,--output", cfg.output, "Output path, '-' for stdout");
  cmd->add_option("--format", cfg.format, "csv or json");
  cmd->add_option("--max-exact-nodes", cfg.max_exact_nodes,
                  "Node bound for the exact method");
  cmd->add_option("-j,--jobs", cfg.jobs, "Worker threads");
}
}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  RunConfig cfg;
  CLI::App app { "Scale-dependent node roles on graph collections", "rolekit" };
  app.require_subcommand(1);

  auto *roles = app.add_subcommand("roles", "Per-node role assignment at one depth");
  add_dataset_options(roles, cfg);
  roles->add_option("--depth", cfg.depth, "Role depth")->required();
  roles->add_option("--dump-embeddings", cfg.embeddings_path,
                    "Also write SNP embeddings to this path (snp only)");

  auto *sweep = app.add_subcommand("sweep", "Role counts and overlap over a depth range");
  add_dataset_options(sweep, cfg);
  sweep->add_option("--depth-min", cfg.depth_min, "First depth (default 0)");
  sweep->add_option("--depth-max", cfg.depth_max, "Last depth")->required();

  auto *verify_cmd = app.add_subcommand("verify", "Run the randomized property checks");
  verify_cmd->add_option("--seed", cfg.seed, "Random seed");
  verify_cmd->add_option("--trials", cfg.trials, "Random graphs per check");
  verify_cmd->add_option("--inject-fault", cfg.inject_fault,
                         "Deliberately break an invariant (non-injective-hash)");

  std::vector<const char *> argv;
  for (const auto &a: args)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    std::ostringstream msg, diag;
    int code = app.exit(e, msg, diag);
    out << msg.str();
    err << diag.str();
    return code == 0 ? kOk : kBadConfig;
  }

  try {
    if (roles->parsed())
      return cmd_roles(cfg, out, err);
    if (sweep->parsed())
      return cmd_sweep(cfg, out, err);
    return cmd_verify(cfg, err);
  } catch (const ConfigError &e) {
    err << "rolekit: " << e.what() << '\n';
    return kBadConfig;
  } catch (const SizeGuardError &e) {
    err << "rolekit: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const std::exception &e) {
    err << "rolekit: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace rolekit::cli
