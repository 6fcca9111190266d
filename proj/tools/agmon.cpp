// agmon: enumerate finite commutative monoids and AG-monoids, apply the
// twist correspondence between them, and inspect tables.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "agmonoid/automorphism.hpp"
#include "agmonoid/canonical.hpp"
#include "agmonoid/enumerate.hpp"
#include "agmonoid/properties.hpp"
#include "agmonoid/storage.hpp"
#include "agmonoid/twist.hpp"

namespace {

using namespace agmonoid;

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct CommandConfig {
  int order = 0;
  std::string kind = "cm";
  bool include_associative = false;
  std::string alpha;
  std::string in_path;
  std::string out_path;
  int max_order = 0;
  int workers = 0;
  bool allow_long = false;
};

ProgressFn stderr_progress() {
  return [](ProgressInfo const& info) {
    std::fprintf(stderr, "progress: nodes=%llu tables=%llu\n",
                 static_cast<unsigned long long>(info.nodes_visited),
                 static_cast<unsigned long long>(info.tables_found));
  };
}

CayleyTable read_single_table(std::string const& path) {
  TableDatabase db = read_db(std::filesystem::path(path));
  if (db.tables.size() != 1) {
    throw std::runtime_error("expected a single-table database (count=1), got count=" +
                             std::to_string(db.tables.size()));
  }
  return db.tables.front();
}

int require_long_run_flag(CommandConfig const& cfg, int order) {
  if (order >= 8 && !cfg.allow_long) {
    std::cerr << "order " << order
              << " can run for hours; pass --allow-long to confirm\n";
    return kExitUsage;
  }
  return 0;
}

int cmd_enumerate(CommandConfig const& cfg) {
  if (int rc = require_long_run_flag(cfg, cfg.order); rc != 0) return rc;
  EnumerationOptions opts;
  opts.workers = cfg.workers;
  opts.progress = stderr_progress();
  EnumerationResult result =
      cfg.kind == "cm"
          ? enumerate_commutative_monoids(cfg.order, opts)
          : enumerate_ag_monoids_via_construction(cfg.order, cfg.include_associative, opts);
  if (!cfg.out_path.empty()) {
    write_db(TableDatabase{result.order, result.kind, result.tables},
             std::filesystem::path(cfg.out_path));
  }
  std::cout << "order=" << result.order << " kind=" << kind_tag(result.kind)
            << " count=" << result.count() << "\n";
  return 0;
}

int cmd_table1(CommandConfig const& cfg) {
  if (int rc = require_long_run_flag(cfg, cfg.max_order); rc != 0) return rc;
  EnumerationOptions opts;
  opts.workers = cfg.workers;
  opts.progress = stderr_progress();
  for (int n = 1; n <= cfg.max_order; ++n) {
    Table1Row row = table1_row(n, opts);
    std::cout << "order=" << n << " cm=" << row.commutative_monoids
              << " nonassoc=" << row.nonassociative_ag << " total=" << row.total << "\n";
  }
  return 0;
}

int cmd_twist(CommandConfig const& cfg) {
  CayleyTable monoid = read_single_table(cfg.in_path);
  Permutation alpha = parse_cycle_notation(cfg.alpha, monoid.order());
  CayleyTable twisted = twist(TwistPair{monoid, alpha});
  if (!cfg.out_path.empty()) {
    write_db(TableDatabase{twisted.order(), StructureKind::ag_monoid, {twisted}},
             std::filesystem::path(cfg.out_path));
  }
  std::cout << encode_table(twisted) << "\n";
  return 0;
}

int cmd_untwist(CommandConfig const& cfg) {
  CayleyTable table = read_single_table(cfg.in_path);
  TwistPair pair = untwist(table);
  if (!cfg.out_path.empty()) {
    write_db(TableDatabase{pair.monoid.order(), StructureKind::commutative_monoid, {pair.monoid}},
             std::filesystem::path(cfg.out_path));
  }
  std::cout << encode_table(pair.monoid) << "\n";
  std::cout << format_cycle_notation(pair.alpha) << "\n";
  return 0;
}

template <std::size_t N>
std::string witness_string(std::optional<std::array<int, N>> const& w) {
  std::string out = "  witness=(";
  for (std::size_t i = 0; i < N; ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string((*w)[i]);
  }
  out.push_back(')');
  return out;
}

int cmd_verify(CommandConfig const& cfg) {
  CayleyTable t = read_single_table(cfg.in_path);

  auto assoc = find_associativity_violation(t);
  std::cout << "associative: " << (assoc ? "false" + witness_string(assoc) : "true") << "\n";
  auto comm = find_commutativity_violation(t);
  std::cout << "commutative: " << (comm ? "false" + witness_string(comm) : "true") << "\n";
  auto li = find_left_invertive_violation(t);
  std::cout << "left-invertive: " << (li ? "false" + witness_string(li) : "true") << "\n";
  auto medial = find_medial_violation(t);
  std::cout << "medial: " << (medial ? "false" + witness_string(medial) : "true") << "\n";

  std::cout << "left-identities: {";
  bool first = true;
  for (int e : left_identities(t)) {
    if (!first) std::cout << ",";
    std::cout << e;
    first = false;
  }
  std::cout << "}\n";

  auto tsi = two_sided_identity(t);
  std::cout << "two-sided-identity: " << (tsi ? std::to_string(*tsi) : "none") << "\n";
  return 0;
}

int cmd_autgroup(CommandConfig const& cfg) {
  CayleyTable t = read_single_table(cfg.in_path);
  AutomorphismGroup g = automorphism_group(t);
  std::cout << "group-order: " << g.members.size() << "\n";
  for (auto const& p : g.members) {
    std::cout << "member: " << format_cycle_notation(p) << "\n";
  }
  for (auto const& p : involutions(g)) {
    std::cout << "involution: " << format_cycle_notation(p) << "\n";
  }
  InvolutionClasses classes = conjugacy_classes_of_involutions(g);
  std::cout << "involution-classes: " << classes.classes.size() << "\n";
  for (auto const& rep : classes.representatives()) {
    std::cout << "class-representative: " << format_cycle_notation(rep) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"enumeration and classification of AG-monoids via twisted commutative monoids"};
  app.require_subcommand(1);

  CommandConfig cfg;

  auto add_workers = [&](CLI::App* cmd) {
    cmd->add_option("--workers", cfg.workers, "worker threads (default: all cores)")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate structures up to isomorphism");
  enumerate->add_option("--order,-n", cfg.order, "structure order (1..9)")
      ->required()
      ->check(CLI::Range(1, 9));
  enumerate->add_option("--kind", cfg.kind, "cm: commutative monoids, ag: AG-monoids")
      ->check(CLI::IsMember({"cm", "ag"}));
  enumerate->add_flag("--include-associative", cfg.include_associative,
                      "with --kind ag, include the associative (alpha=1) twists");
  enumerate->add_option("--out", cfg.out_path, "write an AGMON database here");
  enumerate->add_flag("--allow-long", cfg.allow_long, "permit multi-hour runs (order >= 8)");
  add_workers(enumerate);

  CLI::App* table1 = app.add_subcommand("table1", "print classification counts per order");
  table1->add_option("--max-order", cfg.max_order, "largest order to count (1..9)")
      ->required()
      ->check(CLI::Range(1, 9));
  table1->add_flag("--allow-long", cfg.allow_long, "permit multi-hour runs (order >= 8)");
  add_workers(table1);

  CLI::App* twist_cmd = app.add_subcommand("twist", "twist a commutative monoid by an involutive automorphism");
  twist_cmd->add_option("--in", cfg.in_path, "single-table AGMON file")->required();
  twist_cmd->add_option("--alpha", cfg.alpha, "automorphism in cycle notation, e.g. \"(1,5)(2,4)\"")
      ->required();
  twist_cmd->add_option("--out", cfg.out_path, "also write the result as an AGMON file");

  CLI::App* untwist_cmd = app.add_subcommand("untwist", "recover the commutative monoid and alpha behind an AG-monoid");
  untwist_cmd->add_option("--in", cfg.in_path, "single-table AGMON file")->required();
  untwist_cmd->add_option("--out", cfg.out_path, "also write the monoid as an AGMON file");

  CLI::App* verify = app.add_subcommand("verify", "report identity-law properties of a table");
  verify->add_option("--in", cfg.in_path, "single-table AGMON file")->required();

  CLI::App* autgroup = app.add_subcommand("autgroup", "list automorphisms, involutions and their classes");
  autgroup->add_option("--in", cfg.in_path, "single-table AGMON file")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(cfg);
    if (table1->parsed()) return cmd_table1(cfg);
    if (twist_cmd->parsed()) return cmd_twist(cfg);
    if (untwist_cmd->parsed()) return cmd_untwist(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (autgroup->parsed()) return cmd_autgroup(cfg);
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
