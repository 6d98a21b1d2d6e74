// bordered: build, verify, enumerate and transform magic borders.
//
// Exit codes: 0 success or valid, 1 bad input or failed verification,
// 2 infeasible corners, 3 search budget exhausted.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bordered/assemble.hpp"
#include "bordered/construct.hpp"
#include "bordered/corners.hpp"
#include "bordered/enumerate.hpp"
#include "bordered/io.hpp"
#include "bordered/transform.hpp"
#include "bordered/verify.hpp"

namespace {

using namespace bordered;

enum Exit { kOk = 0, kInvalid = 1, kInfeasible = 2, kBudget = 3 };

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::pair<Value, Value> parse_corners(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--corners expects v,w");
  try {
    std::size_t used = 0;
    const Value v = std::stoll(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("");
    const auto rest = text.substr(comma + 1);
    const Value w = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
    return {v, w};
  } catch (const std::exception&) {
    throw std::invalid_argument("--corners expects two integers v,w, got '" + text + "'");
  }
}

SearchBudget make_budget(std::uint64_t nodes, std::uint64_t millis) {
  SearchBudget budget;
  if (nodes > 0) budget.node_limit = nodes;
  if (millis > 0) budget.time_limit = std::chrono::milliseconds(millis);
  return budget;
}

int report_result(const CheckReport& report, const std::string& what) {
  if (report.valid()) {
    std::cout << what << ": valid\n";
    return kOk;
  }
  std::cout << what << ": " << report.to_text();
  return kInvalid;
}

struct BuildArgs {
  int order = 0;
  bool border_only = false;
  bool frame = false;
  std::string corners;
  std::string format = "grid";
};

int cmd_build(const BuildArgs& args) {
  const GridFormat format = grid_format_from_string(args.format);
  if (args.order < 3) throw std::invalid_argument("--order must be at least 3");
  if (!args.border_only && args.corners.empty()) {
    std::cout << serialize(to_document(build_square(args.order)), format);
    return kOk;
  }
  const int n = args.order - 2;
  if (n < 3) throw std::invalid_argument("borders need --order of at least 5");
  BorderPlan plan;
  if (args.corners.empty()) {
    plan = build_border(n).plan;
  } else {
    const auto [v, w] = parse_corners(args.corners);
    plan = construct_with_corners(n, v, w);
  }
  if (args.frame) {
    std::cout << serialize(to_document(render_frame(plan)), format);
  } else {
    std::cout << serialize(plan) << '\n';
  }
  return kOk;
}

struct VerifyArgs {
  std::string input;
  bool bordered = false;
};

int cmd_verify(const VerifyArgs& args) {
  const Document doc = parse_document(read_input(args.input));
  if (const auto* plan = std::get_if<BorderPlan>(&doc)) {
    return report_result(verify_border(*plan), "border plan (n=" + std::to_string(plan->n) + ")");
  }
  const auto& grid = std::get<GridDocument>(doc);
  if (is_frame_shaped(grid)) {
    return report_result(verify_frame(to_frame(grid)),
                         "border frame (order " + std::to_string(grid.order) + ")");
  }
  const MagicSquare square = to_square(grid);
  const std::string what = "square (order " + std::to_string(grid.order) + ")";
  return report_result(args.bordered ? verify_bordered(square) : verify_square(square), what);
}

struct EnumerateArgs {
  int order = 0;
  std::string corners;
  bool count_only = false;
  bool full_pool = false;
  std::uint64_t limit = 0;
  std::uint64_t node_limit = 0;
  std::uint64_t time_limit_ms = 0;
  unsigned threads = 0;
};

int cmd_enumerate(const EnumerateArgs& args) {
  require_inner_order(args.order);
  if (args.order > 6) {
    std::cerr << "warning: exhaustive search at n=" << args.order
              << " grows very quickly; consider --node-limit or --time-limit-ms\n";
  }
  SearchBudget budget = make_budget(args.node_limit, args.time_limit_ms);
  if (args.limit > 0) budget.solution_limit = args.limit;

  if (!args.corners.empty()) {
    const auto [v, w] = parse_corners(args.corners);
    std::uint64_t count = 0;
    const auto stats = enumerate_omega({args.order, v, w}, budget, [&](const CanonicalBorder& b) {
      ++count;
      if (!args.count_only) std::cout << serialize(b.to_plan()) << '\n';
      return true;
    });
    if (args.count_only) std::cout << count << '\n';
    if (stats.status == SearchStatus::budget_exhausted) {
      std::cerr << "budget exhausted after " << stats.nodes << " nodes; " << count
                << " border(s) found so far\n";
      return kBudget;
    }
    return kOk;
  }

  const auto range = args.full_pool ? CornerRange::full_pool : CornerRange::small_only;
  if (args.count_only) {
    const auto table = count_omega(args.order, budget, range, args.threads);
    std::cout << format_counts(table);
    if (table.status == SearchStatus::budget_exhausted) {
      std::cerr << "budget exhausted for " << table.partial.size()
                << " corner pair(s); their counts are lower bounds\n";
      return kBudget;
    }
    return kOk;
  }

  const int n = args.order;
  const auto corners = range == CornerRange::small_only ? [&] {
    std::vector<Value> xs;
    for (Value x = 1; x <= diagram_rows(n); ++x) xs.push_back(x);
    return xs;
  }() : border_pool(n);
  for (Value v : corners) {
    for (Value w : corners) {
      if (v == w || v + w == complement_base(n)) continue;
      const auto stats = enumerate_omega({n, v, w}, budget, [&](const CanonicalBorder& b) {
        std::cout << serialize(b.to_plan()) << '\n';
        return true;
      });
      if (stats.status == SearchStatus::budget_exhausted) {
        std::cerr << "budget exhausted at corners (" << v << ", " << w << ")\n";
        return kBudget;
      }
    }
  }
  return kOk;
}

int cmd_orbit(const std::string& input) {
  const BorderPlan plan = parse_plan(read_input(input));
  if (const auto report = verify_border(plan); !report.valid()) {
    std::cerr << "input plan is not a magic border:\n" << report.to_text();
    return kInvalid;
  }
  for (Symmetry s : kAllSymmetries) {
    const BorderPlan image = apply_symmetry(plan, s);
    if (const auto report = verify_border(image); !report.valid()) {
      throw std::logic_error("symmetry image failed verification:\n" + report.to_text());
    }
    auto line = nlohmann::ordered_json::parse(serialize(image));
    nlohmann::ordered_json out;
    out["symmetry"] = std::string(to_string(s));
    for (auto& [key, value] : line.items()) out[key] = value;
    std::cout << out.dump() << '\n';
  }
  return kOk;
}

struct TablesArgs {
  bool check = false;
  std::vector<int> ms;
  std::string file;
};

std::string violations_inline(const CheckReport& report) {
  std::string text;
  for (const auto& v : report.violations) {
    if (!text.empty()) text += "; ";
    text += v.condition + " " + v.location + ": expected " + std::to_string(v.expected) +
            ", got " + std::to_string(v.actual);
  }
  return text;
}

int cmd_tables(const TablesArgs& args) {
  const SeedTables tables =
      args.file.empty() ? builtin_seed_tables() : parse_seed_tables(read_input(args.file));
  if (!args.check) {
    std::cout << "order-4 entries: " << tables.order4.size() << '\n';
    for (const auto& seed : tables.order4) {
      std::cout << "  " << describe({4, seed.v, seed.w, seed.b, seed.c}) << '\n';
    }
    std::cout << "parameterized entries: " << tables.order_m.size() << '\n';
    for (const auto& seed : tables.order_m) std::cout << "  " << seed.label() << '\n';
    return kOk;
  }

  bool ok = true;
  std::size_t valid4 = 0;
  for (const auto& seed : tables.order4) {
    const auto report = verify_border({4, seed.v, seed.w, seed.b, seed.c});
    const std::string label = std::to_string(seed.v) + "&" + std::to_string(seed.w);
    if (report.valid()) {
      ++valid4;
      std::cout << "order 4  " << label << "  valid\n";
    } else {
      ok = false;
      std::cout << "order 4  " << label << "  INVALID  " << violations_inline(report) << '\n';
    }
  }
  std::cout << "order 4: " << valid4 << "/" << tables.order4.size() << " valid\n";

  for (int m : args.ms) {
    std::size_t valid = 0, repaired = 0, failed = 0;
    for (const auto& seed : tables.order_m) {
      const std::string head = "m=" + std::to_string(m) + "  " + seed.label();
      try {
        const auto outcome = seed_order_m(m, seed.v.eval(m), seed.w.eval(m), tables);
        if (outcome.status == SeedStatus::valid) {
          ++valid;
          std::cout << head << "  valid\n";
        } else {
          ++repaired;
          std::cout << head << "  invalid  " << violations_inline(outcome.raw_report) << "  -> "
                    << to_string(outcome.status) << ": " << describe(outcome.plan) << '\n';
        }
      } catch (const std::exception& e) {
        ++failed;
        ok = false;
        std::cout << head << "  UNREPAIRED  " << e.what() << '\n';
      }
    }
    std::cout << "m=" << m << ": " << valid << " valid, " << repaired << " repaired, " << failed
              << " unrepaired of " << tables.order_m.size() << '\n';
    if (failed == 0) std::cout << "m=" << m << ": every pair served by a verified plan\n";
  }
  return ok ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Magic borders and bordered magic squares"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Build a bordered magic square or a single border");
  build_cmd->add_option("--order", build.order, "Order N of the square (border order for --border-only)")
      ->required();
  build_cmd->add_flag("--border-only", build.border_only, "Emit only the outer border as a plan");
  build_cmd->add_option("--corners", build.corners, "Upper corners v,w of the border");
  build_cmd->add_flag("--frame", build.frame, "Render the border as a grid instead of a plan");
  build_cmd->add_option("--format", build.format, "grid, csv or json")
      ->check(CLI::IsMember({"grid", "csv", "json"}));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a plan, frame or square");
  verify_cmd->add_option("input", verify.input, "Document path, or - for stdin");
  verify_cmd->add_flag("--bordered", verify.bordered, "Also check every inner layer");

  EnumerateArgs enumerate;
  auto* enum_cmd = app.add_subcommand("enumerate", "List or count borders by corner pair");
  enum_cmd->add_option("--order", enumerate.order, "Inner order n")->required();
  enum_cmd->add_option("--corners", enumerate.corners, "Upper corners v,w");
  enum_cmd->add_flag("--count-only", enumerate.count_only, "Print counts instead of borders");
  enum_cmd->add_flag("--full-pool", enumerate.full_pool, "Count corners anywhere in the pool");
  enum_cmd->add_option("--limit", enumerate.limit, "Stop after this many borders per corner pair");
  enum_cmd->add_option("--node-limit", enumerate.node_limit, "Search node budget per corner pair");
  enum_cmd->add_option("--time-limit-ms", enumerate.time_limit_ms, "Time budget per corner pair");
  enum_cmd->add_option("--threads", enumerate.threads, "Worker threads for counting (0: all cores)");

  std::string orbit_input;
  auto* orbit_cmd = app.add_subcommand("orbit", "Print the eight symmetry images of a plan");
  orbit_cmd->add_option("input", orbit_input, "Plan path, or - for stdin");

  TablesArgs tables;
  auto* tables_cmd = app.add_subcommand("tables", "Show or check the seed tables");
  tables_cmd->add_flag("--check", tables.check, "Verify every entry and repair invalid ones");
  tables_cmd->add_option("--m", tables.ms, "Order at which to instantiate parameterized entries");
  tables_cmd->add_option("--file", tables.file, "Seed table file instead of the built-in one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*build_cmd) return cmd_build(build);
    if (*verify_cmd) return cmd_verify(verify);
    if (*enum_cmd) return cmd_enumerate(enumerate);
    if (*orbit_cmd) return cmd_orbit(orbit_input);
    if (*tables_cmd) return cmd_tables(tables);
  } catch (const InfeasibleCorners& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
