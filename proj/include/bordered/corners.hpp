#pragma once

// Corner-prescribed borders at even inner order: the parity criterion, the
// shipped seed tables, the eight-row extension n -> n+4, and a construction
// that serves every feasible corner pair.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bordered/enumerate.hpp"
#include "bordered/plan.hpp"
#include "bordered/verify.hpp"

namespace bordered {

/// Integer polynomial in m and i, e.g. "(m+2)^2-15", "m^2+2m+4", "11+8i".
class SeedExpr {
 public:
  static SeedExpr parse(std::string_view text);

  Value eval(Value m, Value i = 0) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

struct Order4Seed {
  Value v = 0;
  Value w = 0;
  std::vector<Value> b;
  std::vector<Value> c;
};

struct ParamSeed {
  SeedExpr v;
  SeedExpr w;
  std::vector<SeedExpr> b;
  std::vector<SeedExpr> c;

  /// e.g. "1&2m+2"
  std::string label() const { return v.text() + "&" + w.text(); }
};

struct SeedTables {
  int format = 0;
  std::vector<Order4Seed> order4;
  std::vector<SeedExpr> block_b;
  std::vector<SeedExpr> block_c;
  std::vector<ParamSeed> order_m;
};

/// Throws bordered::Error naming the offending line.
SeedTables parse_seed_tables(std::string_view text);

/// The tables shipped in data/seed_tables.txt (compiled in).
const SeedTables& builtin_seed_tables();

/// Parameterized entry at inner order m plus the block sets; no validation.
BorderPlan instantiate(const ParamSeed& seed, const SeedTables& tables, int m);

/// Opposite parity of the small representatives. Requires even n and two
/// distinct pool values; complementary corners are never feasible.
bool corners_feasible(int n, Value v, Value w);

/// Order-4 table entry for exactly (v, w). Throws std::invalid_argument if the
/// table has no such row.
BorderPlan seed_order4(Value v, Value w, const SeedTables& tables = builtin_seed_tables());

/// Border of inner order n+4 with corners (v+j, w+j): the old rows move down
/// by j, keeping their sides and roles, and the eight new rows (j on top,
/// 8-j at the bottom) supply two top-line and two side-line values whose
/// d-sums cancel. j must be one of 0, 2, 4, 6, 8; n even; corners small.
BorderPlan extend_border(const BorderPlan& plan, int shift);

/// The twenty corner pairs at inner order m that extension from m-4 cannot reach.
std::vector<std::pair<Value, Value>> missing_pairs(int m);

enum class SeedStatus { valid, repaired_substitution, repaired_search };
std::string to_string(SeedStatus status);

struct SeedOutcome {
  std::string label;
  Value v = 0;
  Value w = 0;
  BorderPlan raw;
  CheckReport raw_report;
  SeedStatus status = SeedStatus::valid;
  BorderPlan plan;  // verified
};

/// Instantiates the parameterized entry for (v, w) at order m and verifies
/// it. Invalid entries are repaired, first by replacing a single value, then
/// by search with the same corners. Throws std::invalid_argument if (v, w) has
/// no entry, BudgetExhausted if repair fails.
SeedOutcome seed_order_m(int m, Value v, Value w, const SeedTables& tables = builtin_seed_tables(),
                         const SearchBudget& repair_budget = {});

/// Every parameterized entry at order m, in table order.
std::vector<SeedOutcome> audit_order_m(int m, const SeedTables& tables = builtin_seed_tables());

enum class CornerSource { order4_table, extension, param_table, param_table_repaired, search };
std::string to_string(CornerSource source);

struct CornerBorder {
  BorderPlan plan;
  CornerSource source = CornerSource::search;
};

/// One verified border for every (v, w) with 1 <= v < w <= 2n+2 of opposite
/// parity. Computed once per n and cached.
const std::map<std::pair<Value, Value>, CornerBorder>& canonical_corner_borders(int n);

/// Verified border with upper corners exactly (v, w). Corners may be any
/// non-complementary pool values; they are reduced to small representatives
/// with v < w and mapped back through the square's symmetries. Throws
/// InfeasibleCorners when the small representatives share parity.
BorderPlan construct_with_corners(int n, Value v, Value w);

}  // namespace bordered
