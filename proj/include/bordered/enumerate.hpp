#pragma once

// Exhaustive search over the two-column diagram: every free row contributes
// one value, on either side, to either the top line or the left line.

#include <chrono>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bordered/core.hpp"
#include "bordered/plan.hpp"

namespace bordered {

/// Names the set of magic borders of inner order n with upper corners v, w.
struct OmegaKey {
  int n = 0;
  Value v = 0;
  Value w = 0;
};

/// A border up to reordering within its lines: b and c ascending.
struct CanonicalBorder {
  int n = 0;
  Value v = 0;
  Value w = 0;
  std::vector<Value> b;
  std::vector<Value> c;

  BorderPlan to_plan() const { return {n, v, w, b, c}; }
  static CanonicalBorder from_plan(const BorderPlan& plan);

  friend bool operator==(const CanonicalBorder&, const CanonicalBorder&) = default;
  friend auto operator<=>(const CanonicalBorder&, const CanonicalBorder&) = default;
};

struct SearchBudget {
  std::optional<std::uint64_t> node_limit;
  std::optional<std::uint64_t> solution_limit;
  std::optional<std::chrono::milliseconds> time_limit;
};

enum class SearchStatus {
  complete,          // every border was visited
  stopped,           // solution limit reached or the consumer asked to stop
  budget_exhausted,  // node or time limit hit before the search finished
};

std::string to_string(SearchStatus status);

struct SearchStats {
  SearchStatus status = SearchStatus::complete;
  std::uint64_t nodes = 0;
  std::uint64_t solutions = 0;
};

class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// Return false to stop the search.
using BorderSink = std::function<bool(const CanonicalBorder&)>;

/// Streams every border with the key's corners exactly once, in a fixed order.
/// Throws std::invalid_argument when v == w, v and w are complementary, or
/// either is outside the pool.
SearchStats enumerate_omega(const OmegaKey& key, const SearchBudget& budget,
                            const BorderSink& sink);

/// Collects enumerate_omega into a vector.
std::vector<CanonicalBorder> collect_omega(const OmegaKey& key, const SearchBudget& budget = {},
                                           SearchStats* stats = nullptr);

/// First border in search order. Throws InfeasibleCorners when the search
/// completes empty, BudgetExhausted when it cannot complete.
CanonicalBorder search_first(const OmegaKey& key, const SearchBudget& budget = {});

/// Fast non-exhaustive solver for large n: splits the free rows between the
/// two lines, then picks each line's sides by subset sum. Deterministic.
/// Returns nullopt if none of the splits it tries works, which says nothing
/// about feasibility. Same preconditions as enumerate_omega.
std::optional<CanonicalBorder> split_solve(const OmegaKey& key);

/// split_solve, falling back to search_first with the given budget.
CanonicalBorder find_border(const OmegaKey& key, const SearchBudget& budget = {});

enum class CornerRange {
  small_only,  // v, w in 1..2n+2
  full_pool,   // v, w anywhere in the pool, non-complementary
};

struct CountTable {
  int n = 0;
  std::map<std::pair<Value, Value>, std::uint64_t> counts;
  SearchStatus status = SearchStatus::complete;
  /// Keys whose search hit the budget; their counts are lower bounds.
  std::vector<std::pair<Value, Value>> partial;
};

/// Set-level |Omega^n_{v,w}| for every ordered corner pair in range. Ordered
/// borders (with line orders) number (n!)^2 times these.
CountTable count_omega(int n, const SearchBudget& budget = {},
                       CornerRange range = CornerRange::small_only, unsigned threads = 0);

/// "v w count" per line, ascending by (v, w).
std::string format_counts(const CountTable& table);

}  // namespace bordered
