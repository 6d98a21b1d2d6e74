#include "bordered/corners.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "bordered/transform.hpp"

namespace bordered {

namespace {

void require_even(int n) {
  require_inner_order(n);
  if (n % 2 != 0) {
    throw std::invalid_argument("corner characterization is only proven for even inner orders, got " +
                                std::to_string(n));
  }
}

BorderPlan checked(BorderPlan plan, const char* what) {
  if (const auto report = verify_border(plan); !report.valid()) {
    throw std::logic_error(std::string(what) + " produced an invalid border " + describe(plan) +
                           "\n" + report.to_text());
  }
  return plan;
}

SearchBudget default_repair_budget() {
  SearchBudget budget;
  budget.node_limit = 2'000'000'000ULL;
  return budget;
}

}  // namespace

bool corners_feasible(int n, Value v, Value w) {
  require_even(n);
  if (!in_pool(v, n) || !in_pool(w, n)) {
    throw std::invalid_argument("corners must lie in the border pool");
  }
  if (v == w) throw std::invalid_argument("corners must differ");
  if (v + w == complement_base(n)) return false;
  return small_of(v, n) % 2 != small_of(w, n) % 2;
}

BorderPlan seed_order4(Value v, Value w, const SeedTables& tables) {
  for (const auto& seed : tables.order4) {
    if (seed.v == v && seed.w == w) return {4, seed.v, seed.w, seed.b, seed.c};
  }
  throw std::invalid_argument("order-4 table has no entry for corners (" + std::to_string(v) +
                              ", " + std::to_string(w) + ")");
}

BorderPlan extend_border(const BorderPlan& plan, int shift) {
  if (shift < 0 || shift > 8 || shift % 2 != 0) {
    throw std::invalid_argument("extension shift must be one of 0, 2, 4, 6, 8; got " +
                                std::to_string(shift));
  }
  require_even(plan.n);
  if (const auto report = verify_border(plan); !report.valid()) {
    throw std::invalid_argument("cannot extend an invalid border:\n" + report.to_text());
  }
  const int n = plan.n;
  if (side_of(plan.v, n) != Side::left || side_of(plan.w, n) != Side::left) {
    throw std::invalid_argument("extension needs both corners in the left diagram column");
  }
  const int m = n + 4;
  auto moved = [&](Value x) { return value_at(row_of(x, n) + shift, side_of(x, n), m); };

  BorderPlan out;
  out.n = m;
  out.v = moved(plan.v);
  out.w = moved(plan.w);
  for (Value x : plan.b) out.b.push_back(moved(x));
  for (Value x : plan.c) out.c.push_back(moved(x));

  // The eight new rows in diagram order: `shift` on top, the rest below.
  std::vector<int> fresh;
  for (int r = 1; r <= shift; ++r) fresh.push_back(r);
  for (int r = diagram_rows(n) + shift + 1; r <= diagram_rows(m); ++r) fresh.push_back(r);

  // Over the new rows s1..s8: top line (L s1, R s2), (L s4, R s3); side line
  // (L s6, R s5), (L s7, R s8). An even shift keeps each pair on neighbouring
  // rows, one pair at d = -1 and one at d = +1 per line.
  const auto at = [&](std::size_t k, Side s) { return value_at(fresh[k], s, m); };
  out.b.insert(out.b.end(), {at(0, Side::left), at(1, Side::right), at(3, Side::left),
                             at(2, Side::right)});
  out.c.insert(out.c.end(), {at(5, Side::left), at(4, Side::right), at(6, Side::left),
                             at(7, Side::right)});
  return checked(std::move(out), "extension");
}

std::vector<std::pair<Value, Value>> missing_pairs(int m) {
  require_even(m);
  const Value t = 2 * Value(m);
  return {{1, t - 4}, {1, t - 2}, {1, t},     {1, t + 2}, {2, t - 5}, {2, t - 3}, {2, t - 1},
          {2, t + 1}, {3, t - 2}, {3, t},     {3, t + 2}, {4, t - 3}, {4, t - 1}, {4, t + 1},
          {5, t},     {5, t + 2}, {6, t - 1}, {6, t + 1}, {7, t + 2}, {8, t + 1}};
}

std::string to_string(SeedStatus status) {
  switch (status) {
    case SeedStatus::valid:
      return "valid";
    case SeedStatus::repaired_substitution:
      return "repaired (single substitution)";
    case SeedStatus::repaired_search:
      return "repaired (search)";
  }
  return "?";
}

namespace {

// Replace one line value by an unused pool value, keeping the corners.
std::optional<BorderPlan> repair_by_substitution(const BorderPlan& raw) {
  const auto pool = border_pool(raw.n);
  for (bool top : {true, false}) {
    const std::size_t len = top ? raw.b.size() : raw.c.size();
    for (std::size_t k = 0; k < len; ++k) {
      for (Value candidate : pool) {
        BorderPlan trial = raw;
        (top ? trial.b : trial.c)[k] = candidate;
        if (verify_border(trial).valid()) return trial;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

SeedOutcome seed_order_m(int m, Value v, Value w, const SeedTables& tables,
                         const SearchBudget& repair_budget) {
  require_even(m);
  if (m % 4 != 0 || m < 8) {
    throw std::invalid_argument("parameterized seeds cover m = 0 mod 4, m >= 8; got " +
                                std::to_string(m));
  }
  for (const auto& seed : tables.order_m) {
    if (seed.v.eval(m) != v || seed.w.eval(m) != w) continue;
    SeedOutcome out;
    out.label = seed.label();
    out.v = v;
    out.w = w;
    out.raw = instantiate(seed, tables, m);
    out.raw_report = verify_border(out.raw);
    if (out.raw_report.valid()) {
      out.status = SeedStatus::valid;
      out.plan = out.raw;
      return out;
    }
    if (auto fixed = repair_by_substitution(out.raw)) {
      out.status = SeedStatus::repaired_substitution;
      out.plan = std::move(*fixed);
      return out;
    }
    const SearchBudget budget =
        repair_budget.node_limit || repair_budget.time_limit ? repair_budget : default_repair_budget();
    out.status = SeedStatus::repaired_search;
    out.plan = checked(find_border({m, v, w}, budget).to_plan(), "seed repair search");
    return out;
  }
  throw std::invalid_argument("no parameterized seed for corners (" + std::to_string(v) + ", " +
                              std::to_string(w) + ") at m=" + std::to_string(m));
}

std::vector<SeedOutcome> audit_order_m(int m, const SeedTables& tables) {
  std::vector<SeedOutcome> out;
  for (const auto& seed : tables.order_m) {
    out.push_back(seed_order_m(m, seed.v.eval(m), seed.w.eval(m), tables));
  }
  return out;
}

std::string to_string(CornerSource source) {
  switch (source) {
    case CornerSource::order4_table:
      return "order4-table";
    case CornerSource::extension:
      return "extension";
    case CornerSource::param_table:
      return "param-table";
    case CornerSource::param_table_repaired:
      return "param-table-repaired";
    case CornerSource::search:
      return "search";
  }
  return "?";
}

namespace {

using CornerMap = std::map<std::pair<Value, Value>, CornerBorder>;

std::vector<std::pair<Value, Value>> canonical_pairs(int n) {
  std::vector<std::pair<Value, Value>> out;
  for (Value v = 1; v <= diagram_rows(n); ++v) {
    for (Value w = v + 1; w <= diagram_rows(n); ++w) {
      if ((v + w) % 2 == 1) out.emplace_back(v, w);
    }
  }
  return out;
}

// Border with corners (w, v) from one with corners (v, w).
BorderPlan swap_corners(const BorderPlan& plan) {
  return apply_symmetry(plan, Symmetry::reflect_vertical);
}

CornerMap build_canonical(int n, const CornerMap* previous) {
  CornerMap out;
  if (n == 4) {
    for (const auto& seed : builtin_seed_tables().order4) {
      BorderPlan plan{4, seed.v, seed.w, seed.b, seed.c};
      if (!verify_border(plan).valid()) continue;
      if (plan.v > plan.w) plan = swap_corners(plan);
      out.try_emplace({plan.v, plan.w}, CornerBorder{plan, CornerSource::order4_table});
    }
  } else if (previous) {
    for (const auto& [key, border] : *previous) {
      for (int shift = 0; shift <= 8; shift += 2) {
        const std::pair<Value, Value> target{key.first + shift, key.second + shift};
        if (target.second > diagram_rows(n) || out.contains(target)) continue;
        out.emplace(target, CornerBorder{extend_border(border.plan, shift), CornerSource::extension});
      }
    }
  }
  for (const auto& key : canonical_pairs(n)) {
    if (out.contains(key)) continue;
    if (n % 4 == 0 && n >= 8) {
      try {
        const auto seed = seed_order_m(n, key.first, key.second);
        out.emplace(key, CornerBorder{seed.plan, seed.status == SeedStatus::valid
                                                     ? CornerSource::param_table
                                                     : CornerSource::param_table_repaired});
        continue;
      } catch (const std::invalid_argument&) {
        // No table entry for this pair.
      }
    }
    out.emplace(key, CornerBorder{checked(find_border({n, key.first, key.second},
                                                       default_repair_budget())
                                              .to_plan(),
                                          "corner search"),
                                  CornerSource::search});
  }
  return out;
}

}  // namespace

const CornerMap& canonical_corner_borders(int n) {
  require_even(n);
  static std::recursive_mutex mutex;
  static std::map<int, CornerMap> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  const CornerMap* previous = n >= 8 ? &canonical_corner_borders(n - 4) : nullptr;
  return cache.emplace(n, build_canonical(n, previous)).first->second;
}

BorderPlan construct_with_corners(int n, Value v, Value w) {
  if (!corners_feasible(n, v, w)) {
    if (v + w == complement_base(n)) {
      throw InfeasibleCorners("upper corners " + std::to_string(v) + " and " + std::to_string(w) +
                              " are complementary, so they cannot share a border");
    }
    throw InfeasibleCorners(
        "no magic border of inner order " + std::to_string(n) + " has upper corners (" +
        std::to_string(v) + ", " + std::to_string(w) +
        "): at even order the corners' small representatives must have opposite parity");
  }
  const Value a = small_of(v, n);
  const Value b = small_of(w, n);
  const auto& table = canonical_corner_borders(n);
  const BorderPlan& base = table.at({std::min(a, b), std::max(a, b)}).plan;
  for (Symmetry s : kAllSymmetries) {
    BorderPlan image = apply_symmetry(base, s);
    if (image.v == v && image.w == w) return checked(std::move(image), "corner symmetry");
  }
  throw std::logic_error("no symmetry maps the canonical border onto the requested corners");
}

}  // namespace bordered
