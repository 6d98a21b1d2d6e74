#include "bordered/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace bordered {

CanonicalBorder CanonicalBorder::from_plan(const BorderPlan& plan) {
  CanonicalBorder out{plan.n, plan.v, plan.w, plan.b, plan.c};
  std::sort(out.b.begin(), out.b.end());
  std::sort(out.c.begin(), out.c.end());
  return out;
}

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::complete:
      return "complete";
    case SearchStatus::stopped:
      return "stopped";
    case SearchStatus::budget_exhausted:
      return "budget exhausted";
  }
  return "?";
}

namespace {

void validate_key(const OmegaKey& key) {
  require_inner_order(key.n);
  if (!in_pool(key.v, key.n) || !in_pool(key.w, key.n)) {
    throw std::invalid_argument("corners must lie in the border pool of inner order " +
                                std::to_string(key.n));
  }
  if (key.v == key.w) throw std::invalid_argument("corners must differ");
  if (key.v + key.w == complement_base(key.n)) {
    throw std::invalid_argument("corners " + std::to_string(key.v) + " and " +
                                std::to_string(key.w) + " are complementary");
  }
}

class Searcher {
 public:
  Searcher(const OmegaKey& key, const SearchBudget& budget, const BorderSink& sink)
      : key_(key), budget_(budget), sink_(sink), cbase_(complement_base(key.n)) {
    const int skip_v = row_of(key.v, key.n);
    const int skip_w = row_of(key.w, key.n);
    for (int r = 1; r <= diagram_rows(key.n); ++r) {
      if (r != skip_v && r != skip_w) rows_.push_back(r);
    }
    prefix_.assign(rows_.size() + 1, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) prefix_[i + 1] = prefix_[i] + rows_[i];

    const Value target = magic_constant(key.n + 2);
    top_target_ = target - key.v - key.w;
    side_target_ = target - key.v - (cbase_ - key.w);
    b_.reserve(static_cast<std::size_t>(key.n));
    c_.reserve(static_cast<std::size_t>(key.n));
    if (budget_.time_limit) deadline_ = std::chrono::steady_clock::now() + *budget_.time_limit;
  }

  SearchStats run() {
    descend(0, key_.n, key_.n, top_target_, side_target_);
    stats_.status = status_;
    return stats_;
  }

 private:
  // Feasible range for a sum of k values drawn from distinct rows rows_[i..],
  // each row giving either r or C - r: both extremes use the k smallest rows.
  bool reachable(std::size_t i, int k, Value remaining) const {
    const Value smallest = prefix_[i + static_cast<std::size_t>(k)] - prefix_[i];
    return remaining >= smallest && remaining <= Value(k) * cbase_ - smallest;
  }

  bool over_budget() {
    if (budget_.node_limit && stats_.nodes > *budget_.node_limit) return true;
    if (deadline_ && (stats_.nodes & 0xFFF) == 0 && std::chrono::steady_clock::now() > *deadline_) {
      return true;
    }
    return false;
  }

  // Returns false once the search must stop.
  bool descend(std::size_t i, int kb, int kc, Value top_left, Value side_left) {
    ++stats_.nodes;
    if (over_budget()) {
      status_ = SearchStatus::budget_exhausted;
      return false;
    }
    if (i == rows_.size()) {
      if (top_left != 0 || side_left != 0) return true;
      return emit();
    }
    const int row = rows_[i];
    const Value choices[2] = {Value(row), cbase_ - row};
    if (kb > 0) {
      for (Value x : choices) {
        if (!reachable(i + 1, kb - 1, top_left - x) || !reachable(i + 1, kc, side_left)) continue;
        b_.push_back(x);
        const bool go = descend(i + 1, kb - 1, kc, top_left - x, side_left);
        b_.pop_back();
        if (!go) return false;
      }
    }
    if (kc > 0) {
      for (Value x : choices) {
        if (!reachable(i + 1, kb, top_left) || !reachable(i + 1, kc - 1, side_left - x)) continue;
        c_.push_back(x);
        const bool go = descend(i + 1, kb, kc - 1, top_left, side_left - x);
        c_.pop_back();
        if (!go) return false;
      }
    }
    return true;
  }

  bool emit() {
    CanonicalBorder border{key_.n, key_.v, key_.w, b_, c_};
    std::sort(border.b.begin(), border.b.end());
    std::sort(border.c.begin(), border.c.end());
    ++stats_.solutions;
    const bool more = sink_(border);
    if (!more || (budget_.solution_limit && stats_.solutions >= *budget_.solution_limit)) {
      status_ = SearchStatus::stopped;
      return false;
    }
    return true;
  }

  OmegaKey key_;
  SearchBudget budget_;
  const BorderSink& sink_;
  Value cbase_;
  std::vector<int> rows_;
  std::vector<Value> prefix_;
  Value top_target_ = 0;
  Value side_target_ = 0;
  std::vector<Value> b_;
  std::vector<Value> c_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  SearchStats stats_;
  SearchStatus status_ = SearchStatus::complete;
};

}  // namespace

SearchStats enumerate_omega(const OmegaKey& key, const SearchBudget& budget,
                            const BorderSink& sink) {
  validate_key(key);
  if (budget.solution_limit && *budget.solution_limit == 0) {
    return {SearchStatus::stopped, 0, 0};
  }
  return Searcher(key, budget, sink).run();
}

std::vector<CanonicalBorder> collect_omega(const OmegaKey& key, const SearchBudget& budget,
                                           SearchStats* stats) {
  std::vector<CanonicalBorder> out;
  const auto s = enumerate_omega(key, budget, [&](const CanonicalBorder& border) {
    out.push_back(border);
    return true;
  });
  if (stats) *stats = s;
  return out;
}

CanonicalBorder search_first(const OmegaKey& key, const SearchBudget& budget) {
  SearchBudget one = budget;
  one.solution_limit = 1;
  std::optional<CanonicalBorder> found;
  const auto stats = enumerate_omega(key, one, [&](const CanonicalBorder& border) {
    found = border;
    return false;
  });
  if (found) return *found;
  if (stats.status == SearchStatus::budget_exhausted) {
    throw BudgetExhausted("search budget exhausted after " + std::to_string(stats.nodes) +
                          " nodes without a border for corners (" + std::to_string(key.v) + ", " +
                          std::to_string(key.w) + ")");
  }
  const bool same_parity = small_of(key.v, key.n) % 2 == small_of(key.w, key.n) % 2;
  if (key.n % 2 == 0 && !same_parity) {
    throw std::logic_error("no border found for opposite-parity corners at even order; "
                           "this contradicts the parity characterization");
  }
  throw InfeasibleCorners("no magic border of inner order " + std::to_string(key.n) +
                          " has upper corners (" + std::to_string(key.v) + ", " +
                          std::to_string(key.w) + ")");
}

namespace {

// Items chosen (by index) to hit target exactly, or nullopt.
std::optional<std::vector<std::size_t>> subset_with_sum(const std::vector<Value>& items,
                                                        Value target) {
  Value total = 0;
  for (Value x : items) total += x;
  if (target < 0 || target > total) return std::nullopt;
  constexpr int kUnset = -1;
  std::vector<int> via(static_cast<std::size_t>(target) + 1, kUnset);
  std::vector<char> reached(via.size(), 0);
  reached[0] = 1;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const Value x = items[k];
    for (Value t = target; t >= x; --t) {
      const auto ti = static_cast<std::size_t>(t);
      if (!reached[ti] && reached[ti - static_cast<std::size_t>(x)]) {
        reached[ti] = 1;
        via[ti] = static_cast<int>(k);
      }
    }
    if (reached[static_cast<std::size_t>(target)]) break;
  }
  if (!reached[static_cast<std::size_t>(target)]) return std::nullopt;
  std::vector<std::size_t> out;
  for (Value t = target; t > 0;) {
    const auto k = static_cast<std::size_t>(via[static_cast<std::size_t>(t)]);
    out.push_back(k);
    t -= items[k];
  }
  return out;
}

// Values for the given rows summing to target, or nullopt. A row gives i on
// the left and i + (C - 2i) on the right.
std::optional<std::vector<Value>> sign_line(const std::vector<int>& rows, Value target, int n) {
  const Value cbase = complement_base(n);
  std::vector<Value> gains;
  Value base = 0;
  for (int r : rows) {
    base += r;
    gains.push_back(cbase - 2 * Value(r));
  }
  const auto right = subset_with_sum(gains, target - base);
  if (!right) return std::nullopt;
  std::vector<Side> side(rows.size(), Side::left);
  for (std::size_t k : *right) side[k] = Side::right;
  std::vector<Value> out;
  for (std::size_t k = 0; k < rows.size(); ++k) out.push_back(value_at(rows[k], side[k], n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<CanonicalBorder> split_solve(const OmegaKey& key) {
  validate_key(key);
  const int n = key.n;
  const Value cbase = complement_base(n);
  const Value target = magic_constant(n + 2);
  const Value top = target - key.v - key.w;
  const Value left = target - key.v - (cbase - key.w);

  std::vector<int> free_rows;
  for (int r = 1; r <= diagram_rows(n); ++r) {
    if (r != row_of(key.v, n) && r != row_of(key.w, n)) free_rows.push_back(r);
  }
  // Alternating split, then every single swap, then every double swap.
  std::vector<char> in_top(free_rows.size(), 0);
  for (std::size_t k = 0; k < free_rows.size(); k += 2) in_top[k] = 1;

  auto attempt = [&]() -> std::optional<CanonicalBorder> {
    std::vector<int> b_rows, c_rows;
    for (std::size_t k = 0; k < free_rows.size(); ++k) {
      (in_top[k] ? b_rows : c_rows).push_back(free_rows[k]);
    }
    auto b = sign_line(b_rows, top, n);
    if (!b) return std::nullopt;
    auto c = sign_line(c_rows, left, n);
    if (!c) return std::nullopt;
    return CanonicalBorder{n, key.v, key.w, std::move(*b), std::move(*c)};
  };
  auto swapped = [&](std::size_t x, std::size_t y) {
    std::swap(in_top[x], in_top[y]);
  };

  if (auto found = attempt()) return found;
  const std::size_t count = free_rows.size();
  std::vector<std::pair<std::size_t, std::size_t>> swaps;
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t y = x + 1; y < count; ++y) {
      if (in_top[x] != in_top[y]) swaps.emplace_back(x, y);
    }
  }
  for (const auto& [x, y] : swaps) {
    swapped(x, y);
    auto found = attempt();
    swapped(x, y);
    if (found) return found;
  }
  for (std::size_t i = 0; i < swaps.size(); ++i) {
    for (std::size_t j = i + 1; j < swaps.size(); ++j) {
      const auto [x1, y1] = swaps[i];
      const auto [x2, y2] = swaps[j];
      if (x1 == x2 || x1 == y2 || y1 == x2 || y1 == y2) continue;
      swapped(x1, y1);
      swapped(x2, y2);
      auto found = attempt();
      swapped(x2, y2);
      swapped(x1, y1);
      if (found) return found;
    }
  }
  return std::nullopt;
}

CanonicalBorder find_border(const OmegaKey& key, const SearchBudget& budget) {
  if (auto found = split_solve(key)) return *found;
  return search_first(key, budget);
}

CountTable count_omega(int n, const SearchBudget& budget, CornerRange range, unsigned threads) {
  require_inner_order(n);
  std::vector<std::pair<Value, Value>> keys;
  const std::vector<Value> corners =
      range == CornerRange::small_only
          ? [&] {
              std::vector<Value> xs;
              for (Value x = 1; x <= diagram_rows(n); ++x) xs.push_back(x);
              return xs;
            }()
          : border_pool(n);
  for (Value v : corners) {
    for (Value w : corners) {
      if (v != w && v + w != complement_base(n)) keys.emplace_back(v, w);
    }
  }

  std::vector<SearchStats> results(keys.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < keys.size(); i = next++) {
      SearchBudget per_key = budget;
      per_key.solution_limit.reset();
      results[i] = enumerate_omega({n, keys[i].first, keys[i].second}, per_key,
                                   [](const CanonicalBorder&) { return true; });
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, keys.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  CountTable table;
  table.n = n;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    table.counts[keys[i]] = results[i].solutions;
    if (results[i].status == SearchStatus::budget_exhausted) {
      table.status = SearchStatus::budget_exhausted;
      table.partial.push_back(keys[i]);
    }
  }
  return table;
}

std::string format_counts(const CountTable& table) {
  std::ostringstream os;
  for (const auto& [key, count] : table.counts) {
    os << key.first << ' ' << key.second << ' ' << count << '\n';
  }
  return os.str();
}

}  // namespace bordered
