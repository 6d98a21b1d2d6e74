#include "bordered/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "bordered/kernels.hpp"

namespace bordered {

void CheckReport::add(std::string condition, std::string location, Value expected,
                      Value actual) {
  violations.push_back({std::move(condition), std::move(location), expected, actual});
}

bool CheckReport::has(const std::string& condition) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.condition == condition; });
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  if (valid()) {
    os << "valid\n";
    return os.str();
  }
  os << "invalid: " << violations.size() << " violation(s)\n";
  for (const auto& v : violations) {
    os << "  " << v.condition << " at " << v.location << ": expected " << v.expected
       << ", got " << v.actual << '\n';
  }
  return os.str();
}

namespace {

struct Member {
  std::string location;
  Value value;
};

std::vector<Member> members_of(const BorderPlan& plan) {
  std::vector<Member> out;
  out.push_back({"v", plan.v});
  out.push_back({"w", plan.w});
  for (std::size_t i = 0; i < plan.b.size(); ++i) {
    out.push_back({"b[" + std::to_string(i + 1) + "]", plan.b[i]});
  }
  for (std::size_t i = 0; i < plan.c.size(); ++i) {
    out.push_back({"c[" + std::to_string(i + 1) + "]", plan.c[i]});
  }
  return out;
}

Value sum_of(const std::vector<Value>& xs) {
  Value s = 0;
  for (Value x : xs) s += x;
  return s;
}

}  // namespace

CheckReport verify_border(const BorderPlan& plan) {
  CheckReport report;
  if (plan.n < 3) {
    report.add("order", "n", 3, plan.n);
    return report;
  }
  const int n = plan.n;
  const Value cbase = complement_base(n);
  const Value target = magic_constant(n + 2);

  if (plan.b.size() != static_cast<std::size_t>(n)) {
    report.add("b_length", "top row", n, static_cast<Value>(plan.b.size()));
  }
  if (plan.c.size() != static_cast<std::size_t>(n)) {
    report.add("c_length", "left column", n, static_cast<Value>(plan.c.size()));
  }

  std::unordered_map<Value, std::string> seen;
  for (const auto& m : members_of(plan)) {
    if (!in_pool(m.value, n)) {
      report.add("pool", m.location, pool_max(n), m.value);
      continue;
    }
    if (auto it = seen.find(m.value); it != seen.end()) {
      report.add("duplicate", m.location + " repeats " + it->second, m.value, m.value);
      continue;
    }
    if (auto it = seen.find(cbase - m.value); it != seen.end()) {
      report.add("complement_clash", m.location + " complements " + it->second, cbase - m.value,
                 m.value);
    }
    seen.emplace(m.value, m.location);
  }

  const Value row = plan.v + sum_of(plan.b) + plan.w;
  if (row != target) report.add("row_sum", "top row", target, row);
  const Value column = plan.v + sum_of(plan.c) + (cbase - plan.w);
  if (column != target) report.add("column_sum", "left column", target, column);
  return report;
}

namespace {

std::vector<Value> sorted(std::vector<Value> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

}  // namespace

CheckReport verify_balance(const BorderPlan& plan, const PairingScheme& pairing) {
  require_inner_order(plan.n);
  if (pairing.n != plan.n) {
    throw std::invalid_argument("pairing is for inner order " + std::to_string(pairing.n) +
                                ", plan for " + std::to_string(plan.n));
  }
  const int n = plan.n;
  const Value cbase = complement_base(n);
  const bool even = n % 2 == 0;

  std::vector<Value> beta_need = plan.b;
  std::vector<Value> gamma_need = plan.c;
  beta_need.push_back(plan.w);
  if (even) {
    beta_need.push_back(plan.v);
  } else {
    gamma_need.push_back(cbase - plan.w);
  }

  std::vector<Value> beta_have;
  std::vector<Value> gamma_have;
  Value beta_sum = 0;
  Value gamma_sum = 0;
  for (const auto& p : pairing.pairs) {
    auto& have = p.label == PairLabel::b_pair ? beta_have : gamma_have;
    have.push_back(p.first);
    have.push_back(p.second);
    (p.label == PairLabel::b_pair ? beta_sum : gamma_sum) += pair_d(p, n);
  }
  if (sorted(beta_have) != sorted(beta_need)) {
    throw std::invalid_argument("top-line pairs do not cover exactly the required members");
  }
  if (sorted(gamma_have) != sorted(gamma_need)) {
    throw std::invalid_argument("side-line pairs do not cover exactly the required members");
  }

  CheckReport report;
  if (even) {
    const Value gamma_target = -(plan.v + (cbase - plan.w) - cbase);
    if (beta_sum != 0) report.add("beta_balance", "top-line pairs", 0, beta_sum);
    if (gamma_sum != gamma_target) {
      report.add("gamma_balance", "side-line pairs", gamma_target, gamma_sum);
    }
  } else {
    const Value target = -d_corner(plan.v, n);
    if (beta_sum != target) report.add("beta_balance", "top-line pairs", target, beta_sum);
    if (gamma_sum != target) report.add("gamma_balance", "side-line pairs", target, gamma_sum);
  }
  return report;
}

CheckReport verify_frame(const BorderFrame& frame) {
  CheckReport report;
  const int n = frame.inner_order();
  if (n < 3) {
    report.add("order", "frame", 5, frame.size());
    return report;
  }
  const int size = frame.size();
  const Value cbase = complement_base(n);
  const Value target = magic_constant(size);

  bool complete = true;
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) {
      const std::string where = "cell (" + std::to_string(r) + "," + std::to_string(c) + ")";
      if (!frame.on_border(r, c)) {
        if (frame.at(r, c) != BorderFrame::kEmpty) {
          report.add("interior", where, BorderFrame::kEmpty, frame.at(r, c));
        }
        continue;
      }
      if (frame.at(r, c) == BorderFrame::kEmpty) {
        report.add("missing", where, 1, BorderFrame::kEmpty);
        complete = false;
        continue;
      }
      // Corners pair diagonally, edge cells straight across; each pair once.
      const bool row_edge = r == 0 || r == size - 1;
      const bool col_edge = c == 0 || c == size - 1;
      const int orow = row_edge ? size - 1 - r : r;
      const int ocol = col_edge ? size - 1 - c : c;
      if (std::make_pair(r, c) < std::make_pair(orow, ocol)) {
        const Value s = frame.at(r, c) + frame.at(orow, ocol);
        if (s != cbase) report.add("opposite_complement", where, cbase, s);
      }
    }
  }
  if (!complete) return report;

  for (const auto& v : verify_border(plan_from_frame(frame)).violations) {
    // The frame's own line checks below replace the plan's derived column.
    if (v.condition != "row_sum" && v.condition != "column_sum") report.violations.push_back(v);
  }

  Value top = 0, bottom = 0, left = 0, right = 0;
  for (int i = 0; i < size; ++i) {
    top += frame.at(0, i);
    bottom += frame.at(size - 1, i);
    left += frame.at(i, 0);
    right += frame.at(i, size - 1);
  }
  if (top != target) report.add("row_sum", "top row", target, top);
  if (bottom != target) report.add("row_sum", "bottom row", target, bottom);
  if (left != target) report.add("column_sum", "left column", target, left);
  if (right != target) report.add("column_sum", "right column", target, right);
  return report;
}

namespace {

kernels::GridView view_of(const MagicSquare& sq) {
  const auto n = static_cast<std::size_t>(sq.order());
  return {sq.cells().data(), n, n, n};
}

void check_lines(const kernels::GridView& view, Value target, const std::string& prefix,
                 CheckReport& report) {
  std::vector<Value> sums(view.rows);
  kernels::row_sums(view, sums);
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (sums[i] != target) report.add("row_sum", prefix + "row " + std::to_string(i), target, sums[i]);
  }
  sums.assign(view.cols, 0);
  kernels::col_sums(view, sums);
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (sums[i] != target) {
      report.add("column_sum", prefix + "column " + std::to_string(i), target, sums[i]);
    }
  }
  if (Value d = kernels::diagonal_sum(view); d != target) {
    report.add("diagonal_sum", prefix + "main diagonal", target, d);
  }
  if (Value d = kernels::anti_diagonal_sum(view); d != target) {
    report.add("diagonal_sum", prefix + "anti-diagonal", target, d);
  }
}

}  // namespace

CheckReport verify_square(const MagicSquare& square) {
  CheckReport report;
  const int order = square.order();
  if (order < 1) {
    report.add("order", "square", 1, order);
    return report;
  }
  const Value cells = Value(order) * order;
  std::vector<bool> seen(static_cast<std::size_t>(cells) + 1, false);
  for (int r = 0; r < order; ++r) {
    for (int c = 0; c < order; ++c) {
      const Value x = square.at(r, c);
      const std::string where = "cell (" + std::to_string(r) + "," + std::to_string(c) + ")";
      if (x < 1 || x > cells) {
        report.add("entry_range", where, cells, x);
      } else if (seen[static_cast<std::size_t>(x)]) {
        report.add("duplicate", where, x, x);
      } else {
        seen[static_cast<std::size_t>(x)] = true;
      }
    }
  }
  check_lines(view_of(square), magic_constant(order), "", report);
  return report;
}

CheckReport verify_bordered(const MagicSquare& square) {
  CheckReport report = verify_square(square);
  const int order = square.order();
  if (order < 5) return report;

  const Value pair_sum = Value(order) * order + 1;
  const int stop = order % 2 == 0 ? 4 : 3;
  const auto full = view_of(square);

  // Frames of every layer above the core must be complementary across the center.
  for (int m = order; m > stop; m -= 2) {
    const int lo = (order - m) / 2;
    const int hi = lo + m - 1;
    for (int r = lo; r <= hi; ++r) {
      for (int c = lo; c <= hi; ++c) {
        if (r != lo && r != hi && c != lo && c != hi) continue;
        // Corners pair diagonally, edge cells straight across.
        const bool row_edge = r == lo || r == hi;
        const bool col_edge = c == lo || c == hi;
        const int orow = row_edge ? order - 1 - r : r;
        const int ocol = col_edge ? order - 1 - c : c;
        if (std::make_pair(r, c) >= std::make_pair(orow, ocol)) continue;
        const Value s = square.at(r, c) + square.at(orow, ocol);
        if (s != pair_sum) {
          report.add("opposite_complement",
                     "layer " + std::to_string(m) + " cell (" + std::to_string(r) + "," +
                         std::to_string(c) + ")",
                     pair_sum, s);
        }
      }
    }
  }

  for (int m = order - 2; m >= stop; m -= 2) {
    const auto lo = static_cast<std::size_t>((order - m) / 2);
    const auto side = static_cast<std::size_t>(m);
    check_lines(full.sub(lo, lo, side, side), Value(m) * pair_sum / 2,
                "layer " + std::to_string(m) + " ", report);
  }
  return report;
}

}  // namespace bordered
