#include "bordered/pairing.hpp"

#include <stdexcept>
#include <string>

namespace bordered {

std::vector<std::string> selection_problems(const PairingScheme& scheme) {
  std::vector<std::string> problems;
  const int rows = diagram_rows(scheme.n);
  std::vector<int> hits(static_cast<std::size_t>(rows) + 1, 0);
  int counts[4] = {0, 0, 0, 0};
  for (const auto& s : scheme.selections) {
    if (s.row < 1 || s.row > rows) {
      problems.push_back("row " + std::to_string(s.row) + " outside the diagram");
      continue;
    }
    ++hits[static_cast<std::size_t>(s.row)];
    ++counts[static_cast<int>(s.role)];
  }
  for (int r = 1; r <= rows; ++r) {
    const int h = hits[static_cast<std::size_t>(r)];
    if (h != 1) {
      problems.push_back("row " + std::to_string(r) + " selected " + std::to_string(h) + " times");
    }
  }
  const int want[4] = {1, 1, scheme.n, scheme.n};
  const char* names[4] = {"v", "w", "b", "c"};
  for (int i = 0; i < 4; ++i) {
    if (counts[i] != want[i]) {
      problems.push_back(std::string(names[i]) + " tagged " + std::to_string(counts[i]) +
                         " times, expected " + std::to_string(want[i]));
    }
  }
  return problems;
}

BorderPlan plan_from_scheme(const PairingScheme& scheme) {
  require_inner_order(scheme.n);
  BorderPlan plan;
  plan.n = scheme.n;
  for (const auto& s : scheme.selections) {
    const Value x = value_at(s.row, s.side, scheme.n);
    switch (s.role) {
      case Role::v:
        plan.v = x;
        break;
      case Role::w:
        plan.w = x;
        break;
      case Role::b:
        plan.b.push_back(x);
        break;
      case Role::c:
        plan.c.push_back(x);
        break;
    }
  }
  return plan;
}

namespace {

void pair_up(const std::vector<Value>& members, PairLabel label, std::vector<Pair>& out) {
  if (members.size() % 2 != 0) {
    throw std::invalid_argument("odd number of line members cannot be paired");
  }
  for (std::size_t i = 0; i < members.size(); i += 2) {
    out.push_back({members[i], members[i + 1], label});
  }
}

}  // namespace

std::vector<Pair> sequential_pairs(const BorderPlan& plan) {
  require_inner_order(plan.n);
  std::vector<Value> beta;
  std::vector<Value> gamma(plan.c.begin(), plan.c.end());
  if (plan.n % 2 == 0) {
    beta.push_back(plan.v);
    beta.insert(beta.end(), plan.b.begin(), plan.b.end());
    beta.push_back(plan.w);
  } else {
    beta.assign(plan.b.begin(), plan.b.end());
    beta.push_back(plan.w);
    gamma.push_back(complement_base(plan.n) - plan.w);
  }
  std::vector<Pair> pairs;
  pair_up(beta, PairLabel::b_pair, pairs);
  pair_up(gamma, PairLabel::c_pair, pairs);
  return pairs;
}

PairingScheme scheme_from_plan(const BorderPlan& plan) {
  PairingScheme scheme;
  scheme.n = plan.n;
  auto select = [&](Value x, Role role) {
    scheme.selections.push_back({row_of(x, plan.n), side_of(x, plan.n), role});
  };
  select(plan.v, Role::v);
  select(plan.w, Role::w);
  for (Value x : plan.b) select(x, Role::b);
  for (Value x : plan.c) select(x, Role::c);
  scheme.pairs = sequential_pairs(plan);
  return scheme;
}

Value pair_d(const Pair& p, int n) { return p.first + p.second - complement_base(n); }

}  // namespace bordered
