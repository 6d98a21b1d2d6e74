#include "bordered/construct.hpp"

#include <optional>
#include <utility>
#include <vector>
#include <stdexcept>
#include <string>

#include "bordered/enumerate.hpp"
#include "bordered/verify.hpp"

namespace bordered {

namespace {

class SchemeBuilder {
 public:
  explicit SchemeBuilder(int n) { scheme_.n = n; }

  Value take(int row, Side side, Role role) {
    scheme_.selections.push_back({row, side, role});
    return value_at(row, side, scheme_.n);
  }

  void pair(Value x, Value y, PairLabel label) { scheme_.pairs.push_back({x, y, label}); }

  // Four consecutive rows a..a+3 taken as L_a, R_a+1, L_a+3, R_a+2; the two
  // pairs have d = -1 and +1.
  void block(int a, Role role) {
    const PairLabel label = role == Role::b ? PairLabel::b_pair : PairLabel::c_pair;
    const Value x0 = take(a, Side::left, role);
    const Value x1 = take(a + 1, Side::right, role);
    const Value x3 = take(a + 3, Side::left, role);
    const Value x2 = take(a + 2, Side::right, role);
    pair(x0, x1, label);
    pair(x3, x2, label);
  }

  // Blocks from `first_row` to the bottom of the diagram, top-line first.
  void blocks_from(int first_row) {
    Role role = Role::b;
    for (int a = first_row; a + 3 <= diagram_rows(scheme_.n); a += 4) {
      block(a, role);
      role = role == Role::b ? Role::c : Role::b;
    }
  }

  PairingScheme finish() {
    const auto problems = selection_problems(scheme_);
    if (!problems.empty()) {
      throw std::logic_error("recipe produced a malformed scheme: " + problems.front());
    }
    return std::move(scheme_);
  }

 private:
  PairingScheme scheme_;
};

constexpr auto L = Side::left;
constexpr auto R = Side::right;
constexpr auto kB = PairLabel::b_pair;
constexpr auto kC = PairLabel::c_pair;

}  // namespace

RecipeCase recipe_case(int n) {
  require_inner_order(n);
  if (n == 3) return RecipeCase::n3_special;
  if (n % 2 == 1) return RecipeCase::odd_general;
  return n % 4 == 0 ? RecipeCase::even_4k : RecipeCase::even_4k_plus_2;
}

PairingScheme recipe_even_4k(int k) {
  if (k < 1) throw std::invalid_argument("recipe_even_4k needs k >= 1");
  SchemeBuilder s(4 * k);
  const Value b1 = s.take(1, L, Role::b);
  const Value v = s.take(2, R, Role::v);
  const Value b2 = s.take(3, L, Role::b);
  const Value b3 = s.take(4, R, Role::b);
  const Value w = s.take(5, R, Role::w);
  const Value c1 = s.take(6, L, Role::c);
  const Value b4 = s.take(7, L, Role::b);
  const Value c2 = s.take(8, R, Role::c);
  const Value c3 = s.take(9, L, Role::c);
  const Value c4 = s.take(10, R, Role::c);
  s.pair(v, b1, kB);   // d = -1
  s.pair(b2, b3, kB);  // d = -1
  s.pair(b4, w, kB);   // d = +2
  s.pair(c1, c2, kC);  // d = -2
  s.pair(c3, c4, kC);  // d = -1
  s.blocks_from(11);
  return s.finish();
}

PairingScheme recipe_even_4k_plus_2(int k) {
  if (k < 1) throw std::invalid_argument("recipe_even_4k_plus_2 needs k >= 1");
  SchemeBuilder s(4 * k + 2);
  const Value v = s.take(1, L, Role::v);
  const Value b1 = s.take(2, R, Role::b);
  const Value b2 = s.take(3, R, Role::b);
  const Value w = s.take(4, L, Role::w);
  const Value b3 = s.take(5, L, Role::b);
  const Value b4 = s.take(6, R, Role::b);
  const Value b5 = s.take(7, R, Role::b);
  const Value b6 = s.take(8, L, Role::b);
  const Value c1 = s.take(10, L, Role::c);
  const Value c2 = s.take(9, R, Role::c);
  const Value c3 = s.take(11, R, Role::c);
  const Value c4 = s.take(12, L, Role::c);
  const Value c5 = s.take(13, R, Role::c);
  const Value c6 = s.take(14, L, Role::c);
  s.pair(v, b1, kB);   // -1
  s.pair(w, b2, kB);   // +1
  s.pair(b3, b4, kB);  // -1
  s.pair(b6, b5, kB);  // +1
  s.pair(c1, c2, kC);  // +1
  s.pair(c4, c3, kC);  // +1
  s.pair(c6, c5, kC);  // +1, total -d(v, complement(w)) = 3
  s.blocks_from(15);
  return s.finish();
}

PairingScheme recipe_odd(int n) {
  if (n % 2 == 0 || n < 5) {
    throw std::invalid_argument("recipe_odd needs odd n >= 5, got " + std::to_string(n));
  }
  SchemeBuilder s(n);
  s.take(n + 7, L, Role::v);
  const Value w = s.take(n + 1, L, Role::w);
  const Value w_bar = value_at(n + 1, R, n);

  // Upper rows 1..n-3 give right-column values, lower rows n+5..2n+2 the
  // left-column values they are matched with: (L(n+5), R1) and (L(n+6), R2)
  // with d = n+4, then (L(n+7+t), R(2+t)) with d = n+5, top line at even t.
  auto links = [&](Role role) {
    std::vector<std::pair<int, int>> out;  // (left row, right row)
    out.push_back(role == Role::b ? std::pair{n + 5, 1} : std::pair{n + 6, 2});
    for (int t = 1; t <= n - 5; ++t) {
      if ((t % 2 == 0) == (role == Role::b)) out.push_back({n + 7 + t, 2 + t});
    }
    return out;
  };
  for (Role role : {Role::b, Role::c}) {
    const auto label = role == Role::b ? kB : kC;
    const auto ls = links(role);
    std::vector<Value> right;
    for (const auto& link : ls) right.push_back(s.take(link.second, R, role));
    for (std::size_t i = 0; i < ls.size(); ++i) {
      s.pair(s.take(ls[i].first, L, role), right[i], label);
    }
  }

  // Middle seven rows n-2..n+4; each of the four pairs has d = +2.
  const Value b_hi = s.take(n - 1, R, Role::b);
  const Value b_mid = s.take(n + 2, R, Role::b);
  const Value b_lo = s.take(n + 4, L, Role::b);
  const Value c_hi = s.take(n - 2, R, Role::c);
  const Value c_mid = s.take(n, L, Role::c);
  const Value c_lo = s.take(n + 3, L, Role::c);
  s.pair(w, b_hi, kB);
  s.pair(b_lo, b_mid, kB);
  s.pair(c_mid, c_hi, kC);
  s.pair(c_lo, w_bar, kC);
  return s.finish();
}

PairingScheme recipe_n3() {
  static const PairingScheme cached = [] {
    // First border in (v, w) order found by the exhaustive search.
    const int n = 3;
    for (Value v : border_pool(n)) {
      for (Value w : border_pool(n)) {
        if (v == w || v + w == complement_base(n)) continue;
        SearchBudget budget;
        budget.solution_limit = 1;
        std::optional<CanonicalBorder> found;
        enumerate_omega({n, v, w}, budget, [&](const CanonicalBorder& border) {
          found = border;
          return false;
        });
        if (found) return scheme_from_plan(found->to_plan());
      }
    }
    throw std::logic_error("no order-3 magic border exists; search is broken");
  }();
  return cached;
}

BorderConstruction build_border(int n) {
  PairingScheme scheme;
  switch (recipe_case(n)) {
    case RecipeCase::n3_special:
      scheme = recipe_n3();
      break;
    case RecipeCase::odd_general:
      scheme = recipe_odd(n);
      break;
    case RecipeCase::even_4k:
      scheme = recipe_even_4k(n / 4);
      break;
    case RecipeCase::even_4k_plus_2:
      scheme = recipe_even_4k_plus_2((n - 2) / 4);
      break;
  }
  BorderConstruction out{plan_from_scheme(scheme), std::move(scheme)};
  if (const auto report = verify_border(out.plan); !report.valid()) {
    throw std::logic_error("recipe for n=" + std::to_string(n) + " failed verification:\n" +
                           report.to_text());
  }
  return out;
}

}  // namespace bordered
