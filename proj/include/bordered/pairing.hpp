#pragma once

// Two-column diagram matchings. A scheme records which side of every diagram
// row was taken and what the taken value became (corner, top-line or
// side-line member), plus the pairs whose d-values balance each line.

#include <cstdint>
#include <vector>

#include "bordered/core.hpp"
#include "bordered/plan.hpp"

namespace bordered {

enum class Role : std::uint8_t { v, w, b, c };

/// b_pair members sum into the top line (beta), c_pair members into the left
/// line (gamma).
enum class PairLabel : std::uint8_t { b_pair, c_pair };

struct Selection {
  int row = 0;
  Side side = Side::left;
  Role role = Role::b;

  friend bool operator==(const Selection&, const Selection&) = default;
};

struct Pair {
  Value first = 0;
  Value second = 0;
  PairLabel label = PairLabel::b_pair;

  friend bool operator==(const Pair&, const Pair&) = default;
};

struct PairingScheme {
  int n = 0;
  // In the order the values are placed on their line.
  std::vector<Selection> selections;
  std::vector<Pair> pairs;

  friend bool operator==(const PairingScheme&, const PairingScheme&) = default;
};

/// Rows untouched or touched twice, role counts other than (1, 1, n, n).
/// Empty when the scheme's selections are well formed.
std::vector<std::string> selection_problems(const PairingScheme& scheme);

/// Materializes the selections as a plan (b and c in selection order).
BorderPlan plan_from_scheme(const PairingScheme& scheme);

/// Pairs the members each line needs, consecutively in line order. Even n:
/// beta = {v, b..., w}, gamma = {c...}. Odd n: beta = {b..., w},
/// gamma = {c..., complement(w)}.
std::vector<Pair> sequential_pairs(const BorderPlan& plan);

/// Scheme for an arbitrary valid plan: selections read from its values,
/// pairs from sequential_pairs.
PairingScheme scheme_from_plan(const BorderPlan& plan);

Value pair_d(const Pair& p, int n);

}  // namespace bordered
