#pragma once

// Deterministic border recipes for every inner order n >= 3, each expressed
// as a two-column diagram matching.

#include "bordered/pairing.hpp"
#include "bordered/plan.hpp"

namespace bordered {

enum class RecipeCase { even_4k, even_4k_plus_2, odd_general, n3_special };

/// n % 4 == 0 -> even_4k (n = 4 stops after the first part), n % 4 == 2 ->
/// even_4k_plus_2, odd n >= 5 -> odd_general, n == 3 -> n3_special.
RecipeCase recipe_case(int n);

struct BorderConstruction {
  BorderPlan plan;
  PairingScheme scheme;
};

/// Same n, same plan. The plan always passes verify_border.
BorderConstruction build_border(int n);

/// n = 4k. First part on diagram rows 1..10, then alternating top-line and
/// side-line blocks of four rows, each block matched (L_a, R_a+1),
/// (L_a+3, R_a+2).
PairingScheme recipe_even_4k(int k);

/// n = 4k + 2. First part on rows 1..14, then blocks as in recipe_even_4k.
PairingScheme recipe_even_4k_plus_2(int k);

/// Odd n >= 5. Rows split into 1..n-3, n-2..n+4 and n+5..2n+2; the corner v
/// is L(n+7) and every top-line and side-line d-sum is (n^2+2n-9)/2.
PairingScheme recipe_odd(int n);

/// Order-3 border from an exhaustive search (computed once).
PairingScheme recipe_n3();

}  // namespace bordered
