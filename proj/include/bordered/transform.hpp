#pragma once

#include <array>
#include <span>
#include <string_view>

#include "bordered/plan.hpp"

namespace bordered {

/// The dihedral group of the square, acting on a rendered frame.
enum class Symmetry {
  identity,
  reflect_vertical,    // mirror left-right: corners (w, v)
  reflect_horizontal,  // mirror top-bottom: corners (w-bar, v-bar)
  rotate_180,          // corners (v-bar, w-bar)
  transpose,           // corners (v, w-bar); lines swap roles
  anti_transpose,      // corners (v-bar, w)
  rotate_90,           // clockwise: corners (w-bar, v)
  rotate_270,          // corners (w, v-bar)
};

inline constexpr std::array<Symmetry, 8> kAllSymmetries = {
    Symmetry::identity,  Symmetry::reflect_vertical, Symmetry::reflect_horizontal,
    Symmetry::rotate_180, Symmetry::transpose,       Symmetry::anti_transpose,
    Symmetry::rotate_90,  Symmetry::rotate_270};

std::string_view to_string(Symmetry s);
Symmetry symmetry_from_string(std::string_view name);

/// `first` applied, then `second`.
Symmetry compose(Symmetry first, Symmetry second);
Symmetry inverse(Symmetry s);

BorderFrame apply_symmetry(const BorderFrame& frame, Symmetry s);
BorderPlan apply_symmetry(const BorderPlan& plan, Symmetry s);

/// New b[i] = old b[perm_b[i]], likewise for c; indices are 0-based.
/// Throws std::invalid_argument unless both are permutations of 0..n-1.
BorderPlan permute_lines(const BorderPlan& plan, std::span<const int> perm_b,
                         std::span<const int> perm_c);

}  // namespace bordered
