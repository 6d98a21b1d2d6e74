#pragma once

#include <vector>

#include "bordered/plan.hpp"

namespace bordered {

/// Lo Shu for 3, Duerer's square for 4. Throws std::invalid_argument otherwise.
MagicSquare base_square(int order);

/// top [v, b..., w], bottom [w-bar, b-bar..., v-bar], left c, right c-bar.
/// Throws std::invalid_argument for a plan failing verify_border.
BorderFrame render_frame(const BorderPlan& plan);

/// A base square wrapped by borders of inner orders base, base+2, ...
struct LayerStack {
  MagicSquare base;
  std::vector<BorderPlan> layers;
};

LayerStack layer_stack(int order);

/// Each wrap shifts the current square by 2n+2 and surrounds it with the
/// rendered border of inner order n.
MagicSquare assemble(const LayerStack& stack);

/// Bordered magic square of any order >= 3; orders 1 and 2 are rejected.
MagicSquare build_square(int order);

}  // namespace bordered
