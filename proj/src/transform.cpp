#include "bordered/transform.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bordered/assemble.hpp"

namespace bordered {

namespace {

// Cell of the source grid that lands on (r, c) of the image.
std::pair<int, int> source_cell(Symmetry s, int r, int c, int size) {
  const int last = size - 1;
  switch (s) {
    case Symmetry::identity:
      return {r, c};
    case Symmetry::reflect_vertical:
      return {r, last - c};
    case Symmetry::reflect_horizontal:
      return {last - r, c};
    case Symmetry::rotate_180:
      return {last - r, last - c};
    case Symmetry::transpose:
      return {c, r};
    case Symmetry::anti_transpose:
      return {last - c, last - r};
    case Symmetry::rotate_90:
      return {last - c, r};
    case Symmetry::rotate_270:
      return {c, last - r};
  }
  return {r, c};
}

using Table = std::array<std::array<Symmetry, 8>, 8>;

// Derived by acting on a 3x3 grid with distinct labels.
Table build_composition_table() {
  constexpr int size = 3;
  auto image = [](Symmetry s, const std::vector<int>& grid) {
    std::vector<int> out(grid.size());
    for (int r = 0; r < size; ++r) {
      for (int c = 0; c < size; ++c) {
        const auto [sr, sc] = source_cell(s, r, c, size);
        out[static_cast<std::size_t>(r * size + c)] = grid[static_cast<std::size_t>(sr * size + sc)];
      }
    }
    return out;
  };
  std::vector<int> base(size * size);
  for (int i = 0; i < size * size; ++i) base[static_cast<std::size_t>(i)] = i;

  Table table{};
  for (Symmetry a : kAllSymmetries) {
    for (Symmetry b : kAllSymmetries) {
      const auto target = image(b, image(a, base));
      const auto it = std::find_if(kAllSymmetries.begin(), kAllSymmetries.end(),
                                   [&](Symmetry s) { return image(s, base) == target; });
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = *it;
    }
  }
  return table;
}

const Table& composition_table() {
  static const Table table = build_composition_table();
  return table;
}

}  // namespace

std::string_view to_string(Symmetry s) {
  switch (s) {
    case Symmetry::identity:
      return "identity";
    case Symmetry::reflect_vertical:
      return "reflect_vertical";
    case Symmetry::reflect_horizontal:
      return "reflect_horizontal";
    case Symmetry::rotate_180:
      return "rotate_180";
    case Symmetry::transpose:
      return "transpose";
    case Symmetry::anti_transpose:
      return "anti_transpose";
    case Symmetry::rotate_90:
      return "rotate_90";
    case Symmetry::rotate_270:
      return "rotate_270";
  }
  return "?";
}

Symmetry symmetry_from_string(std::string_view name) {
  for (Symmetry s : kAllSymmetries) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown symmetry '" + std::string(name) + "'");
}

Symmetry compose(Symmetry first, Symmetry second) {
  return composition_table()[static_cast<std::size_t>(first)][static_cast<std::size_t>(second)];
}

Symmetry inverse(Symmetry s) {
  for (Symmetry t : kAllSymmetries) {
    if (compose(s, t) == Symmetry::identity) return t;
  }
  throw std::logic_error("symmetry without inverse");
}

BorderFrame apply_symmetry(const BorderFrame& frame, Symmetry s) {
  BorderFrame out(frame.inner_order());
  const int size = frame.size();
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) {
      const auto [sr, sc] = source_cell(s, r, c, size);
      out.at(r, c) = frame.at(sr, sc);
    }
  }
  return out;
}

BorderPlan apply_symmetry(const BorderPlan& plan, Symmetry s) {
  return plan_from_frame(apply_symmetry(render_frame(plan), s));
}

namespace {

void require_permutation(std::span<const int> perm, std::size_t n, const char* what) {
  std::vector<bool> seen(n, false);
  bool ok = perm.size() == n;
  for (int i : perm) {
    if (!ok) break;
    if (i < 0 || static_cast<std::size_t>(i) >= n || seen[static_cast<std::size_t>(i)]) {
      ok = false;
    } else {
      seen[static_cast<std::size_t>(i)] = true;
    }
  }
  if (!ok) {
    throw std::invalid_argument(std::string(what) + " is not a permutation of 0.." +
                                std::to_string(n - 1));
  }
}

}  // namespace

BorderPlan permute_lines(const BorderPlan& plan, std::span<const int> perm_b,
                         std::span<const int> perm_c) {
  require_permutation(perm_b, plan.b.size(), "perm_b");
  require_permutation(perm_c, plan.c.size(), "perm_c");
  BorderPlan out = plan;
  for (std::size_t i = 0; i < perm_b.size(); ++i) {
    out.b[i] = plan.b[static_cast<std::size_t>(perm_b[i])];
  }
  for (std::size_t i = 0; i < perm_c.size(); ++i) {
    out.c[i] = plan.c[static_cast<std::size_t>(perm_c[i])];
  }
  return out;
}

}  // namespace bordered
