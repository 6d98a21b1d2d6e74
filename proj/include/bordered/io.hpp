#pragma once

// Text documents for squares, frames and plans: aligned grid text, CSV and
// JSON. Empty cells (frame interiors) are written as "." and read back as 0.

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "bordered/plan.hpp"

namespace bordered {

class ParseError : public Error {
 public:
  using Error::Error;
};

enum class GridFormat { grid, csv, json };

std::string_view to_string(GridFormat format);
/// "grid", "csv" or "json"; throws std::invalid_argument otherwise.
GridFormat grid_format_from_string(std::string_view name);

struct GridDocument {
  int order = 0;
  std::vector<Value> cells;  // row-major, BorderFrame::kEmpty for blanks

  friend bool operator==(const GridDocument&, const GridDocument&) = default;
};

GridDocument to_document(const MagicSquare& square);
GridDocument to_document(const BorderFrame& frame);
MagicSquare to_square(const GridDocument& doc);

/// True when every interior cell is empty and the order is at least 3.
bool is_frame_shaped(const GridDocument& doc);
/// Requires is_frame_shaped.
BorderFrame to_frame(const GridDocument& doc);

std::string serialize(const GridDocument& doc, GridFormat format);
/// Without a format the text is sniffed: '{' means JSON, a comma means CSV.
GridDocument parse_grid(std::string_view text, std::optional<GridFormat> format = std::nullopt);

/// {"n":..,"v":..,"w":..,"b":[..],"c":[..]} on one line.
std::string serialize(const BorderPlan& plan);
BorderPlan parse_plan(std::string_view text);

using Document = std::variant<GridDocument, BorderPlan>;
/// A JSON object with "v" is a plan; anything else is a grid.
Document parse_document(std::string_view text);

}  // namespace bordered
