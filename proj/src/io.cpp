#include "bordered/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bordered {

namespace {

using json = nlohmann::ordered_json;

std::string cell_text(Value x) { return x == BorderFrame::kEmpty ? "." : std::to_string(x); }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Value parse_cell(std::string_view token, std::size_t line, std::size_t field) {
  token = trim(token);
  if (token.empty() || token == ".") return BorderFrame::kEmpty;
  Value out = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, out);
  if (ec != std::errc{} || ptr != end || out < 1) {
    throw ParseError("line " + std::to_string(line) + ", field " + std::to_string(field) +
                     ": expected a positive integer or '.', got '" + std::string(token) + "'");
  }
  return out;
}

GridDocument finish_rows(std::vector<std::vector<Value>> rows) {
  if (rows.empty()) throw ParseError("empty grid");
  const auto order = rows.size();
  GridDocument doc;
  doc.order = static_cast<int>(order);
  for (std::size_t r = 0; r < order; ++r) {
    if (rows[r].size() != order) {
      throw ParseError("row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                       " cells, expected " + std::to_string(order));
    }
    doc.cells.insert(doc.cells.end(), rows[r].begin(), rows[r].end());
  }
  return doc;
}

GridDocument parse_text_rows(std::string_view text, bool csv) {
  std::vector<std::vector<Value>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::vector<Value> row;
    if (csv) {
      std::size_t start = 0;
      for (;;) {
        const auto comma = line.find(',', start);
        row.push_back(parse_cell(line.substr(start, comma - start), line_no, row.size() + 1));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    } else {
      std::istringstream in{std::string(line)};
      std::string token;
      while (in >> token) row.push_back(parse_cell(token, line_no, row.size() + 1));
    }
    rows.push_back(std::move(row));
  }
  return finish_rows(std::move(rows));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

GridDocument grid_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("cells")) {
    throw ParseError("grid JSON needs keys \"order\" and \"cells\"");
  }
  if (!j["order"].is_number_integer() || j["order"].get<int>() < 1) {
    throw ParseError("\"order\" must be a positive integer");
  }
  const int order = j["order"].get<int>();
  const json& cells = j["cells"];
  if (!cells.is_array()) throw ParseError("\"cells\" must be an array");
  GridDocument doc;
  doc.order = order;
  // Accept a flat row-major list or a list of rows.
  std::vector<const json*> flat;
  for (const auto& item : cells) {
    if (item.is_array()) {
      for (const auto& x : item) flat.push_back(&x);
    } else {
      flat.push_back(&item);
    }
  }
  if (flat.size() != static_cast<std::size_t>(order) * order) {
    throw ParseError("\"cells\" holds " + std::to_string(flat.size()) + " values, expected " +
                     std::to_string(order * order));
  }
  for (std::size_t k = 0; k < flat.size(); ++k) {
    const json& x = *flat[k];
    if (x.is_null()) {
      doc.cells.push_back(BorderFrame::kEmpty);
    } else if (x.is_number_integer() && x.get<Value>() >= 1) {
      doc.cells.push_back(x.get<Value>());
    } else {
      throw ParseError("cell " + std::to_string(k) + " must be a positive integer or null");
    }
  }
  return doc;
}

std::vector<Value> int_list(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ParseError(std::string("plan JSON needs an array \"") + key + "\"");
  }
  std::vector<Value> out;
  for (const auto& x : j[key]) {
    if (!x.is_number_integer()) throw ParseError(std::string("\"") + key + "\" must hold integers");
    out.push_back(x.get<Value>());
  }
  return out;
}

BorderPlan plan_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("plan JSON must be an object");
  for (const char* key : {"n", "v", "w"}) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
      throw ParseError(std::string("plan JSON needs an integer \"") + key + "\"");
    }
  }
  BorderPlan plan;
  plan.n = j["n"].get<int>();
  plan.v = j["v"].get<Value>();
  plan.w = j["w"].get<Value>();
  plan.b = int_list(j, "b");
  plan.c = int_list(j, "c");
  return plan;
}

}  // namespace

std::string_view to_string(GridFormat format) {
  switch (format) {
    case GridFormat::grid:
      return "grid";
    case GridFormat::csv:
      return "csv";
    case GridFormat::json:
      return "json";
  }
  return "?";
}

GridFormat grid_format_from_string(std::string_view name) {
  if (name == "grid") return GridFormat::grid;
  if (name == "csv") return GridFormat::csv;
  if (name == "json") return GridFormat::json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

GridDocument to_document(const MagicSquare& square) { return {square.order(), square.cells()}; }

GridDocument to_document(const BorderFrame& frame) { return {frame.size(), frame.cells()}; }

MagicSquare to_square(const GridDocument& doc) { return MagicSquare(doc.order, doc.cells); }

bool is_frame_shaped(const GridDocument& doc) {
  if (doc.order < 3) return false;
  for (int r = 1; r + 1 < doc.order; ++r) {
    for (int c = 1; c + 1 < doc.order; ++c) {
      if (doc.cells[static_cast<std::size_t>(r * doc.order + c)] != BorderFrame::kEmpty) return false;
    }
  }
  return true;
}

BorderFrame to_frame(const GridDocument& doc) {
  if (!is_frame_shaped(doc)) throw std::invalid_argument("grid is not an empty-centred frame");
  BorderFrame frame(doc.order - 2);
  for (int r = 0; r < doc.order; ++r) {
    for (int c = 0; c < doc.order; ++c) frame.at(r, c) = doc.cells[static_cast<std::size_t>(r * doc.order + c)];
  }
  return frame;
}

std::string serialize(const GridDocument& doc, GridFormat format) {
  const auto n = static_cast<std::size_t>(doc.order);
  std::ostringstream out;
  switch (format) {
    case GridFormat::grid: {
      std::size_t width = 1;
      for (Value x : doc.cells) width = std::max(width, cell_text(x).size());
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          const auto text = cell_text(doc.cells[r * n + c]);
          if (c > 0) out << ' ';
          out << std::string(width - text.size(), ' ') << text;
        }
        out << '\n';
      }
      break;
    }
    case GridFormat::csv:
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          if (c > 0) out << ',';
          out << cell_text(doc.cells[r * n + c]);
        }
        out << '\n';
      }
      break;
    case GridFormat::json: {
      json rows = json::array();
      for (std::size_t r = 0; r < n; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < n; ++c) {
          const Value x = doc.cells[r * n + c];
          row.push_back(x == BorderFrame::kEmpty ? json(nullptr) : json(x));
        }
        rows.push_back(std::move(row));
      }
      out << json{{"order", doc.order}, {"cells", rows}}.dump() << '\n';
      break;
    }
  }
  return out.str();
}

GridDocument parse_grid(std::string_view text, std::optional<GridFormat> format) {
  if (!format) {
    const auto body = trim(text);
    if (!body.empty() && body.front() == '{') {
      format = GridFormat::json;
    } else {
      format = text.find(',') != std::string_view::npos ? GridFormat::csv : GridFormat::grid;
    }
  }
  switch (*format) {
    case GridFormat::json:
      return grid_from_json(parse_json(text));
    case GridFormat::csv:
      return parse_text_rows(text, true);
    case GridFormat::grid:
      return parse_text_rows(text, false);
  }
  throw ParseError("unknown format");
}

std::string serialize(const BorderPlan& plan) {
  json j;
  j["n"] = plan.n;
  j["v"] = plan.v;
  j["w"] = plan.w;
  j["b"] = plan.b;
  j["c"] = plan.c;
  return j.dump();
}

BorderPlan parse_plan(std::string_view text) { return plan_from_json(parse_json(text)); }

Document parse_document(std::string_view text) {
  const auto body = trim(text);
  if (!body.empty() && body.front() == '{') {
    const json j = parse_json(body);
    if (j.is_object() && j.contains("v")) return plan_from_json(j);
    return grid_from_json(j);
  }
  return parse_grid(text);
}

}  // namespace bordered
