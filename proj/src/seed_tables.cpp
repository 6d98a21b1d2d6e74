#include <cctype>
#include <sstream>
#include <string>

#include "bordered/corners.hpp"

namespace bordered {

namespace detail {
extern const std::string_view kSeedTableText;
}

struct SeedExpr::Node {
  enum class Kind { number, var_m, var_i, add, sub, mul, pow, neg } kind = Kind::number;
  Value number = 0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = SeedExpr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr, Value number = 0) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  node->number = number;
  return node;
}

// expr   := term (('+' | '-') term)*
// term   := power (('*')? power)*      juxtaposition multiplies: 2m, 2(m+1)
// power  := atom ('^' atom)?
// atom   := number | 'm' | 'i' | '(' expr ')' | '-' atom
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr node = expr();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("bad expression '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                ": " + what);
  }

  bool peek(char ch) const { return pos_ < text_.size() && text_[pos_] == ch; }

  bool starts_atom() const {
    if (pos_ >= text_.size()) return false;
    const char ch = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == 'm' || ch == 'i' || ch == '(';
  }

  NodePtr expr() {
    NodePtr node = term();
    while (peek('+') || peek('-')) {
      const bool plus = text_[pos_++] == '+';
      node = make(plus ? Node::Kind::add : Node::Kind::sub, node, term());
    }
    return node;
  }

  NodePtr term() {
    NodePtr node = power();
    while (peek('*') || starts_atom()) {
      if (peek('*')) ++pos_;
      node = make(Node::Kind::mul, node, power());
    }
    return node;
  }

  NodePtr power() {
    NodePtr node = atom();
    if (peek('^')) {
      ++pos_;
      node = make(Node::Kind::pow, node, atom());
    }
    return node;
  }

  NodePtr atom() {
    if (pos_ >= text_.size()) fail("unexpected end");
    const char ch = text_[pos_];
    if (ch == '-') {
      ++pos_;
      return make(Node::Kind::neg, atom());
    }
    if (ch == 'm' || ch == 'i') {
      ++pos_;
      return make(ch == 'm' ? Node::Kind::var_m : Node::Kind::var_i);
    }
    if (ch == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Value number = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        number = number * 10 + (text_[pos_++] - '0');
      }
      return make(Node::Kind::number, nullptr, nullptr, number);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Value eval_node(const Node& node, Value m, Value i) {
  switch (node.kind) {
    case Node::Kind::number:
      return node.number;
    case Node::Kind::var_m:
      return m;
    case Node::Kind::var_i:
      return i;
    case Node::Kind::add:
      return eval_node(*node.lhs, m, i) + eval_node(*node.rhs, m, i);
    case Node::Kind::sub:
      return eval_node(*node.lhs, m, i) - eval_node(*node.rhs, m, i);
    case Node::Kind::mul:
      return eval_node(*node.lhs, m, i) * eval_node(*node.rhs, m, i);
    case Node::Kind::neg:
      return -eval_node(*node.lhs, m, i);
    case Node::Kind::pow: {
      const Value base = eval_node(*node.lhs, m, i);
      const Value exp = eval_node(*node.rhs, m, i);
      if (exp < 0) throw Error("negative exponent in seed expression");
      Value out = 1;
      for (Value k = 0; k < exp; ++k) out *= base;
      return out;
    }
  }
  return 0;
}

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> words;
  for (std::string w; is >> w;) words.push_back(w);
  return words;
}

// "<v> <w> | <b...> | <c...>" after the leading keyword.
struct EntryFields {
  std::string v, w;
  std::vector<std::string> b, c;
};

EntryFields split_entry(const std::vector<std::string>& words, int line_no) {
  EntryFields f;
  int section = 0;
  std::vector<std::string> head;
  for (std::size_t k = 1; k < words.size(); ++k) {
    if (words[k] == "|") {
      ++section;
      continue;
    }
    (section == 0 ? head : section == 1 ? f.b : f.c).push_back(words[k]);
  }
  if (section != 2 || head.size() != 2) {
    throw Error("seed table line " + std::to_string(line_no) +
                ": expected '<v> <w> | <b...> | <c...>'");
  }
  f.v = head[0];
  f.w = head[1];
  return f;
}

Value parse_int(const std::string& word, int line_no) {
  std::size_t used = 0;
  Value x = 0;
  try {
    x = std::stoll(word, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != word.size()) {
    throw Error("seed table line " + std::to_string(line_no) + ": '" + word + "' is not an integer");
  }
  return x;
}

}  // namespace

SeedExpr SeedExpr::parse(std::string_view text) {
  SeedExpr e;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') e.text_.push_back(ch);
  }
  e.root_ = ExprParser(e.text_).parse();
  return e;
}

Value SeedExpr::eval(Value m, Value i) const {
  if (!root_) throw Error("empty seed expression");
  return eval_node(*root_, m, i);
}

SeedTables parse_seed_tables(std::string_view text) {
  SeedTables tables;
  std::istringstream is{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(is, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto words = split_words(line);
    if (words.empty()) continue;
    const std::string& kind = words[0];
    try {
      if (kind == "format") {
        if (words.size() != 2) throw Error("format takes one value");
        tables.format = static_cast<int>(parse_int(words[1], line_no));
        if (tables.format != 1) throw Error("unsupported format " + words[1]);
      } else if (kind == "order4") {
        const auto f = split_entry(words, line_no);
        Order4Seed seed{parse_int(f.v, line_no), parse_int(f.w, line_no), {}, {}};
        for (const auto& x : f.b) seed.b.push_back(parse_int(x, line_no));
        for (const auto& x : f.c) seed.c.push_back(parse_int(x, line_no));
        if (seed.b.size() != 4 || seed.c.size() != 4) throw Error("order4 needs 4 + 4 values");
        tables.order4.push_back(std::move(seed));
      } else if (kind == "block_b" || kind == "block_c") {
        auto& block = kind == "block_b" ? tables.block_b : tables.block_c;
        if (words.size() != 5) throw Error(kind + " needs 4 expressions");
        for (std::size_t k = 1; k < words.size(); ++k) block.push_back(SeedExpr::parse(words[k]));
      } else if (kind == "orderm") {
        const auto f = split_entry(words, line_no);
        ParamSeed seed{SeedExpr::parse(f.v), SeedExpr::parse(f.w), {}, {}};
        for (const auto& x : f.b) seed.b.push_back(SeedExpr::parse(x));
        for (const auto& x : f.c) seed.c.push_back(SeedExpr::parse(x));
        if (seed.b.size() != 8 || seed.c.size() != 8) throw Error("orderm needs 8 + 8 expressions");
        tables.order_m.push_back(std::move(seed));
      } else {
        throw Error("unknown record '" + kind + "'");
      }
    } catch (const Error& e) {
      const std::string what = e.what();
      if (what.rfind("seed table line", 0) == 0) throw;
      throw Error("seed table line " + std::to_string(line_no) + ": " + what);
    }
  }
  if (tables.format == 0) throw Error("seed table has no 'format' record");
  return tables;
}

const SeedTables& builtin_seed_tables() {
  static const SeedTables tables = parse_seed_tables(detail::kSeedTableText);
  return tables;
}

BorderPlan instantiate(const ParamSeed& seed, const SeedTables& tables, int m) {
  BorderPlan plan;
  plan.n = m;
  plan.v = seed.v.eval(m);
  plan.w = seed.w.eval(m);
  for (const auto& e : seed.b) plan.b.push_back(e.eval(m));
  for (const auto& e : seed.c) plan.c.push_back(e.eval(m));
  for (Value i = 1; i <= (m - 8) / 4; ++i) {
    for (const auto& e : tables.block_b) plan.b.push_back(e.eval(m, i));
    for (const auto& e : tables.block_c) plan.c.push_back(e.eval(m, i));
  }
  return plan;
}

}  // namespace bordered
