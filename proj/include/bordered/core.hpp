#pragma once

// Arithmetic shared by every layer: magic constants, complements within a
// border's number pool, and the two-column diagram that pairs each small
// value i with its complement.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bordered {

// Wide enough for N^4-sized intermediate sums at N = 10^4.
using Value = std::int64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Corner pair that no magic border can carry (same parity at even order).
class InfeasibleCorners : public Error {
 public:
  using Error::Error;
};

enum class Side : std::uint8_t { left, right };

inline Side opposite(Side s) { return s == Side::left ? Side::right : Side::left; }

/// Throws std::invalid_argument unless n >= 3.
void require_inner_order(int n);

/// N(N^2+1)/2. Rejects N < 1.
Value magic_constant(Value order);

/// (n+2)^2 + 1: the sum of two opposite border cells around an n x n core.
Value complement_base(int n);

/// Largest value in the border pool of n, i.e. (n+2)^2.
inline Value pool_max(int n) { return Value(n + 2) * (n + 2); }

/// Number of rows in the two-column diagram, 2n+2.
inline int diagram_rows(int n) { return 2 * n + 2; }

bool in_pool(Value x, int n);

/// {1..2n+2} U {n^2+2n+3..(n+2)^2}, ascending.
std::vector<Value> border_pool(int n);

/// C - x. Throws std::out_of_range when x is not in the pool.
Value complement(Value x, int n);

/// x + y - C for pool values x, y.
Value d_value(Value x, Value y, int n);

/// v - C/2. Defined for any integer v; n must be odd.
Value d_corner(Value v, int n);

struct DiagramRow {
  int index = 0;      // 1-based
  Value left = 0;     // == index
  Value right = 0;    // == C - index
};

DiagramRow diagram_row(int i, int n);

/// Diagram row holding x (x itself if small, C - x otherwise).
int row_of(Value x, int n);
Side side_of(Value x, int n);
Value value_at(int row, Side side, int n);

/// Pool value with its small representative, min(x, C - x).
inline Value small_of(Value x, int n) { return static_cast<Value>(row_of(x, n)); }

std::string to_string(Side s);

}  // namespace bordered
