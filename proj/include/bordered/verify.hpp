#pragma once

#include <string>
#include <vector>

#include "bordered/core.hpp"
#include "bordered/pairing.hpp"
#include "bordered/plan.hpp"

namespace bordered {

struct Violation {
  std::string condition;  // e.g. "row_sum", "complement_clash"
  std::string location;   // e.g. "top row", "b[3]", "layer 6 column 2"
  Value expected = 0;
  Value actual = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every violated condition, not just the first.
struct CheckReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  void add(std::string condition, std::string location, Value expected, Value actual);
  bool has(const std::string& condition) const;
  std::string to_text() const;
};

/// Pool membership, 2n+2 distinct complement-free values, and the top-row and
/// left-column sums. Accepts any candidate; never throws.
CheckReport verify_border(const BorderPlan& plan);

/// Checks the d-value balance of a matching against the plan. Even n:
/// sum over beta is 0 and over gamma is -d(v, complement(w)). Odd n: both
/// sums equal -d_corner(v). Throws std::invalid_argument when the pairs do not
/// cover exactly the members each line needs.
CheckReport verify_balance(const BorderPlan& plan, const PairingScheme& pairing);

/// Frame-level check: plan conditions plus the opposite-cell complement rule
/// and all four line sums, with an empty interior.
CheckReport verify_frame(const BorderFrame& frame);

/// Entries are 1..N^2 and every row, column and main diagonal sums to S_N.
CheckReport verify_square(const MagicSquare& square);

/// verify_square plus, for every concentric subsquare of order m down to 3
/// (odd N) or 4 (even N), its lines sum to m(N^2+1)/2 and each peeled frame
/// has complementary opposite cells w.r.t. N^2+1.
CheckReport verify_bordered(const MagicSquare& square);

}  // namespace bordered
