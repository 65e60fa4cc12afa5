#pragma once

#include <variant>
#include <vector>

#include "snc/rational.hpp"

namespace snc {

using RationalVector = std::vector<Rational>;
/// Dense row-major matrix; every row has the same length.
using RationalMatrix = std::vector<RationalVector>;

struct Feasible {
  RationalVector x;  ///< x >= 0 with A x = b.
};

struct Infeasible {
  RationalVector p;  ///< p^T A >= 0 and p^T b < 0.
};

using FeasibilityResult = std::variant<Feasible, Infeasible>;

/// Decides whether {x >= 0 : A x = b} is nonempty, exactly.
///
/// Phase-1 simplex on a dense tableau with Bland's rule. When the auxiliary
/// optimum is positive the Farkas vector is read off the final reduced costs
/// of the artificial columns. Both outcomes are re-verified before returning;
/// a failed check throws InternalError. Throws std::invalid_argument on a
/// dimension mismatch.
FeasibilityResult lp_feasible(const RationalMatrix& a, const RationalVector& b);

bool is_primal_solution(const RationalMatrix& a, const RationalVector& b, const RationalVector& x);
bool is_farkas_certificate(const RationalMatrix& a, const RationalVector& b, const RationalVector& p);

}  // namespace snc
