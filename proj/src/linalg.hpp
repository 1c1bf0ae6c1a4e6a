#pragma once

#include <vector>

#include "exact_algebra.hpp"

namespace webclass {

using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;

struct Echelon {
  RMat rref;                // reduced rows, zero rows dropped
  std::vector<size_t> pivots;  // pivot column of each row
};

/** Reduced row echelon form; elimination runs on integer rows with content removal. */
Echelon row_reduce(const RMat& m, size_t ncols);
size_t rank(const RMat& m, size_t ncols);
/** Basis of the right null space, one vector per free column, in column order. */
std::vector<RVec> nullspace(const RMat& m, size_t ncols);
inline std::vector<RVec> nullspace(const RMat& m) { return nullspace(m, m.empty() ? 0 : m.front().size()); }

/** Expresses target as a combination of the given vectors, if possible. */
std::optional<RVec> solve_combination(const std::vector<RVec>& basis, const RVec& target);

/** Numeric rank with a singular-value threshold relative to the largest singular value. */
struct NumericRank {
  size_t rank = 0;
  size_t cols = 0;
  double smallest_ratio = 0.0;
};
NumericRank numeric_rank(const std::vector<std::vector<double>>& rows, size_t ncols, double rel_tol);

}  // namespace webclass
