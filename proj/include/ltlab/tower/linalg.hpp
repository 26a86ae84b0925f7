#pragma once

#include <vector>

#include "ltlab/padic/local_ring.hpp"

namespace ltlab {

// Dense matrices over the fraction field of a LocalRing, row-major.
using Matrix = std::vector<std::vector<LocalElem>>;

// Gaussian elimination with full pivoting on the smallest valuation.
LocalElem determinant(Matrix M);

struct SolveResult {
  std::vector<LocalElem> x;
  bool consistent = false;  // leftover rows vanish at their precision
};
// Solves A x = b for an m x k matrix of rank k (m >= k).
SolveResult solve_linear(Matrix A, std::vector<LocalElem> b);

}  // namespace ltlab
