#include "ltlab/tower/linalg.hpp"

namespace ltlab {

namespace {

// determinate entry of least valuation in the lower-right block
bool find_pivot(const Matrix& M, std::size_t from_row, std::size_t from_col, std::size_t ncols, std::size_t& pr,
                std::size_t& pc) {
  int best = kInfPrec;
  bool found = false;
  for (std::size_t r = from_row; r < M.size(); ++r)
    for (std::size_t c = from_col; c < ncols; ++c) {
      const LocalElem& x = M[r][c];
      if (x.is_zero()) continue;
      if (!found || x.valuation() < best) {
        best = x.valuation();
        pr = r;
        pc = c;
        found = true;
      }
    }
  return found;
}

}  // namespace

LocalElem determinant(Matrix M) {
  const std::size_t n = M.size();
  if (n == 0) fail(ErrorKind::ConfigError, "empty matrix");
  const LocalRing& R = M[0][0].ring();
  LocalElem det = LocalElem::one(R);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k, pc = k;
    if (!find_pivot(M, k, k, n, pr, pc)) {
      // every remaining entry vanishes at its precision
      int A = kInfPrec;
      for (std::size_t r = k; r < n; ++r)
        for (std::size_t c = k; c < n; ++c) A = std::min(A, M[r][c].abs_prec());
      LocalElem z = LocalElem::zero_at(R, A);
      for (std::size_t i = k + 1; i < n; ++i) z = z * LocalElem::zero_at(R, A);
      return det * z;
    }
    if (pr != k) {
      std::swap(M[pr], M[k]);
      det = -det;
    }
    if (pc != k) {
      for (auto& row : M) std::swap(row[pc], row[k]);
      det = -det;
    }
    const LocalElem inv = M[k][k].inverse();
    det *= M[k][k];
    for (std::size_t r = k + 1; r < n; ++r) {
      if (M[r][k].is_exact_zero()) continue;
      const LocalElem t = M[r][k] * inv;
      for (std::size_t c = k + 1; c < n; ++c) M[r][c] -= t * M[k][c];
    }
  }
  return det;
}

SolveResult solve_linear(Matrix A, std::vector<LocalElem> b) {
  const std::size_t m = A.size();
  if (m == 0) fail(ErrorKind::ConfigError, "empty system");
  const std::size_t k = A[0].size();
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pr = c, pc = c;
    if (!find_pivot(A, c, c, k, pr, pc)) fail(ErrorKind::IndeterminateValuation, "system is singular at this precision");
    std::swap(A[pr], A[c]);
    std::swap(b[pr], b[c]);
    if (pc != c) {
      for (auto& row : A) std::swap(row[pc], row[c]);
      std::swap(perm[pc], perm[c]);
    }
    const LocalElem inv = A[c][c].inverse();
    for (std::size_t r = c + 1; r < m; ++r) {
      if (A[r][c].is_exact_zero()) continue;
      const LocalElem t = A[r][c] * inv;
      for (std::size_t j = c + 1; j < k; ++j) A[r][j] -= t * A[c][j];
      b[r] -= t * b[c];
      A[r][c] = LocalElem::exact_zero(A[r][c].ring());
    }
  }
  SolveResult res;
  res.consistent = true;
  for (std::size_t r = k; r < m; ++r)
    if (!b[r].is_zero()) res.consistent = false;
  std::vector<LocalElem> y(k);
  for (std::size_t c = k; c-- > 0;) {
    LocalElem s = b[c];
    for (std::size_t j = c + 1; j < k; ++j) s -= A[c][j] * y[j];
    y[c] = s / A[c][c];
  }
  res.x.resize(k);
  for (std::size_t i = 0; i < k; ++i) res.x[perm[i]] = y[i];
  return res;
}

}  // namespace ltlab
