#include "vpoly/linalg.hpp"

#include "vpoly/error.hpp"

#include <utility>

namespace vpoly {

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "matrix row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  RationalVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

RationalVector RationalMatrix::operator*(const RationalVector& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  RationalVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!is_zero((*this)(r, c))) s += (*this)(r, c) * x[c];
    }
    y[r] = s;
  }
  return y;
}

RowEchelon reduce(RationalMatrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(lead_row, k));
    }
    Rational inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || is_zero(m(r, c))) continue;
      Rational f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (!is_zero(m(lead_row, k))) m(r, k) -= f * m(lead_row, k);
      }
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  return reduce(m).rank();
}

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  RowEchelon e = reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve(const RationalMatrix& a, const RationalVector& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side size mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  RowEchelon e = reduce(std::move(aug));
  LinearSolution sol{SolveStatus::Unique, RationalVector(a.cols())};
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) {
    sol.status = SolveStatus::Inconsistent;
    return sol;
  }
  for (std::size_t r = 0; r < e.pivots.size(); ++r) sol.x[e.pivots[r]] = e.reduced(r, a.cols());
  if (e.rank() < a.cols()) sol.status = SolveStatus::Underdetermined;
  return sol;
}

std::optional<RationalVector> solve_least_norm(const RationalMatrix& a, const RationalVector& b) {
  // Independent rows R (chosen from a alone), then x = R^T (R R^T)^{-1} b_R.
  RationalMatrix at(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) at(c, r) = a(r, c);
  std::vector<std::size_t> rows = reduce(at).pivots;  // pivot columns of A^T = independent rows of A

  if (solve(a, b).status == SolveStatus::Inconsistent) return std::nullopt;

  const std::size_t k = rows.size();
  RationalVector x(a.cols());
  if (k == 0) return x;
  RationalMatrix gram(k, k);
  RationalVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = b[rows[i]];
    for (std::size_t j = 0; j < k; ++j) {
      Rational s = 0;
      for (std::size_t c = 0; c < a.cols(); ++c) s += a(rows[i], c) * a(rows[j], c);
      gram(i, j) = s;
    }
  }
  LinearSolution w = solve(gram, rhs);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < a.cols(); ++c) x[c] += a(rows[i], c) * w.x[i];
  }
  return x;
}

}  // namespace vpoly
