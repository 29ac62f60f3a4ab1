#pragma once

#include "vpoly/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace vpoly {

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Stacks the given vectors as rows. All rows must have length `cols`.
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector operator*(const RationalVector& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RationalMatrix reduced;            // reduced row echelon form, zero rows at the bottom
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  std::size_t rank() const noexcept { return pivots.size(); }
};

RowEchelon reduce(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

enum class SolveStatus { Unique, Underdetermined, Inconsistent };

struct LinearSolution {
  SolveStatus status;
  RationalVector x;  // a solution when status != Inconsistent (free variables set to 0)
};

LinearSolution solve(const RationalMatrix& a, const RationalVector& b);

/// Minimum Euclidean norm solution of a x = b, or nullopt when inconsistent.
/// The result is linear in b for a fixed a.
std::optional<RationalVector> solve_least_norm(const RationalMatrix& a, const RationalVector& b);

}  // namespace vpoly
