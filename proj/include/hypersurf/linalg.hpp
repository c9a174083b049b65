#ifndef HYPERSURF_LINALG_HPP
#define HYPERSURF_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hypersurf/rational.hpp"

namespace hypersurf {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_symmetric() const;
  Rational trace() const;
  RationalMatrix transpose() const;
  RationalVector column(std::size_t j) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalVector operator*(const RationalMatrix& a, const RationalVector& v);
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RationalMatrix reduced;            // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon row_reduce(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);

/// One solution of A x = b (free variables set to zero), or nothing.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);

/// Basis of {x : A x = 0}; vector j has a 1 in the j-th free column.
std::vector<RationalVector> kernel_basis(const RationalMatrix& a);

/// C^T A C = diag(d) for symmetric A, by symmetric Gaussian elimination
/// (congruence). The columns of C are the directions realizing each d_i.
struct CongruenceDiagonalization {
  RationalMatrix transform;
  RationalVector diagonal;
};

CongruenceDiagonalization congruence_diagonalize(const RationalMatrix& symmetric);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

Inertia inertia(const CongruenceDiagonalization& d);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace hypersurf

#endif  // HYPERSURF_LINALG_HPP
