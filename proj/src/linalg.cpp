#include "hypersurf/linalg.hpp"

#include <utility>

#include "hypersurf/error.hpp"

namespace hypersurf {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

RationalVector RationalMatrix::column(std::size_t j) const {
  RationalVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& v) {
  if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
  RationalVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
  }
  return out;
}

RationalMatrix operator*(const Rational& s, RationalMatrix a) {
  for (auto& x : a.data_) x *= s;
  return a;
}

RowEchelon row_reduce(RationalMatrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).pivots.size(); }

std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b) {
  if (b.size() != a.rows()) throw DimensionError("solve: right-hand side length mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto ech = row_reduce(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == a.cols()) return std::nullopt;
  RationalVector x(a.cols());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, a.cols());
  return x;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& a) {
  const auto ech = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(a.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

CongruenceDiagonalization congruence_diagonalize(const RationalMatrix& symmetric) {
  if (!symmetric.is_symmetric()) throw DomainError("congruence_diagonalize requires a symmetric matrix");
  const std::size_t n = symmetric.rows();
  RationalMatrix s = symmetric;
  RationalMatrix c = RationalMatrix::identity(n);

  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < n; ++k) std::swap(s(i, k), s(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(s(k, i), s(k, j));
    for (std::size_t k = 0; k < n; ++k) std::swap(c(k, i), c(k, j));
  };
  // index j <- j + l in rows, columns and in the transform.
  auto add_index = [&](std::size_t j, std::size_t l) {
    for (std::size_t k = 0; k < n; ++k) s(j, k) += s(l, k);
    for (std::size_t k = 0; k < n; ++k) s(k, j) += s(k, l);
    for (std::size_t k = 0; k < n; ++k) c(k, j) += c(k, l);
  };

  for (std::size_t i = 0; i < n; ++i) {
    std::size_t pivot = i;
    while (pivot < n && s(pivot, pivot) == 0) ++pivot;
    if (pivot == n) {
      // Zero diagonal: a nonzero off-diagonal entry s_jl gives s_jj' = 2 s_jl.
      bool found = false;
      for (std::size_t j = i; j < n && !found; ++j) {
        for (std::size_t l = j + 1; l < n && !found; ++l) {
          if (s(j, l) != 0) {
            add_index(j, l);
            pivot = j;
            found = true;
          }
        }
      }
      if (!found) break;  // remaining block is zero
    }
    swap_index(i, pivot);
    const Rational d = s(i, i);
    for (std::size_t r = i + 1; r < n; ++r) {
      if (s(r, i) == 0) continue;
      const Rational f = s(r, i) / d;
      for (std::size_t k = 0; k < n; ++k) s(r, k) -= f * s(i, k);
      for (std::size_t k = 0; k < n; ++k) s(k, r) -= f * s(k, i);
      for (std::size_t k = 0; k < n; ++k) c(k, r) -= f * c(k, i);
    }
  }
  CongruenceDiagonalization out{std::move(c), RationalVector(n)};
  for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = s(i, i);
  return out;
}

Inertia inertia(const CongruenceDiagonalization& d) {
  Inertia in;
  for (const auto& x : d.diagonal) {
    const int sg = sgn(x);
    if (sg > 0) {
      ++in.positive;
    } else if (sg < 0) {
      ++in.negative;
    } else {
      ++in.zero;
    }
  }
  return in;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace hypersurf
