#ifndef HYPERSURF_CALCULUS_HPP
#define HYPERSURF_CALCULUS_HPP

#include <cstdint>
#include <vector>

#include "hypersurf/linalg.hpp"
#include "hypersurf/polynomial.hpp"

namespace hypersurf {

/// P = P_0 + ... + P_m with P_i homogeneous of degree i (or zero) and P_m != 0.
struct HomogeneousDecomposition {
  std::vector<Polynomial> parts;  // parts[i] has degree i
  std::uint32_t degree = 0;

  const Polynomial& leading() const { return parts.back(); }
  /// Degrees i with P_i nonzero, ascending.
  std::vector<std::uint32_t> nonzero_degrees() const;
};

/// Throws DomainError for the zero polynomial.
HomogeneousDecomposition homogeneous_parts(const Polynomial& p);

/// The highest order homogeneous factor P_m.
Polynomial leading_form(const Polynomial& p);

Polynomial derivative(const Polynomial& p, std::size_t var);
std::vector<Polynomial> gradient(const Polynomial& p);
/// Symmetric dim x dim matrix of second partials, row-major.
std::vector<std::vector<Polynomial>> hessian(const Polynomial& p);
Polynomial laplacian(const Polynomial& p);

/// p(Mx + b). matrix is dim x dim, shift has length dim.
Polynomial affine_substitute(const Polynomial& p, const RationalMatrix& matrix, const RationalVector& shift);

}  // namespace hypersurf

#endif  // HYPERSURF_CALCULUS_HPP
