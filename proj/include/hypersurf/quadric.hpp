#ifndef HYPERSURF_QUADRIC_HPP
#define HYPERSURF_QUADRIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "hypersurf/linalg.hpp"
#include "hypersurf/polynomial.hpp"

namespace hypersurf {

/// p = x^T A x + b^T x + c0 with A symmetric.
struct QuadricData {
  RationalMatrix a;
  RationalVector b;
  Rational c0;
};

/// Throws DomainError when degree(p) > 2.
QuadricData quadric_data(const Polynomial& p);

/// Exact classification of a degree <= 2 hypersurface.
///
/// Round quadrics are recognised without eigenvectors: A = λΠ with Π an
/// orthogonal projector iff A² = λA for λ = trace(A)/rank(A). Then
/// p = λ((x - h)^T Π (x - h) - r²) with h = Πh the centre closest to the
/// origin, and the locus is a sphere (rank = dim) or S^k_r × R^{dim-1-k}
/// with k = rank - 1.
struct QuadricClass {
  enum class Kind { Sphere, RoundCylinder, Hyperplane, EmptyVariety, Other };
  Kind kind = Kind::Other;
  std::size_t k = 0;           // sphere dimension of the round factor
  RationalMatrix projector;    // Sphere: identity; RoundCylinder: Π
  RationalVector center;
  Rational radius_sq = 0;
  Rational scale = 0;          // λ
  std::string description;
  /// |H| = sqrt(curvature_num_sq / curvature_den_sq) = k / (n r).
  std::optional<Rational> curvature_num_sq;
  std::optional<Rational> curvature_den_sq;

  double predicted_mean_curvature_abs() const;
};

const char* to_string(QuadricClass::Kind k);

QuadricClass classify_quadric(const Polynomial& p);

/// λ((x - center)^T Π (x - center) - radius_sq) re-expanded from a class.
Polynomial reconstruct(const QuadricClass& cls, std::size_t dim);

struct RegularityResult {
  enum class Status { Regular, Singular, EmptyVariety };
  Status status = Status::Regular;
  std::optional<RationalVector> witness;  // Singular: P = 0 and ∇P = 0 here
};

const char* to_string(RegularityResult::Status s);

/// Exact: the critical set is the affine solution space of 2Ax + b = 0, on
/// which P is constant.
RegularityResult quadric_regularity(const Polynomial& p);

/// True when the real zero set of a degree <= 2 polynomial is empty.
bool quadric_variety_empty(const Polynomial& p);

struct LinealitySplit {
  std::vector<RationalVector> basis;  // spans {w : Aw = 0, b·w = 0}
  std::vector<std::size_t> kept;      // original coordinates of the reduced polynomial
  Polynomial reduced{1};
};

/// p(x + t w) = p(x) for every basis vector w; reduced is p restricted to the
/// coordinate subspace of the pivot (kept) coordinates, which is a rational
/// complement of the lineality space.
LinealitySplit lineality_split(const Polynomial& p);

struct QuadricConsistency {
  double predicted = 0.0;
  double max_relative_deviation = 0.0;
  std::size_t samples = 0;
};

/// |H| at 50 sampled points against the predicted k/(n r).
/// Throws DomainError for classes other than Sphere/RoundCylinder and
/// ValidationError when sampling finds no points.
QuadricConsistency predicted_vs_numeric(const Polynomial& p, const QuadricClass& cls, std::uint64_t seed = 0);

}  // namespace hypersurf

#endif  // HYPERSURF_QUADRIC_HPP
