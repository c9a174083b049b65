#ifndef HYPERSURF_CURVATURE_HPP
#define HYPERSURF_CURVATURE_HPP

// Mean curvature of M = P^{-1}(0) in R^{n+1}, n = dim - 1.
//
// M is oriented by N = ∇P/|∇P| and the shape operator is A = -dN, so that
// H = trace(A)/n = -div(N)/n. Expanding div(∇P/|∇P|) gives the identity
//
//     H = G / (n |∇P|^3),   G = -( |∇P|^2 ΔP - ∇P^T Hess(P) ∇P ),
//
// which holds at every regular point of M (indeed of every level set of P).
// With this sign the sphere written as r^2 - |x|^2, whose normal points into
// the ball {P > 0}, has H = +1/r. Round cylinders S^k_r x R^{n-k} written the
// same way have H = k/(n r).
//
// Squaring clears the radical: F_c = G^2 - n^2 c^2 (|∇P|^2)^3 vanishes on M
// exactly where H^2 = c^2. An exact identity F_c = G_2 · P is therefore a
// certificate that H^2 ≡ c^2 on M.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hypersurf/polynomial.hpp"

namespace hypersurf {

inline constexpr double kRegularityFloor = 1e-6;
inline constexpr double kResidualTolerance = 1e-10;

/// P with its gradient and Hessian compiled for floating evaluation.
class CurvatureField {
 public:
  explicit CurvatureField(const Polynomial& p);

  std::size_t dim() const noexcept { return dim_; }
  double value(std::span<const double> x) const { return value_(x); }
  double value_scale(std::span<const double> x) const { return value_.term_magnitude(x); }
  std::vector<double> gradient(std::span<const double> x) const;
  /// Row-major dim x dim.
  std::vector<double> hessian(std::span<const double> x) const;
  /// G(x)/(n|∇P(x)|^3) from the compiled derivatives; throws DomainError
  /// when |∇P(x)| < kRegularityFloor.
  double mean_curvature(std::span<const double> x) const;

 private:
  std::size_t dim_;
  NumericPolynomial value_;
  std::vector<NumericPolynomial> gradient_;
  std::vector<NumericPolynomial> hessian_;  // upper triangle, row-major
};

/// G = -(|∇P|^2 ΔP - ∇P^T Hess(P) ∇P). Throws DomainError for constant p.
Polynomial cmc_numerator(const Polynomial& p);

/// F = G^2 - n^2 c^2 (|∇P|^2)^3. Throws DomainError for constant p.
Polynomial cmc_defect(const Polynomial& p, const Rational& c);

double mean_curvature_at(const Polynomial& p, std::span<const double> x);

/// One-step Newton projection x <- x - P ∇P / |∇P|^2 iterated until
/// |P(x)| <= kResidualTolerance * max(1, Σ|c_α x^α|). nullopt on failure.
std::optional<std::vector<double>> project_to_variety(const CurvatureField& field, std::vector<double> x,
                                                      double divergence_radius);

struct VarietySample {
  std::vector<std::vector<double>> points;
  std::size_t requested = 0;
  std::size_t starts = 0;
  std::size_t converged = 0;
  std::size_t rejected_low_gradient = 0;
  bool variety_not_found = false;
};

/// Newton projections of seeded uniform starts in [-half_width, half_width]^dim.
/// Returns at most count points; fewer are reported through the counters and
/// variety_not_found is set when no start converges to a regular point.
VarietySample sample_variety(const Polynomial& p, std::size_t count, double half_width, std::uint64_t seed);

struct NearestPointResult {
  std::vector<double> point;
  double distance = 0.0;
  /// |cos| of the angle between p - x0 and ∇P(p); 1 when p = x0.
  double gradient_alignment = 0.0;
  bool converged = false;
  std::size_t starts = 0;
};

/// Local minimizer of |x - x0|^2 on M by projected gradient descent with
/// Newton re-projection from 16 seeded starts; the best one is returned.
/// converged is false when no start reaches first-order optimality.
NearestPointResult nearest_point(const Polynomial& p, std::span<const double> x0, std::uint64_t seed);

enum class CmcVerdict { CmcCertified, CmcNumeric, NotCmc, Minimal, Inconclusive };

const char* to_string(CmcVerdict v);

struct CurvatureSample {
  std::vector<double> point;
  double mean_curvature = 0.0;
  double residual = 0.0;
  double gradient_norm = 0.0;
};

struct CmcOptions {
  std::size_t sample_count = 200;
  double tolerance = 1e-6;
  std::uint64_t seed = 0;
  double half_width = 5.0;
};

struct CurvatureReport {
  Polynomial source{1};
  CmcVerdict verdict = CmcVerdict::Inconclusive;
  double c_estimate = 0.0;
  std::optional<Rational> c_exact;        // snapped constant used for the certificate attempt
  std::optional<Polynomial> certificate;  // G_2 with cmc_defect(P, c_exact) = G_2 · P
  std::optional<std::size_t> certificate_variable;
  std::vector<CurvatureSample> samples;
  double max_deviation = 0.0;       // max |H - c_estimate|
  double spread = 0.0;              // max H - min H
  double tolerance = 0.0;
  VarietySample sampling;           // counters only; points live in samples
};

/// Best rational approximation found along the continued fraction of x:
/// the first convergent with denominator <= max_den within window of x.
std::optional<Rational> snap_to_rational(double x, double window, std::uint64_t max_den = 1000000);

/// Cofactor G_2 with cmc_defect(p, c) = G_2 · p, trying each variable in which
/// p has a constant leading coefficient. Returns (G_2, variable index).
std::optional<std::pair<Polynomial, std::size_t>> certify_cmc(const Polynomial& p, const Rational& c);

/// CMC test: sample M, take the median H as c, then either certify exactly,
/// accept numerically, or reject when H visibly varies.
CurvatureReport is_cmc(const Polynomial& p, const CmcOptions& options = {});

}  // namespace hypersurf

#endif  // HYPERSURF_CURVATURE_HPP
