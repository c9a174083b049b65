#ifndef HYPERSURF_ASYMPTOTICS_HPP
#define HYPERSURF_ASYMPTOTICS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypersurf/curvature.hpp"
#include "hypersurf/polynomial.hpp"

namespace hypersurf {

enum class SignKind { PositiveSemidefinite, NegativeSemidefinite, Indefinite, Inconclusive };
enum class SignEvidence { ExactQuadratic, EvenMonomials, OddParity, Sampled };

const char* to_string(SignKind k);
const char* to_string(SignEvidence e);

/// Sign behaviour of the leading form P_m.
///
/// Semi-definite kinds are only ever reported with exact evidence
/// (ExactQuadratic or EvenMonomials). Sampling can prove Indefinite, never
/// the converse; a sampled search without a sign change is Inconclusive.
struct SignVerdict {
  SignKind kind = SignKind::Inconclusive;
  SignEvidence evidence = SignEvidence::Sampled;
  std::uint32_t degree = 0;
  /// Exact evidence only: P_m vanishes only at the origin.
  bool definite = false;
  std::optional<std::vector<double>> witness_pos;  // unit vector, P_m > 0
  std::optional<std::vector<double>> witness_neg;  // unit vector, P_m < 0
  std::size_t samples = 0;
  std::size_t descents = 0;
  /// Exact directions with P_m(w) = 0, when the exact path exposes them.
  std::vector<RationalVector> null_directions;
};

SignVerdict leading_form_verdict(const Polynomial& p, std::uint64_t seed = 0);

/// t0 = max(1, Σ_{i<m} ‖P_i‖₁ / eps): for t > t0 and |v| = 1,
/// |t^-m P(tv) - P_m(v)| ≤ Σ ‖P_i‖₁ t^{i-m} < eps.
double tail_bound_t0(const Polynomial& p, double eps);

/// Cap W = {v : <v, w> >= cos_theta} of the unit sphere with
/// σ P_m > σ P_m(w)/2 on W, and the radius t0 beyond which the tail is
/// below margin = |P_m(w)|/4.
struct ConeCertificate {
  std::vector<double> w;
  double cos_theta = 0.0;
  double leading_value = 0.0;  // P_m(w)
  double t0 = 0.0;
  double margin = 0.0;
  std::size_t halvings = 0;
};

struct Ball {
  std::vector<double> center;
  double radius = 0.0;
  int sign = 1;  // +1: ball inside {P > 0}; -1: inside {P < 0}
};

struct BallSearch {
  enum class Outcome { Found, BoundedRegionLikely };
  Outcome outcome = Outcome::BoundedRegionLikely;
  std::optional<Ball> ball;
  std::optional<ConeCertificate> cone;
  /// Found through a lower homogeneous part instead of the cone argument,
  /// or BoundedRegionLikely without an exact definite leading form.
  bool heuristic = false;
  std::string note;
};

/// Strict sign of P on a low-discrepancy sample of the ball (center, the
/// 2·dim axis extremes and Halton points). Returns the first failing point.
std::optional<std::vector<double>> find_ball_violation(const Polynomial& p, const Ball& ball,
                                                       std::size_t samples = 10000);

/// A ball of radius R on which P has constant strict sign. requested_sign
/// picks the side; without it the side where P_m takes positive values is
/// preferred. Throws ValidationError if a constructed ball fails validation.
BallSearch find_sign_ball(const Polynomial& p, double radius, std::uint64_t seed,
                          std::optional<int> requested_sign = std::nullopt);

struct CompactnessBound {
  double t0 = 0.0;
  double alpha_hat = 0.0;      // sampled min of |P_m| on the unit sphere
  bool sampled_minimum = true; // alpha_hat is not a certified minimum
  bool validated = false;      // sign(P) = sign(P_m) at all check points beyond t0
};

/// Radius t0 with M inside the closed t0-ball, when P_m is exactly definite.
std::optional<CompactnessBound> compactness_bound(const Polynomial& p, std::uint64_t seed = 0);

struct AuditFinding {
  enum class Status { Consistent, Violation, NotApplicable };
  std::string check;
  Status status = Status::NotApplicable;
  std::string detail;
  std::optional<std::vector<double>> witness_pos;
  std::optional<std::vector<double>> witness_neg;
};

const char* to_string(AuditFinding::Status s);

/// Checks a CMC report against the two obstructions for non-zero constant
/// mean curvature: the degree must be even and P_m must be semi-definite. Throws DomainError when the report
/// was produced from a different polynomial.
std::vector<AuditFinding> audit_obstructions(const Polynomial& p, const CurvatureReport& report,
                                         std::uint64_t seed = 0);

}  // namespace hypersurf

#endif  // HYPERSURF_ASYMPTOTICS_HPP
