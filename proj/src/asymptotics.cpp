#include "hypersurf/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hypersurf/calculus.hpp"
#include "hypersurf/error.hpp"
#include "hypersurf/linalg.hpp"
#include "hypersurf/random.hpp"

namespace hypersurf {

namespace {

constexpr std::size_t kSignSamples = 10000;
constexpr std::size_t kSignDescents = 100;
constexpr std::size_t kDescentSteps = 200;
constexpr double kWitnessMargin = 1e-12;

/// P_m with its gradient, for search on the unit sphere.
class FormOnSphere {
 public:
  explicit FormOnSphere(const Polynomial& form) : value_(form) {
    for (const auto& g : gradient(form)) gradient_.emplace_back(g);
  }

  double operator()(const std::vector<double>& v) const { return value_(v); }

  /// +1/-1 when the value clears the relative witness margin, 0 otherwise.
  int strict_sign(const std::vector<double>& v) const {
    const double val = value_(v);
    if (std::abs(val) <= kWitnessMargin * value_.term_magnitude(v)) return 0;
    return val > 0 ? 1 : -1;
  }

  /// Projected gradient ascent of sigma * P_m on the sphere with backtracking.
  std::vector<double> ascend(std::vector<double> v, int sigma, std::size_t steps,
                             bool stop_on_positive = false) const {
    double f = sigma * value_(v);
    double eta = 1.0;
    for (std::size_t it = 0; it < steps; ++it) {
      if (stop_on_positive && strict_sign(v) == sigma) break;
      std::vector<double> g(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) g[i] = sigma * gradient_[i](v);
      const double radial = dot(g, v);
      for (std::size_t i = 0; i < v.size(); ++i) g[i] -= radial * v[i];
      const double gn = norm(g);
      if (gn < 1e-14) break;
      bool improved = false;
      while (eta > 1e-12) {
        std::vector<double> trial(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) trial[i] = v[i] + eta * g[i] / gn;
        const double tn = norm(trial);
        for (auto& x : trial) x /= tn;
        const double ft = sigma * value_(trial);
        if (ft > f) {
          v = std::move(trial);
          f = ft;
          eta = std::min(1.0, 2.0 * eta);
          improved = true;
          break;
        }
        eta *= 0.5;
      }
      if (!improved) break;
    }
    return v;
  }

 private:
  NumericPolynomial value_;
  std::vector<NumericPolynomial> gradient_;
};

std::vector<double> to_unit_double(const RationalVector& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  const double n = norm(out);
  for (auto& x : out) x /= n;
  return out;
}

std::vector<double> negated(std::vector<double> v) {
  for (auto& x : v) x = -x;
  return v;
}

RationalMatrix quadratic_form_matrix(const Polynomial& form) {
  const std::size_t n = form.dim();
  RationalMatrix a(n, n);
  for (const auto& [e, c] : form.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) idx.push_back(i);
    }
    if (idx[0] == idx[1]) {
      a(idx[0], idx[0]) += c;
    } else {
      a(idx[0], idx[1]) += c / 2;
      a(idx[1], idx[0]) += c / 2;
    }
  }
  return a;
}

SignVerdict odd_parity_verdict(const Polynomial& form, std::uint64_t seed) {
  SignVerdict v;
  v.kind = SignKind::Indefinite;
  v.evidence = SignEvidence::OddParity;
  const FormOnSphere f(form);
  std::optional<std::vector<double>> found;
  for (std::size_t i = 0; i < form.dim() && !found; ++i) {
    std::vector<double> e(form.dim(), 0.0);
    e[i] = 1.0;
    if (f.strict_sign(e) != 0) found = e;
  }
  Rng rng = Rng::derive(seed, 0x0dd);
  while (!found) {
    auto u = random_unit_vector(rng, form.dim());
    ++v.samples;
    if (f.strict_sign(u) != 0) found = u;
  }
  // P_m(-v) = -P_m(v) for odd m.
  if (f.strict_sign(*found) > 0) {
    v.witness_pos = *found;
    v.witness_neg = negated(*found);
  } else {
    v.witness_neg = *found;
    v.witness_pos = negated(*found);
  }
  return v;
}

SignVerdict quadratic_verdict(const Polynomial& form) {
  SignVerdict v;
  v.evidence = SignEvidence::ExactQuadratic;
  const auto diag = congruence_diagonalize(quadratic_form_matrix(form));
  const auto in = inertia(diag);
  for (std::size_t i = 0; i < diag.diagonal.size(); ++i) {
    const int s = sgn(diag.diagonal[i]);
    if (s > 0 && !v.witness_pos) v.witness_pos = to_unit_double(diag.transform.column(i));
    if (s < 0 && !v.witness_neg) v.witness_neg = to_unit_double(diag.transform.column(i));
    if (s == 0) v.null_directions.push_back(diag.transform.column(i));
  }
  if (in.positive > 0 && in.negative > 0) {
    v.kind = SignKind::Indefinite;
  } else {
    v.kind = in.positive > 0 ? SignKind::PositiveSemidefinite : SignKind::NegativeSemidefinite;
    v.definite = in.zero == 0;
  }
  return v;
}

/// Every monomial has all-even exponents and all coefficients share one sign.
std::optional<SignVerdict> even_monomial_verdict(const Polynomial& form) {
  int sign = 0;
  for (const auto& [e, c] : form.terms()) {
    for (auto x : e) {
      if (x % 2 != 0) return std::nullopt;
    }
    const int s = sgn(c);
    if (sign != 0 && s != sign) return std::nullopt;
    sign = s;
  }
  SignVerdict v;
  v.evidence = SignEvidence::EvenMonomials;
  v.kind = sign > 0 ? SignKind::PositiveSemidefinite : SignKind::NegativeSemidefinite;
  const auto m = *form.degree();
  v.definite = true;
  for (std::size_t i = 0; i < form.dim(); ++i) {
    Exponents pure(form.dim(), 0);
    pure[i] = m;
    if (form.coefficient(pure) == 0) {
      v.definite = false;
      RationalVector axis(form.dim());
      axis[i] = 1;
      v.null_directions.push_back(std::move(axis));
    }
  }
  return v;
}

SignVerdict sampled_verdict(const Polynomial& form, std::uint64_t seed) {
  SignVerdict v;
  v.evidence = SignEvidence::Sampled;
  const FormOnSphere f(form);
  Rng rng = Rng::derive(seed, 0x5166);
  std::vector<std::pair<double, std::vector<double>>> pool;
  pool.reserve(kSignSamples);
  for (std::size_t i = 0; i < kSignSamples; ++i) {
    auto u = random_unit_vector(rng, form.dim());
    const int s = f.strict_sign(u);
    if (s > 0 && !v.witness_pos) v.witness_pos = u;
    if (s < 0 && !v.witness_neg) v.witness_neg = u;
    pool.emplace_back(f(u), std::move(u));
  }
  v.samples = kSignSamples;
  if (!v.witness_pos || !v.witness_neg) {
    // Push from the extreme samples toward the missing sign.
    std::stable_sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    const bool need_neg = !v.witness_neg;
    const bool need_pos = !v.witness_pos;
    const std::size_t per_side = (need_neg && need_pos) ? kSignDescents / 2 : kSignDescents;
    for (std::size_t i = 0; i < per_side; ++i) {
      if (need_neg && !v.witness_neg) {
        ++v.descents;
        auto w = f.ascend(pool[i].second, -1, kDescentSteps, true);
        if (f.strict_sign(w) < 0) v.witness_neg = w;
      }
      if (need_pos && !v.witness_pos) {
        ++v.descents;
        auto w = f.ascend(pool[pool.size() - 1 - i].second, 1, kDescentSteps, true);
        if (f.strict_sign(w) > 0) v.witness_pos = w;
      }
    }
  }
  v.kind = (v.witness_pos && v.witness_neg) ? SignKind::Indefinite : SignKind::Inconclusive;
  return v;
}

/// Strict opposite-sign recheck of Indefinite witnesses.
void recheck_witnesses(const Polynomial& form, const SignVerdict& v) {
  if (v.kind != SignKind::Indefinite) return;
  const FormOnSphere f(form);
  if (!v.witness_pos || !v.witness_neg || f.strict_sign(*v.witness_pos) != 1 ||
      f.strict_sign(*v.witness_neg) != -1) {
    throw ValidationError("indefinite verdict witnesses failed their sign recheck");
  }
}

int exact_sign_kind(const SignVerdict& v) {
  if (v.evidence != SignEvidence::ExactQuadratic && v.evidence != SignEvidence::EvenMonomials) return 0;
  if (v.kind == SignKind::PositiveSemidefinite) return 1;
  if (v.kind == SignKind::NegativeSemidefinite) return -1;
  return 0;
}

std::vector<double> scaled(const std::vector<double>& v, double t) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = t * v[i];
  return out;
}

/// Points of the cap {<v,w> >= cos_theta}; the first tenth lie on its rim.
std::vector<std::vector<double>> cap_sample(const std::vector<double>& w, double cos_theta, std::size_t count,
                                            Rng& rng) {
  std::vector<std::vector<double>> out;
  out.reserve(count);
  const std::size_t rim = count / 10;
  for (std::size_t i = 0; i < count; ++i) {
    auto u = random_unit_vector(rng, w.size());
    const double along = dot(u, w);
    for (std::size_t j = 0; j < u.size(); ++j) u[j] -= along * w[j];
    const double un = norm(u);
    if (un < 1e-12) {
      --i;
      continue;
    }
    for (auto& x : u) x /= un;
    const double c = i < rim ? cos_theta : cos_theta + (1.0 - cos_theta) * rng.uniform01();
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    std::vector<double> v(w.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = c * w[j] + s * u[j];
    out.push_back(std::move(v));
  }
  return out;
}

/// Centers t·w along an exact null direction of P_m, where the highest
/// nonzero lower part has the requested sign. Not covered by the cone argument.
std::optional<Ball> lower_part_ball(const Polynomial& p, const SignVerdict& verdict, double radius, int sigma) {
  const auto parts = homogeneous_parts(p);
  for (const auto& direction : verdict.null_directions) {
    for (int flip : {1, -1}) {
      RationalVector w = direction;
      for (auto& x : w) x *= flip;
      int lower_sign = 0;
      for (std::size_t j = parts.degree; j-- > 0;) {
        const int s = sgn(parts.parts[j].evaluate(w));
        if (s != 0) {
          lower_sign = s;
          break;
        }
      }
      if (lower_sign != sigma) continue;
      const auto unit = to_unit_double(w);
      double t = radius + 1.0;
      for (int k = 0; k < 48; ++k, t *= 2.0) {
        Ball ball{scaled(unit, t), radius, sigma};
        if (find_ball_violation(p, ball, 256)) continue;
        if (!find_ball_violation(p, ball)) return ball;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

const char* to_string(SignKind k) {
  switch (k) {
    case SignKind::PositiveSemidefinite: return "PositiveSemidefinite";
    case SignKind::NegativeSemidefinite: return "NegativeSemidefinite";
    case SignKind::Indefinite: return "Indefinite";
    case SignKind::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

const char* to_string(SignEvidence e) {
  switch (e) {
    case SignEvidence::ExactQuadratic: return "exact_quadratic";
    case SignEvidence::EvenMonomials: return "even_monomials";
    case SignEvidence::OddParity: return "odd_parity";
    case SignEvidence::Sampled: return "sampled";
  }
  return "sampled";
}

const char* to_string(AuditFinding::Status s) {
  switch (s) {
    case AuditFinding::Status::Consistent: return "consistent";
    case AuditFinding::Status::Violation: return "violation";
    case AuditFinding::Status::NotApplicable: return "not_applicable";
  }
  return "not_applicable";
}

SignVerdict leading_form_verdict(const Polynomial& p, std::uint64_t seed) {
  if (p.is_zero()) throw DomainError("leading_form_verdict: zero polynomial");
  const Polynomial form = leading_form(p);
  const auto m = *form.degree();
  SignVerdict v;
  if (m % 2 == 1) {
    v = odd_parity_verdict(form, seed);
  } else if (m == 2) {
    v = quadratic_verdict(form);
  } else if (auto even = even_monomial_verdict(form)) {
    v = std::move(*even);
  } else {
    v = sampled_verdict(form, seed);
  }
  v.degree = m;
  recheck_witnesses(form, v);
  return v;
}

double tail_bound_t0(const Polynomial& p, double eps) {
  if (!(eps > 0.0)) throw DomainError("tail_bound_t0: eps must be positive");
  if (p.is_constant()) throw DomainError("tail_bound_t0: constant polynomial");
  const Rational tail = p.l1_norm() - leading_form(p).l1_norm();
  return std::max(1.0, to_double(tail) / eps);
}

std::optional<std::vector<double>> find_ball_violation(const Polynomial& p, const Ball& ball, std::size_t samples) {
  const NumericPolynomial f(p);
  const std::size_t d = p.dim();
  auto bad = [&](const std::vector<double>& x) {
    const double v = f(x);
    return !(ball.sign * v > 0.0);
  };
  if (bad(ball.center)) return ball.center;
  std::size_t checked = 1;
  for (std::size_t i = 0; i < d && checked < samples; ++i) {
    for (double s : {-1.0, 1.0}) {
      auto x = ball.center;
      x[i] += s * ball.radius;
      ++checked;
      if (bad(x)) return x;
    }
  }
  std::vector<std::uint32_t> bases(d);
  for (std::size_t i = 0; i < d; ++i) bases[i] = nth_prime(i);
  std::vector<double> u(d);
  for (std::uint64_t index = 1; checked < samples; ++index) {
    for (std::size_t i = 0; i < d; ++i) u[i] = 2.0 * halton(index, bases[i]) - 1.0;
    if (dot(u, u) > 1.0) continue;
    auto x = ball.center;
    for (std::size_t i = 0; i < d; ++i) x[i] += ball.radius * u[i];
    ++checked;
    if (bad(x)) return x;
  }
  return std::nullopt;
}

BallSearch find_sign_ball(const Polynomial& p, double radius, std::uint64_t seed, std::optional<int> requested_sign) {
  if (!(radius > 0.0)) throw DomainError("find_sign_ball: radius must be positive");
  if (p.is_zero()) throw DomainError("find_sign_ball: zero polynomial");
  if (requested_sign && *requested_sign != 1 && *requested_sign != -1) {
    throw DomainError("find_sign_ball: requested sign must be +1 or -1");
  }
  BallSearch out;
  if (p.is_constant()) {
    const int s = sgn(p.constant_term());
    if (!requested_sign || *requested_sign == s) {
      out.outcome = BallSearch::Outcome::Found;
      out.ball = Ball{std::vector<double>(p.dim(), 0.0), radius, s};
      out.note = "constant polynomial";
    } else {
      out.note = "constant polynomial has no points of the requested sign";
    }
    return out;
  }

  const Polynomial form = leading_form(p);
  const FormOnSphere f(form);
  const SignVerdict verdict = leading_form_verdict(p, seed);

  Rng rng = Rng::derive(seed, 0xba11);
  std::vector<std::vector<double>> directions;
  directions.reserve(2000);
  for (int i = 0; i < 2000; ++i) directions.push_back(random_unit_vector(rng, p.dim()));

  int sigma = 1;
  if (requested_sign) {
    sigma = *requested_sign;
  } else if (exact_sign_kind(verdict) == -1) {
    sigma = -1;
  } else if (exact_sign_kind(verdict) == 0) {
    const bool any_positive = std::any_of(directions.begin(), directions.end(),
                                          [&](const auto& u) { return f.strict_sign(u) > 0; });
    sigma = any_positive || verdict.witness_pos ? 1 : -1;
  }

  auto fallback = [&](std::string why) {
    if (auto ball = lower_part_ball(p, verdict, radius, sigma)) {
      out.outcome = BallSearch::Outcome::Found;
      out.ball = std::move(ball);
      out.heuristic = true;
      out.note = "found along a null direction of the leading form using a lower homogeneous part";
    } else {
      out.outcome = BallSearch::Outcome::BoundedRegionLikely;
      out.note = std::move(why);
    }
    return out;
  };

  if (exact_sign_kind(verdict) == -sigma) {
    if (verdict.definite) {
      out.outcome = BallSearch::Outcome::BoundedRegionLikely;
      out.heuristic = false;
      out.note = "leading form is definite of the opposite sign, so that side of P is bounded";
      return out;
    }
    out.heuristic = true;
    return fallback("leading form is semi-definite of the opposite sign; no ball found along its null directions");
  }

  // Apex direction w maximizing sigma * P_m.
  std::size_t best = 0;
  for (std::size_t i = 1; i < directions.size(); ++i) {
    if (sigma * f(directions[i]) > sigma * f(directions[best])) best = i;
  }
  std::vector<double> w = directions[best];
  if (sigma == 1 && verdict.witness_pos && f(*verdict.witness_pos) > f(w)) w = *verdict.witness_pos;
  if (sigma == -1 && verdict.witness_neg && f(*verdict.witness_neg) < f(w)) w = *verdict.witness_neg;
  w = f.ascend(w, sigma, 200);
  if (f.strict_sign(w) != sigma) {
    out.heuristic = true;
    return fallback("no direction found where the leading form has the requested sign");
  }

  ConeCertificate cone;
  cone.w = w;
  cone.leading_value = f(w);
  const double half = sigma * cone.leading_value / 2.0;
  double theta = std::numbers::pi / 3.0;
  bool cap_ok = false;
  for (std::size_t h = 0; h <= 20; ++h) {
    cone.halvings = h;
    const auto cap = cap_sample(w, std::cos(theta), 1000, rng);
    cap_ok = std::all_of(cap.begin(), cap.end(), [&](const auto& v) { return sigma * f(v) > half; });
    if (cap_ok) break;
    theta *= 0.5;
  }
  if (!cap_ok) throw ValidationError("find_sign_ball: cap condition failed after 20 halvings");
  cone.cos_theta = std::cos(theta);
  cone.margin = std::abs(cone.leading_value) / 4.0;
  cone.t0 = tail_bound_t0(p, cone.margin);

  const double tc = std::max(cone.t0 + radius + 1.0, (radius + 1.0) / std::sin(theta));
  Ball ball{scaled(w, tc), radius, sigma};
  if (auto bad = find_ball_violation(p, ball)) {
    std::string where;
    for (double x : *bad) where += (where.empty() ? "" : ", ") + std::to_string(x);
    throw ValidationError("find_sign_ball: constructed ball fails its sign check at (" + where + ")");
  }
  out.outcome = BallSearch::Outcome::Found;
  out.ball = std::move(ball);
  out.cone = std::move(cone);
  return out;
}

std::optional<CompactnessBound> compactness_bound(const Polynomial& p, std::uint64_t seed) {
  if (p.is_constant()) throw DomainError("compactness_bound: constant polynomial");
  const SignVerdict verdict = leading_form_verdict(p, seed);
  const int sigma = exact_sign_kind(verdict);
  if (sigma == 0 || !verdict.definite) return std::nullopt;
  const FormOnSphere f(leading_form(p));
  Rng rng = Rng::derive(seed, 0xc0de);
  CompactnessBound out;
  out.alpha_hat = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < kSignSamples; ++i) {
    out.alpha_hat = std::min(out.alpha_hat, std::abs(f(random_unit_vector(rng, p.dim()))));
  }
  out.t0 = tail_bound_t0(p, out.alpha_hat / 2.0);
  const NumericPolynomial value(p);
  out.validated = true;
  for (std::size_t i = 0; i < 1000 && out.validated; ++i) {
    const auto u = random_unit_vector(rng, p.dim());
    for (double t : {1.01 * out.t0, 10.0 * out.t0}) {
      if (!(sigma * value(scaled(u, t)) > 0.0)) out.validated = false;
    }
  }
  return out;
}

std::vector<AuditFinding> audit_obstructions(const Polynomial& p, const CurvatureReport& report, std::uint64_t seed) {
  if (!(report.source == p)) throw DomainError("audit: report was produced from a different polynomial");
  std::vector<AuditFinding> findings;
  const bool cmc = report.verdict == CmcVerdict::CmcCertified || report.verdict == CmcVerdict::CmcNumeric;
  if (!cmc || std::abs(report.c_estimate) <= report.tolerance) {
    findings.push_back({"nonzero_cmc_obstructions", AuditFinding::Status::NotApplicable,
                        "not in theorem scope: no non-zero constant mean curvature was established", {}, {}});
    return findings;
  }
  const auto m = *p.degree();
  AuditFinding parity{"even_degree", AuditFinding::Status::Consistent, "degree " + std::to_string(m) + " is even",
                      {}, {}};
  if (m % 2 == 1) {
    parity.status = AuditFinding::Status::Violation;
    parity.detail = "non-zero CMC reported for odd degree " + std::to_string(m);
  }
  findings.push_back(std::move(parity));

  const auto verdict = leading_form_verdict(p, seed);
  AuditFinding form{"semidefinite_leading_form", AuditFinding::Status::Consistent, "", {}, {}};
  switch (verdict.kind) {
    case SignKind::Indefinite:
      form.status = AuditFinding::Status::Violation;
      form.detail = "non-zero CMC reported but the leading form changes sign";
      form.witness_pos = verdict.witness_pos;
      form.witness_neg = verdict.witness_neg;
      break;
    case SignKind::PositiveSemidefinite:
    case SignKind::NegativeSemidefinite:
      form.detail = std::string("leading form is ") + to_string(verdict.kind) + " (" + to_string(verdict.evidence) + ")";
      break;
    case SignKind::Inconclusive:
      form.status = AuditFinding::Status::NotApplicable;
      form.detail = "no sign change of the leading form found by sampling; semi-definiteness not proven";
      break;
  }
  findings.push_back(std::move(form));
  return findings;
}

}  // namespace hypersurf
