#include "hypersurf/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypersurf/calculus.hpp"
#include "hypersurf/error.hpp"
#include "hypersurf/random.hpp"

namespace hypersurf {

namespace {

constexpr std::size_t kNewtonIterations = 100;
constexpr double kStepTolerance = 1e-8;  // relative Newton step at acceptance
constexpr std::size_t kNearestStarts = 16;
constexpr std::size_t kDescentIterations = 4000;

void require_hypersurface(const Polynomial& p, const char* op) {
  if (p.dim() < 2) throw DomainError(std::string(op) + ": need at least 2 variables");
  if (p.is_constant()) throw DomainError(std::string(op) + ": constant polynomial");
}

std::vector<double> subtract(std::span<const double> a, std::span<const double> b) {
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

}  // namespace

CurvatureField::CurvatureField(const Polynomial& p) : dim_(p.dim()), value_(p) {
  const auto g = hypersurf::gradient(p);
  for (const auto& gi : g) gradient_.emplace_back(gi);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) hessian_.emplace_back(derivative(g[i], j));
  }
}

std::vector<double> CurvatureField::gradient(std::span<const double> x) const {
  std::vector<double> g(dim_);
  for (std::size_t i = 0; i < dim_; ++i) g[i] = gradient_[i](x);
  return g;
}

std::vector<double> CurvatureField::hessian(std::span<const double> x) const {
  std::vector<double> h(dim_ * dim_);
  std::size_t t = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      h[i * dim_ + j] = h[j * dim_ + i] = hessian_[t++](x);
    }
  }
  return h;
}

double CurvatureField::mean_curvature(std::span<const double> x) const {
  if (dim_ < 2) throw DomainError("mean curvature needs at least 2 variables");
  const auto g = gradient(x);
  const double g2 = dot(g, g);
  const double gn = std::sqrt(g2);
  if (!(gn >= kRegularityFloor)) {
    throw DomainError("mean curvature: gradient norm " + std::to_string(gn) + " below regularity floor");
  }
  const auto h = hessian(x);
  double lap = 0.0;
  double ghg = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    lap += h[i * dim_ + i];
    for (std::size_t j = 0; j < dim_; ++j) ghg += g[i] * h[i * dim_ + j] * g[j];
  }
  const double numerator = -(g2 * lap - ghg);
  return numerator / (static_cast<double>(dim_ - 1) * g2 * gn);
}

Polynomial cmc_numerator(const Polynomial& p) {
  require_hypersurface(p, "cmc_numerator");
  const auto g = gradient(p);
  const auto h = hessian(p);
  Polynomial g2(p.dim());
  for (const auto& gi : g) g2 += gi * gi;
  Polynomial ghg(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    for (std::size_t j = 0; j < p.dim(); ++j) {
      if (h[i][j].is_zero() || g[i].is_zero() || g[j].is_zero()) continue;
      ghg += g[i] * h[i][j] * g[j];
    }
  }
  return ghg - g2 * laplacian(p);
}

Polynomial cmc_defect(const Polynomial& p, const Rational& c) {
  const Polynomial numerator = cmc_numerator(p);
  Polynomial g2(p.dim());
  for (const auto& gi : gradient(p)) g2 += gi * gi;
  const Rational n = static_cast<unsigned long>(p.dim() - 1);
  Polynomial f = numerator * numerator;
  if (c != 0) f -= pow(g2, 3) * Rational(n * n * c * c);
  return f;
}

double mean_curvature_at(const Polynomial& p, std::span<const double> x) {
  if (x.size() != p.dim()) throw DimensionError("mean_curvature_at: point has wrong length");
  return CurvatureField(p).mean_curvature(x);
}

std::optional<std::vector<double>> project_to_variety(const CurvatureField& field, std::vector<double> x,
                                                      double divergence_radius) {
  for (std::size_t it = 0; it <= kNewtonIterations; ++it) {
    const double v = field.value(x);
    if (!std::isfinite(v)) return std::nullopt;
    const auto g = field.gradient(x);
    const double g2 = dot(g, g);
    // Small residual alone is not enough near singular points, where |P| is tiny
    // but the distance estimate |P|/|grad P| is not.
    if (std::abs(v) <= kResidualTolerance * std::max(1.0, field.value_scale(x)) &&
        (g2 == 0.0 || std::abs(v) <= kStepTolerance * std::max(1.0, norm(x)) * std::sqrt(g2))) {
      if (g2 > 0.0) {
        // One polishing step; Newton is quadratic here, so keep it unless it got worse.
        auto polished = x;
        for (std::size_t i = 0; i < x.size(); ++i) polished[i] -= v / g2 * g[i];
        if (std::abs(field.value(polished)) <= std::abs(v)) return polished;
      }
      return x;
    }
    if (it == kNewtonIterations) break;
    if (!(g2 > 0.0) || !std::isfinite(g2)) return std::nullopt;
    const double step = v / g2;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= step * g[i];
    if (!(norm(x) <= divergence_radius)) return std::nullopt;
  }
  return std::nullopt;
}

VarietySample sample_variety(const Polynomial& p, std::size_t count, double half_width, std::uint64_t seed) {
  if (count == 0) throw DomainError("sample_variety: count must be at least 1");
  if (!(half_width > 0.0)) throw DomainError("sample_variety: box half width must be positive");
  VarietySample out;
  out.requested = count;
  if (p.is_constant()) {
    out.variety_not_found = true;
    return out;
  }
  const CurvatureField field(p);
  Rng rng = Rng::derive(seed, 0x5a17);
  const std::size_t max_starts = 20 * count + 100;
  const double divergence = 1e6 * half_width;
  while (out.points.size() < count && out.starts < max_starts) {
    ++out.starts;
    auto x = project_to_variety(field, random_in_box(rng, p.dim(), half_width), divergence);
    if (!x) continue;
    ++out.converged;
    if (!(norm(field.gradient(*x)) >= kRegularityFloor)) {
      ++out.rejected_low_gradient;
      continue;
    }
    out.points.push_back(std::move(*x));
  }
  out.variety_not_found = out.points.empty();
  return out;
}

namespace {

struct Descent {
  std::vector<double> point;
  double distance;
  double alignment;
};

double alignment_of(const CurvatureField& field, std::span<const double> x, std::span<const double> x0) {
  const auto d = subtract(x, x0);
  const double dn = norm(d);
  if (dn == 0.0) return 1.0;
  const auto g = field.gradient(x);
  const double gn = norm(g);
  if (gn == 0.0) return 0.0;
  return std::min(1.0, std::abs(dot(d, g)) / (dn * gn));
}

Descent descend(const CurvatureField& field, std::vector<double> x, std::span<const double> x0,
                double divergence) {
  double dist = norm(subtract(x, x0));
  double alpha = 1.0;
  for (std::size_t it = 0; it < kDescentIterations; ++it) {
    const auto g = field.gradient(x);
    const double gn = norm(g);
    if (gn < kRegularityFloor) break;
    auto d = subtract(x0, x);
    const double along = dot(d, g) / gn;
    std::vector<double> tangent(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) tangent[i] = d[i] - along * g[i] / gn;
    if (norm(tangent) <= 1e-12 * std::max(1.0, dist)) break;
    bool moved = false;
    while (alpha > 1e-14) {
      std::vector<double> trial(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] + alpha * tangent[i];
      auto projected = project_to_variety(field, std::move(trial), divergence);
      if (projected) {
        const double nd = norm(subtract(*projected, x0));
        if (nd < dist) {
          x = std::move(*projected);
          dist = nd;
          alpha = std::min(1.0, 2.0 * alpha);
          moved = true;
          break;
        }
      }
      alpha *= 0.5;
    }
    if (!moved) break;
  }
  return {x, dist, alignment_of(field, x, x0)};
}

}  // namespace

NearestPointResult nearest_point(const Polynomial& p, std::span<const double> x0, std::uint64_t seed) {
  require_hypersurface(p, "nearest_point");
  if (x0.size() != p.dim()) throw DimensionError("nearest_point: x0 has wrong length");
  const CurvatureField field(p);
  const std::vector<double> target(x0.begin(), x0.end());
  const double half_width = std::max(5.0, 2.0 * norm(target) + 1.0);
  const double divergence = 1e6 * half_width;

  std::vector<std::vector<double>> starts;
  if (auto direct = project_to_variety(field, target, divergence)) starts.push_back(std::move(*direct));
  const auto sampled = sample_variety(p, kNearestStarts - starts.size(), half_width, seed ^ 0x6e70ull);
  for (const auto& s : sampled.points) starts.push_back(s);

  NearestPointResult best;
  best.starts = starts.size();
  bool have = false;
  for (const auto& s : starts) {
    auto d = descend(field, s, target, divergence);
    const bool better = !have || d.distance < best.distance ||
                        (d.distance == best.distance && d.point < best.point);
    if (better) {
      best.point = std::move(d.point);
      best.distance = d.distance;
      best.gradient_alignment = d.alignment;
      have = true;
    }
  }
  best.converged = have && best.gradient_alignment >= 1.0 - 1e-6;
  return best;
}

const char* to_string(CmcVerdict v) {
  switch (v) {
    case CmcVerdict::CmcCertified: return "CMC_certified";
    case CmcVerdict::CmcNumeric: return "CMC_numeric";
    case CmcVerdict::NotCmc: return "NotCMC";
    case CmcVerdict::Minimal: return "Minimal";
    case CmcVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

std::optional<Rational> snap_to_rational(double x, double window, std::uint64_t max_den) {
  if (!std::isfinite(x) || std::abs(x) > 1e15) return std::nullopt;
  mpz_class h_prev = 1, h_prev2 = 0;
  mpz_class k_prev = 0, k_prev2 = 1;
  double r = x;
  for (int i = 0; i < 64; ++i) {
    const double a = std::floor(r);
    const mpz_class ai(a);
    const mpz_class h = ai * h_prev + h_prev2;
    const mpz_class k = ai * k_prev + k_prev2;
    if (k > max_den) return std::nullopt;
    Rational q(h, k);
    q.canonicalize();
    if (std::abs(to_double(q) - x) <= window) return q;
    const double frac = r - a;
    if (frac <= 0.0) return std::nullopt;
    r = 1.0 / frac;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  return std::nullopt;
}

std::optional<std::pair<Polynomial, std::size_t>> certify_cmc(const Polynomial& p, const Rational& c) {
  require_hypersurface(p, "certify_cmc");
  // Division by p in a variable where p is monic up to a constant is unique,
  // so divisibility does not depend on which eligible variable is used.
  for (std::size_t var = 0; var < p.dim(); ++var) {
    if (!has_constant_leading_coefficient(p, var)) continue;
    const Polynomial f = cmc_defect(p, c);
    auto [quotient, remainder] = exact_divide(f, p, var);
    if (!remainder.is_zero()) return std::nullopt;
    if (!(quotient * p == f)) throw ValidationError("CMC certificate failed its multiplication recheck");
    return std::make_pair(std::move(quotient), var);
  }
  return std::nullopt;
}

CurvatureReport is_cmc(const Polynomial& p, const CmcOptions& options) {
  require_hypersurface(p, "is_cmc");
  CurvatureReport report;
  report.source = p;
  report.tolerance = options.tolerance;
  auto sampled = sample_variety(p, options.sample_count, options.half_width, options.seed);
  const CurvatureField field(p);
  for (const auto& x : sampled.points) {
    CurvatureSample s;
    s.point = x;
    s.mean_curvature = field.mean_curvature(x);
    s.residual = std::abs(field.value(x));
    s.gradient_norm = norm(field.gradient(x));
    report.samples.push_back(std::move(s));
  }
  sampled.points.clear();
  report.sampling = std::move(sampled);
  if (report.samples.empty()) {
    report.verdict = CmcVerdict::Inconclusive;
    return report;
  }

  std::vector<double> hs;
  hs.reserve(report.samples.size());
  for (const auto& s : report.samples) hs.push_back(s.mean_curvature);
  std::sort(hs.begin(), hs.end());
  const std::size_t mid = hs.size() / 2;
  report.c_estimate = hs.size() % 2 == 1 ? hs[mid] : 0.5 * (hs[mid - 1] + hs[mid]);
  report.spread = hs.back() - hs.front();
  for (double h : hs) report.max_deviation = std::max(report.max_deviation, std::abs(h - report.c_estimate));

  if (report.max_deviation <= options.tolerance) {
    const bool zero = std::abs(report.c_estimate) <= options.tolerance;
    const auto snapped = zero ? std::optional<Rational>(Rational(0))
                              : snap_to_rational(report.c_estimate, 10.0 * options.tolerance);
    report.verdict = CmcVerdict::CmcNumeric;
    if (snapped) {
      report.c_exact = snapped;
      if (auto cert = certify_cmc(p, *snapped)) {
        report.certificate = std::move(cert->first);
        report.certificate_variable = cert->second;
        report.verdict = zero ? CmcVerdict::Minimal : CmcVerdict::CmcCertified;
      }
    }
  } else if (report.spread > 10.0 * options.tolerance) {
    report.verdict = CmcVerdict::NotCmc;
  } else {
    report.verdict = CmcVerdict::Inconclusive;
  }
  return report;
}

}  // namespace hypersurf
