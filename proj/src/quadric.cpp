#include "hypersurf/quadric.hpp"

#include <algorithm>
#include <cmath>

#include "hypersurf/curvature.hpp"
#include "hypersurf/error.hpp"
#include "hypersurf/random.hpp"

namespace hypersurf {

namespace {

void require_quadric(const Polynomial& p, const char* op) {
  const auto d = p.degree();
  if (d && *d > 2) throw DomainError(std::string(op) + ": degree " + std::to_string(*d) + " exceeds 2");
}

Rational quadratic_value(const RationalMatrix& a, const RationalVector& x) { return dot(x, a * x); }

}  // namespace

QuadricData quadric_data(const Polynomial& p) {
  require_quadric(p, "quadric_data");
  const std::size_t n = p.dim();
  QuadricData q{RationalMatrix(n, n), RationalVector(n), 0};
  for (const auto& [e, c] : p.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) idx.push_back(i);
    }
    if (idx.empty()) {
      q.c0 = c;
    } else if (idx.size() == 1) {
      q.b[idx[0]] = c;
    } else if (idx[0] == idx[1]) {
      q.a(idx[0], idx[0]) = c;
    } else {
      q.a(idx[0], idx[1]) = c / 2;
      q.a(idx[1], idx[0]) = c / 2;
    }
  }
  return q;
}

const char* to_string(QuadricClass::Kind k) {
  switch (k) {
    case QuadricClass::Kind::Sphere: return "Sphere";
    case QuadricClass::Kind::RoundCylinder: return "RoundCylinder";
    case QuadricClass::Kind::Hyperplane: return "Hyperplane";
    case QuadricClass::Kind::EmptyVariety: return "EmptyVariety";
    case QuadricClass::Kind::Other: return "Other";
  }
  return "Other";
}

const char* to_string(RegularityResult::Status s) {
  switch (s) {
    case RegularityResult::Status::Regular: return "Regular";
    case RegularityResult::Status::Singular: return "Singular";
    case RegularityResult::Status::EmptyVariety: return "EmptyVariety";
  }
  return "Regular";
}

double QuadricClass::predicted_mean_curvature_abs() const {
  if (!curvature_num_sq || !curvature_den_sq) return 0.0;
  return std::sqrt(to_double(*curvature_num_sq) / to_double(*curvature_den_sq));
}

bool quadric_variety_empty(const Polynomial& p) {
  const auto q = quadric_data(p);
  if (q.a.is_zero()) {
    const bool linear = std::any_of(q.b.begin(), q.b.end(), [](const Rational& x) { return x != 0; });
    return !linear && q.c0 != 0;
  }
  const auto in = inertia(congruence_diagonalize(q.a));
  if (in.positive > 0 && in.negative > 0) return false;
  RationalVector rhs(q.b.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = -q.b[i] / 2;
  const auto h = solve(q.a, rhs);
  if (!h) return false;  // unbounded in both directions along a kernel vector
  const Rational extremum = q.c0 - quadratic_value(q.a, *h);
  const int s = in.positive > 0 ? 1 : -1;
  return s * sgn(extremum) > 0;
}

QuadricClass classify_quadric(const Polynomial& p) {
  require_quadric(p, "classify_quadric");
  if (p.is_constant()) throw DomainError("classify_quadric: constant polynomial");
  const std::size_t dim = p.dim();
  const auto q = quadric_data(p);
  QuadricClass out;
  if (q.a.is_zero()) {
    out.kind = QuadricClass::Kind::Hyperplane;
    out.description = "hyperplane";
    out.curvature_num_sq = Rational(0);
    out.curvature_den_sq = Rational(1);
    return out;
  }
  auto not_round = [&](std::string description) {
    if (quadric_variety_empty(p)) {
      out.kind = QuadricClass::Kind::EmptyVariety;
      out.description = "no real points";
    } else {
      out.kind = QuadricClass::Kind::Other;
      out.description = std::move(description);
    }
    return out;
  };

  const std::size_t r = rank(q.a);
  const Rational tr = q.a.trace();
  if (tr == 0) return not_round("non-round quadric");
  const Rational lambda = tr / static_cast<unsigned long>(r);
  if (!(q.a * q.a == lambda * q.a)) return not_round("non-round quadric");
  RationalVector rhs(dim);
  for (std::size_t i = 0; i < dim; ++i) rhs[i] = -q.b[i] / 2;
  const auto h = solve(q.a, rhs);
  if (!h) return not_round("non-round quadric");

  const RationalMatrix projector = Rational(1 / lambda) * q.a;
  const RationalVector center = projector * *h;
  const Rational rho = q.c0 - quadratic_value(q.a, center);
  const Rational sigma = -rho / lambda;
  out.scale = lambda;
  if (sgn(sigma) < 0) {
    out.kind = QuadricClass::Kind::EmptyVariety;
    out.description = "no real points";
    return out;
  }
  if (sigma == 0) {
    out.kind = QuadricClass::Kind::Other;
    out.description = "point/degenerate cone";
    return out;
  }
  if (r == 1) {
    out.kind = QuadricClass::Kind::Other;
    out.description = "non-round quadric";
    return out;
  }
  out.center = center;
  out.radius_sq = sigma;
  out.projector = projector;
  out.k = r - 1;
  out.kind = r == dim ? QuadricClass::Kind::Sphere : QuadricClass::Kind::RoundCylinder;
  out.description = r == dim ? "hypersphere" : "round cylinder";
  const Rational n = static_cast<unsigned long>(dim - 1);
  out.curvature_num_sq = Rational(static_cast<unsigned long>(out.k * out.k));
  out.curvature_den_sq = Rational(n * n * sigma);
  return out;
}

Polynomial reconstruct(const QuadricClass& cls, std::size_t dim) {
  if (cls.kind != QuadricClass::Kind::Sphere && cls.kind != QuadricClass::Kind::RoundCylinder) {
    throw DomainError("reconstruct: only spheres and round cylinders carry reconstruction data");
  }
  std::vector<Polynomial> shifted;
  for (std::size_t i = 0; i < dim; ++i) {
    shifted.push_back(Polynomial::variable(dim, i) - Polynomial::constant(dim, cls.center[i]));
  }
  Polynomial out = Polynomial::constant(dim, -cls.radius_sq);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (cls.projector(i, j) != 0) out += shifted[i] * shifted[j] * cls.projector(i, j);
    }
  }
  return out * cls.scale;
}

RegularityResult quadric_regularity(const Polynomial& p) {
  require_quadric(p, "quadric_regularity");
  RegularityResult out;
  if (quadric_variety_empty(p)) {
    out.status = RegularityResult::Status::EmptyVariety;
    return out;
  }
  const auto q = quadric_data(p);
  const std::size_t n = p.dim();
  RationalMatrix two_a = Rational(2) * q.a;
  RationalVector rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = -q.b[i];
  const auto critical = solve(two_a, rhs);
  if (!critical) return out;
  const Rational value = p.evaluate(*critical);
  for (const auto& w : kernel_basis(q.a)) {
    RationalVector y = *critical;
    for (std::size_t i = 0; i < n; ++i) y[i] += w[i];
    if (p.evaluate(y) != value) throw ValidationError("quadric_regularity: P not constant on its critical set");
  }
  if (value == 0) {
    out.status = RegularityResult::Status::Singular;
    out.witness = *critical;
  }
  return out;
}

LinealitySplit lineality_split(const Polynomial& p) {
  require_quadric(p, "lineality_split");
  const auto q = quadric_data(p);
  const std::size_t n = p.dim();
  RationalMatrix stacked(n + 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) stacked(i, j) = q.a(i, j);
  }
  for (std::size_t j = 0; j < n; ++j) stacked(n, j) = q.b[j];

  LinealitySplit out;
  out.basis = kernel_basis(stacked);
  out.kept = row_reduce(stacked).pivots;
  if (out.kept.empty()) {
    // Constant polynomial: every direction is a lineality direction.
    out.reduced = Polynomial::constant(1, p.constant_term());
    return out;
  }
  std::vector<bool> keep(n, false);
  for (auto i : out.kept) keep[i] = true;
  Polynomial reduced(out.kept.size());
  for (const auto& [e, c] : p.terms()) {
    bool on_subspace = true;
    for (std::size_t i = 0; i < n; ++i) on_subspace = on_subspace && (keep[i] || e[i] == 0);
    if (!on_subspace) continue;
    Exponents re;
    for (auto i : out.kept) re.push_back(e[i]);
    reduced.add_term(re, c);
  }
  out.reduced = std::move(reduced);
  return out;
}

QuadricConsistency predicted_vs_numeric(const Polynomial& p, const QuadricClass& cls, std::uint64_t seed) {
  if (cls.kind != QuadricClass::Kind::Sphere && cls.kind != QuadricClass::Kind::RoundCylinder) {
    throw DomainError("predicted_vs_numeric: class must be a sphere or round cylinder");
  }
  QuadricConsistency out;
  out.predicted = cls.predicted_mean_curvature_abs();
  double offset = 0.0;
  for (const auto& c : cls.center) offset = std::max(offset, std::abs(to_double(c)));
  const double extent = offset + std::sqrt(to_double(cls.radius_sq));
  const auto sampled = sample_variety(p, 50, std::max(5.0, 2.0 * extent), seed);
  if (sampled.points.empty()) throw ValidationError("predicted_vs_numeric: no variety points sampled");
  const CurvatureField field(p);
  for (const auto& x : sampled.points) {
    const double h = std::abs(field.mean_curvature(x));
    out.max_relative_deviation = std::max(out.max_relative_deviation, std::abs(h - out.predicted) / out.predicted);
  }
  out.samples = sampled.points.size();
  return out;
}

}  // namespace hypersurf
