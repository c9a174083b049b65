// Test-side reference computations. Nothing here calls into the library's
// numeric machinery: values come from closed forms, finite differences of
// plain callables, or exact arithmetic on explicitly built coefficients.
#ifndef HYPERSURF_TESTS_ORACLE_HPP
#define HYPERSURF_TESTS_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <vector>

#include "hypersurf/linalg.hpp"
#include "hypersurf/parser.hpp"
#include "hypersurf/polynomial.hpp"

namespace hypersurf {

// Readable gtest failure messages.
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << format(p, VarConvention::automatic(p.dim())); }

}  // namespace hypersurf

namespace oracle {

using Vec = std::vector<double>;
using Field = std::function<double(const Vec&)>;

// Direct term-by-term evaluation with std::pow.
inline double eval(const hypersurf::Polynomial& p, const Vec& x) {
  double s = 0.0;
  for (const auto& [e, c] : p.terms()) {
    double m = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i) m *= std::pow(x[i], static_cast<int>(e[i]));
    s += m;
  }
  return s;
}

inline Field as_field(const hypersurf::Polynomial& p) {
  return [p](const Vec& x) { return eval(p, x); };
}

inline Vec fd_gradient(const Field& f, const Vec& x, double h) {
  Vec g(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Vec a = x, b = x;
    a[i] += h;
    b[i] -= h;
    g[i] = (f(a) - f(b)) / (2 * h);
  }
  return g;
}

// Central difference of the analytic gradient component i along e_j.
inline double fd_partial(const std::function<Vec(const Vec&)>& grad, const Vec& x, std::size_t i, std::size_t j,
                         double h) {
  Vec a = x, b = x;
  a[j] += h;
  b[j] -= h;
  return (grad(a)[i] - grad(b)[i]) / (2 * h);
}

inline double norm(const Vec& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

inline Vec unit_normal(const std::function<Vec(const Vec&)>& grad, const Vec& x) {
  Vec g = grad(x);
  const double n = norm(g);
  for (double& v : g) v /= n;
  return g;
}

// Mean curvature with respect to N = grad/|grad|: H = -div(N)/(dim-1),
// divergence by central differences with step h.
inline double fd_mean_curvature(const std::function<Vec(const Vec&)>& grad, const Vec& x, double h) {
  double div = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    Vec a = x, b = x;
    a[j] += h;
    b[j] -= h;
    div += (unit_normal(grad, a)[j] - unit_normal(grad, b)[j]) / (2 * h);
  }
  return -div / static_cast<double>(x.size() - 1);
}

// Small seeded random polynomials with rational coefficients.
struct PolyGen {
  std::mt19937_64 rng;
  explicit PolyGen(std::uint64_t seed) : rng(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  hypersurf::Rational rational(int range = 9, int max_den = 5) {
    int num = integer(-range, range);
    hypersurf::Rational r(num, integer(1, max_den));
    r.canonicalize();
    return r;
  }

  hypersurf::Rational positive_rational(int max_num, int max_den) {
    hypersurf::Rational r(integer(1, max_num), integer(1, max_den));
    r.canonicalize();
    return r;
  }

  hypersurf::Rational nonzero_rational(int range = 9, int max_den = 5) {
    hypersurf::Rational r;
    do r = rational(range, max_den);
    while (r == 0);
    return r;
  }

  hypersurf::Polynomial polynomial(std::size_t dim, std::uint32_t max_degree, std::size_t terms) {
    hypersurf::Polynomial p(dim);
    for (std::size_t t = 0; t < terms; ++t) {
      hypersurf::Exponents e(dim, 0);
      const auto target = static_cast<std::uint32_t>(integer(0, static_cast<int>(max_degree)));
      for (std::uint32_t d = 0; d < target; ++d) ++e[static_cast<std::size_t>(integer(0, static_cast<int>(dim) - 1))];
      p.add_term(e, nonzero_rational());
    }
    return p;
  }

  hypersurf::RationalVector point(std::size_t dim) {
    hypersurf::RationalVector v(dim);
    for (auto& x : v) x = rational(5, 4);
    return v;
  }
};

// Rational orthogonal matrix: signed permutation composed with Givens
// rotations through Pythagorean angles.
inline hypersurf::RationalMatrix rational_orthogonal(std::size_t n, std::mt19937_64& rng) {
  static const int triples[][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}, {20, 21, 29}};
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  hypersurf::RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, perm[i]) = (rng() & 1) ? 1 : -1;
  const int rotations = static_cast<int>(rng() % 3) + 1;
  for (int r = 0; r < rotations; ++r) {
    const std::size_t i = rng() % n;
    std::size_t j = rng() % n;
    if (i == j) j = (i + 1) % n;
    const auto& t = triples[rng() % 5];
    const hypersurf::Rational c(t[0], t[2]), s(t[1], t[2]);
    hypersurf::RationalMatrix g = hypersurf::RationalMatrix::identity(n);
    g(i, i) = c;
    g(j, j) = c;
    g(i, j) = -s;
    g(j, i) = s;
    m = g * m;
  }
  return m;
}

}  // namespace oracle

#endif
