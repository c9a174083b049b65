#include "hypersurf/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "hypersurf/error.hpp"

namespace hypersurf {

std::uint32_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw DimensionError("polynomial dimension must be positive");
}

Polynomial Polynomial::constant(std::size_t dim, const Rational& c) {
  Polynomial p(dim);
  p.add_term(Exponents(dim, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("variable index out of range");
  Exponents e(dim, 0);
  e[index] = 1;
  Polynomial p(dim);
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(std::size_t dim, Exponents exponents, const Rational& c) {
  if (exponents.size() != dim) throw DimensionError("exponent vector length differs from dimension");
  Polynomial p(dim);
  p.add_term(exponents, c);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const auto d = total_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return total_degree(t.first) == d; });
}

std::optional<std::uint32_t> Polynomial::degree() const noexcept {
  if (terms_.empty()) return std::nullopt;
  return total_degree(terms_.begin()->first);
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  if (var >= dim_) throw DimensionError("variable index out of range");
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

Rational Polynomial::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Exponents(dim_, 0)); }

Rational Polynomial::l1_norm() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += abs(c);
  return s;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != dim_) throw DimensionError("evaluation point has wrong length");
  std::vector<std::vector<Rational>> powers(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    const auto d = terms_.empty() ? 0u : degree_in(i);
    powers[i].resize(d + 1);
    powers[i][0] = 1;
    for (std::uint32_t k = 1; k <= d; ++k) powers[i][k] = powers[i][k - 1] * point[i];
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (e[i] != 0) term *= powers[i][e[i]];
    }
    sum += term;
  }
  return sum;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (point.size() != dim_) throw DimensionError("evaluation point has wrong length");
  return NumericPolynomial(*this)(point);
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != dim_) throw DimensionError("exponent vector length differs from dimension");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_dim(const Polynomial& other) const {
  if (other.dim_ != dim_) {
    throw DimensionError("polynomial dimensions differ: " + std::to_string(dim_) + " vs " +
                         std::to_string(other.dim_));
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_dim(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_dim(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_dim(b);
  Polynomial out(a.dim_);
  Exponents e(a.dim_);
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.dim_; ++i) e[i] = ea[i] + eb[i];
      prod = ca * cb;
      out.add_term(e, prod);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

Polynomial pow(const Polynomial& p, std::uint32_t exponent) {
  Polynomial result = Polynomial::constant(p.dim(), 1);
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

bool has_constant_leading_coefficient(const Polynomial& q, std::size_t var) {
  if (q.is_zero()) return false;
  const auto d = q.degree_in(var);
  std::size_t count = 0;
  bool pure = true;
  for (const auto& [e, c] : q.terms()) {
    if (e[var] != d) continue;
    ++count;
    pure = pure && total_degree(e) == d;
  }
  return count == 1 && pure;
}

DivisionResult exact_divide(const Polynomial& p, const Polynomial& q, std::size_t main_var) {
  if (p.dim() != q.dim()) throw DimensionError("exact_divide: operand dimensions differ");
  if (main_var >= p.dim()) throw DimensionError("exact_divide: main variable out of range");
  if (!has_constant_leading_coefficient(q, main_var)) {
    throw DomainError("exact_divide: leading coefficient of divisor in x" +
                      std::to_string(main_var + 1) + " is not a nonzero constant");
  }
  const auto dq = q.degree_in(main_var);
  Exponents lead(q.dim(), 0);
  lead[main_var] = dq;
  const Rational lc = q.coefficient(lead);

  DivisionResult out{Polynomial(p.dim()), p};
  Polynomial& r = out.remainder;
  while (!r.is_zero()) {
    const auto dr = r.degree_in(main_var);
    if (dr < dq) break;
    // Leading coefficient of r in main_var, shifted by x^(dr - dq), divided by lc.
    Polynomial step(p.dim());
    for (const auto& [e, c] : r.terms()) {
      if (e[main_var] != dr) continue;
      Exponents shifted = e;
      shifted[main_var] = dr - dq;
      step.add_term(shifted, c / lc);
    }
    out.quotient += step;
    r -= step * q;
  }
  return out;
}

void SphereQuadric::validate(std::size_t dim) const {
  if (k < 1) throw DomainError("sphere quadric requires k >= 1");
  if (center.size() != k + 1) throw DomainError("sphere quadric center must have k+1 coordinates");
  if (radius_sq <= 0) throw DomainError("sphere quadric requires a positive squared radius");
  if (first_var + k + 1 > dim) {
    throw DimensionError("sphere block x" + std::to_string(first_var + 1) + "..x" +
                      std::to_string(first_var + k + 1) + " does not fit in dimension " +
                      std::to_string(dim));
  }
}

Polynomial SphereQuadric::expand(std::size_t dim) const {
  validate(dim);
  Polynomial q = Polynomial::constant(dim, -radius_sq);
  for (std::size_t i = 0; i <= k; ++i) {
    const auto shifted = Polynomial::variable(dim, first_var + i) - Polynomial::constant(dim, center[i]);
    q += shifted * shifted;
  }
  return q;
}

std::optional<Polynomial> divide_by_sphere_quadric(const Polynomial& p, const SphereQuadric& q) {
  const auto divisor = q.expand(p.dim());
  auto [quotient, remainder] = exact_divide(p, divisor, q.first_var);
  if (!remainder.is_zero()) return std::nullopt;
  return std::move(quotient);
}

NumericPolynomial::NumericPolynomial(const Polynomial& p) : dim_(p.dim()) {
  coefficients_.reserve(p.term_count());
  exponents_.reserve(p.term_count() * dim_);
  for (const auto& [e, c] : p.terms()) {
    coefficients_.push_back(to_double(c));
    exponents_.insert(exponents_.end(), e.begin(), e.end());
  }
}

namespace {

inline double monomial_value(const std::uint32_t* e, std::span<const double> x) {
  double m = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::uint32_t k = 0; k < e[i]; ++k) m *= x[i];
  }
  return m;
}

}  // namespace

double NumericPolynomial::operator()(std::span<const double> x) const {
  if (x.size() != dim_) throw DimensionError("evaluation point has wrong length");
  double sum = 0.0;
  for (std::size_t t = 0; t < coefficients_.size(); ++t) {
    sum += coefficients_[t] * monomial_value(&exponents_[t * dim_], x);
  }
  return sum;
}

double NumericPolynomial::term_magnitude(std::span<const double> x) const {
  if (x.size() != dim_) throw DimensionError("evaluation point has wrong length");
  double sum = 0.0;
  for (std::size_t t = 0; t < coefficients_.size(); ++t) {
    sum += std::abs(coefficients_[t] * monomial_value(&exponents_[t * dim_], x));
  }
  return sum;
}

}  // namespace hypersurf
