#ifndef HYPERSURF_POLYNOMIAL_HPP
#define HYPERSURF_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hypersurf/rational.hpp"

namespace hypersurf {

using Exponents = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Exponents& e);

/// Graded lexicographic order with variable 1 highest, as a "greater than"
/// predicate so that map iteration starts at the leading term.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Canonical form: no zero coefficient is ever stored and every exponent
/// vector has length dim(). Two polynomials are equal iff their term maps
/// are equal. Variables are addressed by 0-based index; variable 0 is the
/// x_1 in 1-based notation.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

  explicit Polynomial(std::size_t dim);

  static Polynomial constant(std::size_t dim, const Rational& c);
  static Polynomial variable(std::size_t dim, std::size_t index);
  static Polynomial monomial(std::size_t dim, Exponents exponents, const Rational& c);

  std::size_t dim() const noexcept { return dim_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_homogeneous() const noexcept;

  /// Total degree; std::nullopt for the zero polynomial.
  std::optional<std::uint32_t> degree() const noexcept;
  /// Degree in one variable; 0 for the zero polynomial.
  std::uint32_t degree_in(std::size_t var) const;

  Rational coefficient(const Exponents& e) const;
  /// Constant term.
  Rational constant_term() const;

  /// Sum of absolute coefficient values.
  Rational l1_norm() const;

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  /// Adds c·x^e in place, keeping canonical form.
  void add_term(const Exponents& e, const Rational& c);

 private:
  void check_same_dim(const Polynomial& other) const;

  std::size_t dim_;
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, std::uint32_t exponent);

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Division of p by q viewed as univariate polynomials in main_var with
/// coefficients in the remaining variables. Requires the leading coefficient
/// of q in main_var to be a nonzero constant; then p = q·quotient + remainder
/// with degree_in(main_var) of remainder < that of q, and the pair is unique.
/// Throws DomainError otherwise, DimensionError on dim mismatch.
DivisionResult exact_divide(const Polynomial& p, const Polynomial& q, std::size_t main_var);

/// True when the coefficient of the highest power of var in q is a nonzero constant.
bool has_constant_leading_coefficient(const Polynomial& q, std::size_t var);

/// Q(x) = Σ_{i=0}^{k} (x_{s+i} - a_i)² - r², vanishing on S^k_r(a) × ℝ^{n-k}.
/// s = first_var selects the block of k+1 coordinates that carries the sphere.
struct SphereQuadric {
  std::size_t k = 1;
  RationalVector center;  // length k+1
  Rational radius_sq = 1;
  std::size_t first_var = 0;

  /// Throws DomainError unless k ≥ 1, radius_sq > 0 and the block fits in dim.
  void validate(std::size_t dim) const;
  Polynomial expand(std::size_t dim) const;
};

/// R with p = Q·R when Q divides p exactly, std::nullopt otherwise.
///
/// The sphere block's first coordinate is the division variable; Q is monic
/// in it, so the division is unique and divisibility is decided exactly by a
/// zero remainder. Every p of degree ≥ 2 vanishing on S^k_r(a) × ℝ^{n-k}
/// is divisible.
std::optional<Polynomial> divide_by_sphere_quadric(const Polynomial& p, const SphereQuadric& q);

/// Floating-point image of a Polynomial for repeated evaluation. Terms are
/// summed in the canonical term order so results are deterministic.
class NumericPolynomial {
 public:
  NumericPolynomial() = default;
  explicit NumericPolynomial(const Polynomial& p);

  std::size_t dim() const noexcept { return dim_; }
  double operator()(std::span<const double> x) const;
  /// Σ |c_α| |x^α|, the floating error scale of operator() at x.
  double term_magnitude(std::span<const double> x) const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> coefficients_;
  std::vector<std::uint32_t> exponents_;  // term-major, dim_ per term
};

}  // namespace hypersurf

#endif  // HYPERSURF_POLYNOMIAL_HPP
