#include "hypersurf/calculus.hpp"

#include "hypersurf/error.hpp"

namespace hypersurf {

std::vector<std::uint32_t> HomogeneousDecomposition::nonzero_degrees() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < parts.size(); ++i) {
    if (!parts[i].is_zero()) out.push_back(i);
  }
  return out;
}

HomogeneousDecomposition homogeneous_parts(const Polynomial& p) {
  const auto m = p.degree();
  if (!m) throw DomainError("homogeneous_parts: zero polynomial has no decomposition");
  HomogeneousDecomposition out;
  out.degree = *m;
  out.parts.assign(*m + 1, Polynomial(p.dim()));
  for (const auto& [e, c] : p.terms()) out.parts[total_degree(e)].add_term(e, c);
  return out;
}

Polynomial leading_form(const Polynomial& p) { return homogeneous_parts(p).leading(); }

Polynomial derivative(const Polynomial& p, std::size_t var) {
  if (var >= p.dim()) throw DimensionError("derivative: variable out of range");
  Polynomial d(p.dim());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponents lowered = e;
    --lowered[var];
    d.add_term(lowered, c * e[var]);
  }
  return d;
}

std::vector<Polynomial> gradient(const Polynomial& p) {
  std::vector<Polynomial> g;
  g.reserve(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) g.push_back(derivative(p, i));
  return g;
}

std::vector<std::vector<Polynomial>> hessian(const Polynomial& p) {
  const auto g = gradient(p);
  std::vector<std::vector<Polynomial>> h(p.dim(), std::vector<Polynomial>(p.dim(), Polynomial(p.dim())));
  for (std::size_t i = 0; i < p.dim(); ++i) {
    for (std::size_t j = i; j < p.dim(); ++j) {
      h[i][j] = derivative(g[i], j);
      if (j != i) h[j][i] = h[i][j];
    }
  }
  return h;
}

Polynomial laplacian(const Polynomial& p) {
  Polynomial sum(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) sum += derivative(derivative(p, i), i);
  return sum;
}

Polynomial affine_substitute(const Polynomial& p, const RationalMatrix& matrix, const RationalVector& shift) {
  const std::size_t n = p.dim();
  if (matrix.rows() != n || matrix.cols() != n || shift.size() != n) {
    throw DimensionError("affine_substitute: matrix must be dim x dim and shift of length dim");
  }
  // images[i] = (Mx + b)_i and its powers, built lazily up to degree_in(i).
  std::vector<std::vector<Polynomial>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial image = Polynomial::constant(n, shift[i]);
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix(i, j) != 0) image += Polynomial::variable(n, j) * matrix(i, j);
    }
    const auto d = p.degree_in(i);
    powers[i].reserve(d + 1);
    powers[i].push_back(Polynomial::constant(n, 1));
    for (std::uint32_t k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * image);
  }
  Polynomial out(n);
  for (const auto& [e, c] : p.terms()) {
    Polynomial term = Polynomial::constant(n, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] != 0) term *= powers[i][e[i]];
    }
    out += term;
  }
  return out;
}

}  // namespace hypersurf
